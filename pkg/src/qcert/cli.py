"""Command line front end: qcert <subcommand> [options]."""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import List

from . import suites
from .exactnum import DomainError
from .expected import FAMILIES
from .report import PASS, markdown_summary, to_jsonable


def parse_range(text: str) -> range:
    """'A..B' (inclusive) or a single integer."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B or an integer, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _choice_or_all(options):
    def parse(text):
        if text == "all":
            return tuple(options)
        if text not in options:
            raise argparse.ArgumentTypeError(f"expected one of {', '.join(options)} or all")
        return (text,)
    return parse


def _s_value(text):
    if text == "all":
        return None
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or all, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="write one JSON report per line")
    common.add_argument("--md", metavar="PATH", help="write a Markdown summary table")
    common.add_argument("--jobs", type=int, default=1, metavar="N", help="worker processes")
    common.add_argument("--quiet", action="store_true", help="print only the final tally")

    p = argparse.ArgumentParser(prog="qcert", description="Exact certification of Pohozaev matrices, "
                                "linearized bubble systems and the non-compactness sign conditions.")
    sub = p.add_subparsers(dest="command", required=True)

    for name, lo in (("q4", 8), ("q6", 10)):
        q = sub.add_parser(name, parents=[common], help=f"definiteness scan of the order-{name[1]} matrices")
        q.add_argument("--family", type=_choice_or_all(FAMILIES), default=FAMILIES)
        q.add_argument("--n", type=parse_range, default=range(lo, 49))
        q.add_argument("--s", type=_s_value, default=None)

    lin = sub.add_parser("linearized", parents=[common], help="solve the linearized systems exactly")
    lin.add_argument("--order", type=_choice_or_all(("2", "4", "6")), default=("2", "4", "6"))
    lin.add_argument("--n", type=parse_range, default=range(8, 61))
    lin.add_argument("--k", type=int, default=None)
    lin.add_argument("--s", type=int, default=None)
    lin.add_argument("--cross-order", action="store_true", help="also compare solutions across orders")

    nco = sub.add_parser("noncompact", parents=[common], help="sign conditions for n >= 27")
    nco.add_argument("--n", type=parse_range, default=range(27, 121))
    nco.add_argument("--with-paper-a0-tables", action="store_true",
                     help="cross-check against the transcribed closed-form polynomials")

    sub.add_parser("radial-selftest", parents=[common], help="radial kernel oracles")

    mat = sub.add_parser("matrix", parents=[common], help="print one matrix with exact entries")
    mat.add_argument("--order", type=int, choices=(4, 6), required=True)
    mat.add_argument("--family", choices=FAMILIES, required=True)
    mat.add_argument("--n", type=int, required=True)
    mat.add_argument("--s", type=int, required=True)

    sub.add_parser("all", parents=[common], help="every suite, including engine properties and fault injection")
    return p


def tasks_for(args) -> List[suites.Task]:
    if args.command in ("q4", "q6"):
        return suites.q_suite(int(args.command[1]), args.family, args.n, args.s)
    if args.command == "linearized":
        return suites.linearized_suite(tuple(int(o) for o in args.order), args.n, args.k, args.s,
                                       args.cross_order)
    if args.command == "noncompact":
        return suites.noncompact_suite(args.n, args.with_paper_a0_tables)
    if args.command == "radial-selftest":
        return suites.radial_suite()
    return suites.all_suite()


def run_tasks(tasks, jobs: int):
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            for batch in ex.map(suites.run_task, tasks):
                yield from batch
    else:
        for t in tasks:
            yield from suites.run_task(t)


def dump_matrix(args) -> int:
    from .pohozaev4 import FamilySpec4, matrix_q4
    from .pohozaev6 import FamilySpec6, matrix_q6

    try:
        if args.order == 4:
            M = matrix_q4(FamilySpec4(args.family, args.n, args.s))
        else:
            M = matrix_q6(FamilySpec6(args.family, args.n, args.s))
    except DomainError as exc:
        print(f"qcert matrix: {exc}", file=sys.stderr)
        return 2
    rows = [[str(e.coeff) for e in r] for r in M.entries]
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"order": args.order, "family": args.family, "n": args.n, "s": args.s,
                       "pi_half_power": M.h, "entries": rows}, fh)
            fh.write("\n")
    if not args.quiet:
        print(f"order {args.order}, family {args.family}, n={args.n}, s={args.s}, "
              f"dim {M.dim}, common factor pi^({M.h}/2)")
        for r in rows:
            print("  [" + ", ".join(r) + "]")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.jobs < 1:
        build_parser().error("--jobs must be at least 1")
    if args.command == "matrix":
        return dump_matrix(args)

    t0 = time.perf_counter()
    reports = []
    out = open(args.json, "w") if args.json else None
    try:
        for r in run_tasks(tasks_for(args), args.jobs):
            reports.append(r)
            if out:
                out.write(r.to_json() + "\n")
            if not args.quiet:
                params = " ".join(f"{k}={v}" for k, v in r.params.items() if v is not None)
                line = f"{r.verdict.upper():5} {r.check_id} {params}: {r.actual}"
                if r.verdict != PASS:
                    line += f" (expected {r.expected})"
                print(line, flush=True)
    finally:
        if out:
            out.close()
    if args.md:
        with open(args.md, "w") as fh:
            fh.write(markdown_summary(reports))

    bad = [r for r in reports if r.verdict != PASS]
    elapsed = time.perf_counter() - t0
    print(f"{len(reports) - len(bad)}/{len(reports)} passed, {len(bad)} failed or errored "
          f"({elapsed:.1f} s)")
    if bad and args.quiet:
        for r in bad[:20]:
            print(json.dumps(to_jsonable(r.to_dict()), sort_keys=True))
    return 0 if not bad else 1


if __name__ == "__main__":
    sys.exit(main())
