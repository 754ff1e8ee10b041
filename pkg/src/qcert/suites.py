"""Check suites behind the command line front end.

A suite is a list of tasks; a task is a (name, args) pair naming a module-level
function below that returns a list of reports. Keeping tasks as plain tuples
lets them be shipped to worker processes unchanged.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Dict, List, Sequence, Tuple

from . import noncompact as nc
from .definiteness import (
    PD, PSD_SINGULAR, classify, charpoly, float_sanity, leading_minors, sign_counts,
)
from .exactnum import ScaledRational, SymMatrix
from .expected import FAMILIES
from .linsys import (
    ProblemIndex, admissible_grid, certify_cancellation, check_columns, check_cross_order,
    rhs_vector, solve_gamma,
)
from .pohozaev4 import FamilySpec4, family_specs as specs4, matrix_q4
from .pohozaev6 import (
    FamilySpec6, family_specs as specs6, matrix_q6, radial_constants,
    radial_constants_by_integration,
)
from .radial import (
    RadialExpr, check_moment_recurrences, check_newbasis, integrate_moment, radial_integral,
)
from .report import ERROR, FAIL, PASS, VerificationReport, run_check
from .scan import certify_matrix

Task = Tuple[str, tuple]

PINNED_Q4_D8 = 32 * 10**10
PINNED_GAMMA = (Fraction(-1, 8), Fraction(-1, 16), Fraction(-1, 36))


def _simple(check_id: str, params: dict, ok: bool, expected: str, actual: str, witness=None):
    return VerificationReport(check_id, params, PASS if ok else FAIL, expected, actual,
                              witness if not ok else None)


# -- Pohozaev matrices ------------------------------------------------------

def task_q4(family: str, n: int, s_filter) -> List[VerificationReport]:
    return [certify_matrix("q4.definiteness", 4, spec, matrix_q4)
            for spec in specs4(family, n) if s_filter is None or spec.s == s_filter]


def task_q6(family: str, n: int, s_filter) -> List[VerificationReport]:
    return [certify_matrix("q6.definiteness", 6, spec, matrix_q6)
            for spec in specs6(family, n) if s_filter is None or spec.s == s_filter]


def pinned_q4_report(M: SymMatrix | None = None) -> VerificationReport:
    """The D family at n=8, s=2 is the 1x1 matrix [32 * 10^10]."""
    params = {"order": 4, "family": "D", "n": 8, "s": 2}

    def go():
        A = matrix_q4(FamilySpec4("D", 8, 2)) if M is None else M
        # hand substitution: c1 = 1120, c2 = 2240, prefactor 1/105, theta = 1 so N0 replaces I
        want = Fraction(1, 105) * (1120 + 2240) * 10**10
        assert want == PINNED_Q4_D8
        ok = A.dim == 1 and A.h == 0 and A[0, 0].coeff == want
        actual = [[str(e.coeff) for e in r] for r in A.entries]
        return _simple("q4.pinned_entry", params, ok, str(want), str(actual), {"matrix": actual})

    return run_check("q4.pinned_entry", params, go)


def task_q4_pinned() -> List[VerificationReport]:
    return [pinned_q4_report()]


# -- linearized systems -----------------------------------------------------

def task_linearized(order: int, n: int, k, s) -> List[VerificationReport]:
    out = []
    idxs = [i for i in admissible_grid(order, n)
            if (k is None or i.k == k) and (s is None or i.s == s)]
    for idx in idxs:
        params = {"order": idx.order, "n": idx.n, "k": idx.k, "s": idx.s}
        out.append(run_check("linearized.cancellation", params, lambda idx=idx: certify_cancellation(idx)))
    if idxs:
        params = {"order": order, "n": n, "k": k, "s": s}

        def columns():
            bad = [(i.k, i.s) for i in idxs if not check_columns(i)]
            return _simple("linearized.newbasis_columns", params, not bad,
                           f"{len(idxs)} systems match the radial kernel",
                           f"{len(idxs) - len(bad)} match", {"mismatched_k_s": bad})

        out.append(run_check("linearized.newbasis_columns", params, columns))
    return out


def task_cross_order(n: int, k, s) -> List[VerificationReport]:
    out = []
    for idx in admissible_grid(6, n):
        if (k is not None and idx.k != k) or (s is not None and idx.s != s):
            continue
        params = {"n": n, "k": idx.k, "s": idx.s}

        def go(idx=idx, params=params):
            ok = check_cross_order(n, idx.k, idx.s)
            return _simple("linearized.cross_order", params, ok, "equal across orders 2, 4, 6",
                           "equal" if ok else "different",
                           {"gamma": {o: solve_gamma(ProblemIndex(o, n, idx.k, idx.s)).gamma
                                      for o in (2, 4, 6)}})

        out.append(run_check("linearized.cross_order", params, go))
    return out


def task_pinned_gamma() -> List[VerificationReport]:
    params = {"order": 4, "n": 10, "k": 2, "s": 0}

    def go():
        g = solve_gamma(ProblemIndex(4, 10, 2, 0)).gamma
        return _simple("linearized.pinned_gamma", params, tuple(g) == PINNED_GAMMA,
                       str([str(x) for x in PINNED_GAMMA]), str([str(x) for x in g]), {"gamma": g})

    return [run_check("linearized.pinned_gamma", params, go)]


# -- radial kernel ----------------------------------------------------------

def task_radial_examples() -> List[VerificationReport]:
    cases = [((1, 2), ScaledRational(Fraction(1, 2))), ((0, 1), ScaledRational(Fraction(1, 2), 2)),
             ((3, 3), ScaledRational(Fraction(1, 4)))]
    out = []
    for (i, j), want in cases:
        params = {"i": i, "j": j}
        out.append(run_check("radial.integral", params, lambda i=i, j=j, want=want, params=params: _simple(
            "radial.integral", params, radial_integral(i, j) == want, str(want), str(radial_integral(i, j)))))
    return out


def moment_l_range(n: int) -> range:
    """Every l for which all members of the recurrences converge."""
    return range(0, 2 * n - 3)


def task_moments(n: int) -> List[VerificationReport]:
    params = {"n": n}

    def go():
        bad = [l for l in moment_l_range(n) if not check_moment_recurrences(n, l)]
        return _simple("radial.moment_recurrences", params, not bad,
                       f"all l in 0..{2 * n - 4}", "all hold" if not bad else f"fail at l={bad}",
                       {"l": bad})

    return [run_check("radial.moment_recurrences", params, go)]


def task_newbasis(n: int) -> List[VerificationReport]:
    params = {"n": n}

    def go():
        bad = [(str(Fraction(a2, 2)), b, p) for a2 in range(1, 25) for b in range(9) for p in (1, 2, 3)
               if not check_newbasis(Fraction(a2, 2), b, n, p)]
        return _simple("radial.newbasis", params, not bad, "a in 1/2..12, b in 0..8, p in 1..3",
                       "all match" if not bad else f"{len(bad)} mismatches", {"a_b_p": bad})

    return [run_check("radial.newbasis", params, go)]


def task_fundamental(n: int) -> List[VerificationReport]:
    """The integral of d/dr (r^m f) vanishes for decaying f."""
    params = {"n": n}

    def go():
        bad = []
        for a in range(2 * n, 2 * n + 8, 2):
            for m in range(1, a - 1):
                f = RadialExpr.term(1, m, a)
                if integrate_moment(f.deriv(), 0) != ScaledRational(Fraction(0)):
                    bad.append((m, a))
        return _simple("radial.fundamental_theorem", params, not bad, "zero", "zero" if not bad else "nonzero",
                       {"m_a": bad})

    return [run_check("radial.fundamental_theorem", params, go)]


def q6_constants_report(n: int, S: int, perturb: int | None = None) -> VerificationReport:
    """Closed-form c1..c6 against integration of their integrands; perturb adds 1 to one c_i."""
    params = {"n": n, "k+m": S}

    def go():
        closed = radial_constants(n, S)
        if perturb is not None:
            c = closed[perturb]
            closed[perturb] = ScaledRational(c.coeff + 1, c.pi_half_power)
        integ = radial_constants_by_integration(n, S)
        bad = [i + 1 for i, (x, y) in enumerate(zip(closed, integ)) if x != y]
        return _simple("q6.radial_constants", params, not bad, "closed forms equal integrals",
                       "equal" if not bad else f"differ at c{bad}",
                       {"closed": closed, "integrated": integ})

    return run_check("q6.radial_constants", params, go)


def q6_constant_sums(n: int) -> List[int]:
    """Even k+m for which the Q6 constants enter a matrix at dimension n off the log branch."""
    d = (n - 6) // 2
    return [S for S in range(4, 2 * d + 1, 2) if S != n - 6]


def task_q6_constants(n: int) -> List[VerificationReport]:
    return [q6_constants_report(n, S) for S in q6_constant_sums(n)]


# -- noncompact -------------------------------------------------------------

def task_noncompact(n: int, with_tables: bool) -> List[VerificationReport]:
    out = [run_check("noncompact.delta_direction", {"n": n}, lambda: nc.verify_delta_direction(n)),
           run_check("noncompact.hessian", {"n": n}, lambda: nc.verify_hessian(n)),
           run_check("noncompact.n52", {"n": n}, lambda: nc.verify_n52_remark(n))]
    for k in range(2, 11, 2):
        for m in range(2, 11, 2):
            out.append(run_check("noncompact.k_plus_m", {"n": n, "k": k, "m": m},
                                 lambda k=k, m=m: nc.verify_k_plus_m_relation(n, k, m)))
    for S in (4, 12, 20):
        out.append(run_check("noncompact.hessian_constants", {"n": n, "k+m": S},
                             lambda S=S: nc.verify_constants(n, S)))
    if with_tables:
        out.append(run_check("noncompact.tables", {"n": n}, lambda: nc.verify_tables(n)))
    return out


# -- definiteness engine properties ----------------------------------------

def _random_matrix(rng: random.Random, kind: str, dim: int) -> List[List[Fraction]]:
    def r():
        return Fraction(rng.randint(-9, 9), rng.randint(1, 5))

    if kind == "gram":
        G = [[r() for _ in range(dim)] for _ in range(rng.randint(1, dim))]
        return [[sum((G[t][i] * G[t][j] for t in range(len(G))), Fraction(0)) for j in range(dim)]
                for i in range(dim)]
    A = [[r() for _ in range(dim)] for _ in range(dim)]
    M = [[A[i][j] + A[j][i] for j in range(dim)] for i in range(dim)]
    if kind == "shifted":
        shift = Fraction(rng.randint(0, 40))
        for i in range(dim):
            M[i][i] += shift
    return M


def _check_one(M: List[List[Fraction]], rng: random.Random) -> Tuple[List[str], bool | None]:
    """Names of the properties violated by M, and the float check's answer."""
    problems = []
    v = classify(M)
    counts = sign_counts(charpoly(M))
    minors = leading_minors(M)
    sylvester_pd = all(m > 0 for m in minors)
    if counts != v.eigen_sign_counts or sylvester_pd != (counts[0] == counts[1] == 0):
        problems.append("sturm_vs_sylvester")
    c = Fraction(rng.randint(1, 50), rng.randint(1, 50))
    if classify([[c * x for x in row] for row in M]).eigen_sign_counts != v.eigen_sign_counts:
        problems.append("scaling")
    perm = list(range(len(M)))
    rng.shuffle(perm)
    P = [[M[perm[i]][perm[j]] for j in range(len(M))] for i in range(len(M))]
    if classify(P).eigen_sign_counts != v.eigen_sign_counts:
        problems.append("permutation")
    fs = float_sanity(M)
    if fs is False:
        problems.append("float_sanity")
    return problems, fs


def task_definiteness(seed: int, count: int) -> List[VerificationReport]:
    """count random symmetric matrices of dimension 1..8 from one seed."""
    params = {"seed": seed, "count": count}

    def go():
        rng = random.Random(seed)
        failures, abstained = [], 0
        for t in range(count):
            kind = ("gram", "shifted", "random")[t % 3]
            M = _random_matrix(rng, kind, rng.randint(1, 8))
            probs, fs = _check_one(M, rng)
            if kind == "gram" and classify(M).classification not in (PD, PSD_SINGULAR):
                probs.append("gram_not_psd")
            if fs is None:
                abstained += 1
            if probs:
                failures.append({"index": t, "kind": kind, "problems": probs, "matrix": M})
        return VerificationReport(
            "definiteness.properties", params, PASS if not failures else FAIL,
            expected="all properties hold",
            actual=f"{count - len(failures)}/{count} hold; float check abstained on {abstained}",
            witness={"failures": failures[:5]} if failures else None,
        )

    return [run_check("definiteness.properties", params, go)]


# -- fault injection --------------------------------------------------------

def _injected(check_id: str, params: dict, baseline: VerificationReport, faulty: VerificationReport):
    ok = baseline.verdict == PASS and faulty.verdict in (FAIL, ERROR)
    return VerificationReport(
        check_id, params, PASS if ok else FAIL,
        expected="baseline passes, perturbed run does not",
        actual=f"baseline {baseline.verdict}, perturbed {faulty.verdict}",
        witness=None if ok else {"baseline": baseline.to_dict(), "perturbed": faulty.to_dict()},
    )


def task_fault_rhs(order: int, n: int, k: int, s: int) -> List[VerificationReport]:
    idx = ProblemIndex(order, n, k, s)
    base = certify_cancellation(idx)
    b = list(rhs_vector(idx).entries)
    out = []
    for i in range(len(b)):
        bb = list(b)
        bb[i] += 1
        out.append(_injected("faults.rhs_entry", {"order": order, "n": n, "k": k, "s": s, "entry": i + 1},
                             base, run_check("linearized.cancellation", {}, lambda bb=bb: certify_cancellation(idx, bb))))
    return out


def task_fault_constants(n: int, S: int) -> List[VerificationReport]:
    base = q6_constants_report(n, S)
    return [_injected("faults.radial_constant", {"n": n, "k+m": S, "c": i + 1}, base,
                      q6_constants_report(n, S, perturb=i)) for i in range(6)]


def task_fault_matrix() -> List[VerificationReport]:
    """+1 on the pinned entry, and +1 on a single off-diagonal entry of a larger matrix."""
    out = []
    M = matrix_q4(FamilySpec4("D", 8, 2))
    bumped = SymMatrix([[ScaledRational(M[0, 0].coeff + 1, M[0, 0].pi_half_power)]])
    out.append(_injected("faults.matrix_entry", {"order": 4, "family": "D", "n": 8, "s": 2, "entry": "1,1"},
                         pinned_q4_report(), pinned_q4_report(bumped)))
    spec = FamilySpec6("D", 20, 2)

    def bump(sp):
        A = matrix_q6(sp)
        rows = [list(r) for r in A.entries]
        rows[0][1] = ScaledRational(rows[0][1].coeff + 1, rows[0][1].pi_half_power)
        return SymMatrix(rows)

    out.append(_injected("faults.matrix_entry", {"order": 6, "family": "D", "n": 20, "s": 2, "entry": "1,2"},
                         certify_matrix("q6.definiteness", 6, spec, matrix_q6),
                         certify_matrix("q6.definiteness", 6, spec, bump)))
    return out


FAULT_RHS_SAMPLE = ((2, 14, 6, 1), (4, 20, 8, 2), (6, 24, 10, 3))
FAULT_CONST_SAMPLE = ((12, 4), (20, 10), (26, 16))


TASKS: Dict[str, Callable[..., List[VerificationReport]]] = {
    name[len("task_"):]: fn for name, fn in list(globals().items()) if name.startswith("task_")
}


def run_task(task: Task) -> List[VerificationReport]:
    name, args = task
    return TASKS[name](*args)


# -- suite builders ---------------------------------------------------------

def q_suite(order: int, families: Sequence[str], n_range, s_filter=None) -> List[Task]:
    lo = 8 if order == 4 else 10
    tasks = [(f"q{order}", (f, n, s_filter)) for f in families for n in n_range if n >= lo]
    if order == 4 and "D" in families and 8 in n_range and s_filter in (None, 2):
        tasks.append(("q4_pinned", ()))
    return tasks


def linearized_suite(orders, n_range, k=None, s=None, cross_order=False) -> List[Task]:
    tasks = [("linearized", (o, n, k, s)) for o in orders for n in n_range]
    if cross_order:
        tasks += [("cross_order", (n, k, s)) for n in n_range]
    if 4 in orders and 10 in n_range and k in (None, 2) and s in (None, 0):
        tasks.append(("pinned_gamma", ()))
    return tasks


def radial_suite() -> List[Task]:
    tasks = [("radial_examples", ())]
    tasks += [("moments", (n,)) for n in range(3, 41)]
    tasks += [("newbasis", (n,)) for n in range(8, 31)]
    tasks += [("fundamental", (n,)) for n in (3, 10, 20)]
    tasks += [("q6_constants", (n,)) for n in range(10, 27)]
    return tasks


def noncompact_suite(n_range, with_tables=False) -> List[Task]:
    return [("noncompact", (n, with_tables)) for n in n_range]


def definiteness_suite(total: int = 1000, block: int = 100) -> List[Task]:
    return [("definiteness", (seed, min(block, total - seed * block)))
            for seed in range((total + block - 1) // block)]


def fault_suite() -> List[Task]:
    tasks = [("fault_rhs", args) for args in FAULT_RHS_SAMPLE]
    tasks += [("fault_constants", args) for args in FAULT_CONST_SAMPLE]
    tasks.append(("fault_matrix", ()))
    return tasks


def all_suite() -> List[Task]:
    tasks = q_suite(4, FAMILIES, range(8, 49)) + q_suite(6, FAMILIES, range(10, 49))
    tasks += linearized_suite((2, 4, 6), range(8, 61), cross_order=True)
    tasks += radial_suite()
    tasks += noncompact_suite(range(27, 121), with_tables=True)
    tasks += definiteness_suite()
    tasks += fault_suite()
    return tasks
