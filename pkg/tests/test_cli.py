import json

import pytest

from qcert.cli import main, parse_range


def test_parse_range():
    assert parse_range("8..10") == range(8, 11)
    assert parse_range("27") == range(27, 28)


def test_usage_errors():
    with pytest.raises(SystemExit) as e:
        main(["q4", "--n", "30..10"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["q4", "--family", "X"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main([])
    assert e.value.code == 2


def test_q4_small_run(tmp_path, capsys):
    js, md = tmp_path / "r.jsonl", tmp_path / "r.md"
    assert main(["q4", "--family", "D", "--n", "8..12", "--json", str(js), "--md", str(md)]) == 0
    lines = [json.loads(x) for x in js.read_text().splitlines()]
    assert lines and all(x["verdict"] == "pass" for x in lines)
    assert any(x["check_id"] == "q4.pinned_entry" for x in lines)
    assert "checks passed" in md.read_text()


def test_q6_indefinite_expected():
    assert main(["q6", "--family", "D", "--n", "27..27", "--quiet"]) == 0


def test_linearized_example(tmp_path):
    js = tmp_path / "r.jsonl"
    assert main(["linearized", "--order", "6", "--n", "12", "--k", "2", "--s", "0", "--json", str(js)]) == 0
    rec = json.loads(js.read_text().splitlines()[0])
    assert rec["check_id"] == "linearized.cancellation" and rec["verdict"] == "pass"


def test_deterministic_output(tmp_path):
    outs = []
    for i in range(2):
        js = tmp_path / f"r{i}.jsonl"
        main(["noncompact", "--n", "27..28", "--quiet", "--json", str(js)])
        recs = [json.loads(x) for x in js.read_text().splitlines()]
        for r in recs:
            r.pop("elapsed_ms")
        outs.append(recs)
    assert outs[0] == outs[1]


def test_jobs_preserve_order(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    main(["q4", "--family", "W", "--n", "10..14", "--quiet", "--json", str(a)])
    main(["q4", "--family", "W", "--n", "10..14", "--quiet", "--jobs", "2", "--json", str(b)])
    strip = lambda p: [{k: v for k, v in json.loads(x).items() if k != "elapsed_ms"}  # noqa: E731
                       for x in p.read_text().splitlines()]
    assert strip(a) == strip(b)


def test_failure_exit_code(monkeypatch):
    from qcert import expected

    monkeypatch.setitem(expected.EXPECTED[4], "D", {"pd": (8, 8), "fail": (9, 9), "fail_s": 2})
    # n=9 s=2 is positive definite, so expecting failure there must flip the exit code
    assert main(["q4", "--family", "D", "--n", "9..9", "--quiet"]) == 1


def test_matrix_dump(tmp_path, capsys):
    js = tmp_path / "m.json"
    assert main(["matrix", "--order", "4", "--family", "D", "--n", "8", "--s", "2", "--json", str(js)]) == 0
    assert json.loads(js.read_text())["entries"] == [["320000000000"]]
    assert "320000000000" in capsys.readouterr().out
    assert main(["matrix", "--order", "6", "--family", "H", "--n", "10", "--s", "2"]) == 2


def test_radial_selftest_suite_lists_tasks():
    from qcert import suites

    names = {t[0] for t in suites.radial_suite()}
    assert {"moments", "newbasis", "q6_constants"} <= names
    names = {t[0] for t in suites.all_suite()}
    assert {"q4", "q6", "linearized", "cross_order", "noncompact", "definiteness",
            "fault_rhs", "fault_constants", "fault_matrix"} <= names
