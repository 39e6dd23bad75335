"""Command line front end tests.

main() is driven in-process with argv lists; stdout is the report JSON.
Exit codes: 0 command ran (verdicts may be false), 1 a verified
property failed, 2 invalid input.
"""

import json

import pytest

from matroidfrag import suites
from matroidfrag.cli import main, run
from matroidfrag.instances import parse_instance

PAIR_PIPELINE = """{
  "field": {"p": 2, "tower": []},
  "matrix": {"rows": ["c"], "cols": ["d", "e"], "entries": [[0, 1]]},
  "task": {"kind": "pipeline",
           "minor": {"rows": ["c"], "cols": ["d"], "entries": [[0]]}}
}"""

ALL_ZERO_XFRAGILE = """{
  "field": {"p": 2, "tower": []},
  "matrix": {"rows": ["c"], "cols": ["d", "e"], "entries": [[0, 0]]},
  "task": {"kind": "xfragile", "x": ["c", "d"]}
}"""


def run_main(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_pipeline_command(tmp_path, capsys):
    path = tmp_path / "inst.json"
    path.write_text(PAIR_PIPELINE)
    code, report = run_main(capsys, ["pipeline", "--input", str(path)])
    assert code == 0
    assert report["verdict"] is True
    assert report["h"] == ["d"]
    assert report["final_degree"] == 2
    assert report["degree_bound"] == 8
    assert report["displayed_basis"] == ["c"]
    assert [s["name"] for s in report["stages"]] == [
        "zero_displayed_block",
        "collapse_loop_side",
        "collapse_coloop_side",
        "relax_entry",
    ]
    assert report["field"] == {"p": 2, "tower": [{"deg": 2, "modulus": [1, 1, 1]}]}


def test_pipeline_conformance_flag(tmp_path, capsys):
    path = tmp_path / "inst.json"
    path.write_text(PAIR_PIPELINE)
    code, report = run_main(capsys, ["pipeline", "--input", str(path), "--conformance"])
    assert code == 0
    assert report["conformance"] is True
    assert report["final_degree"] == report["degree_bound"] == 8


def test_false_verdict_still_exits_zero(tmp_path, capsys):
    path = tmp_path / "inst.json"
    path.write_text(ALL_ZERO_XFRAGILE)
    code, report = run_main(capsys, ["check-xfragile", "--input", str(path)])
    assert code == 0
    assert report["verdict"] is False
    assert report["witness"] == {"kind": "rank_not_increased", "y": ["e"]}


def test_check_xfragile_true_verdict(tmp_path, capsys):
    inst = json.loads(ALL_ZERO_XFRAGILE)
    inst["matrix"]["entries"] = [[0, 1]]
    path = tmp_path / "inst.json"
    path.write_text(json.dumps(inst))
    code, report = run_main(capsys, ["check-xfragile", "--input", str(path)])
    assert code == 0
    assert report["verdict"] is True
    assert report["witness"] is None


def test_check_nfragile_lists_partitions(tmp_path, capsys):
    inst = {
        "field": {"p": 2, "tower": []},
        "matrix": {"rows": ["c"], "cols": ["d", "e"], "entries": [[0, 1]]},
        "task": {"kind": "nfragile",
                 "minor": {"rows": ["c"], "cols": ["d"], "entries": [[0]]}},
    }
    path = tmp_path / "inst.json"
    path.write_text(json.dumps(inst))
    code, report = run_main(capsys, ["check-nfragile", "--input", str(path)])
    assert code == 0
    assert report["verdict"] is True
    assert report["partitions"] == [{"contract": [], "delete": ["e"]}]


def test_relax_command(tmp_path, capsys):
    inst = {
        "field": {"p": 2, "tower": []},
        "matrix": {"rows": ["c"], "cols": ["d", "e"], "entries": [[0, 1]]},
        "task": {"kind": "relax", "contract": [], "delete": ["e"]},
    }
    path = tmp_path / "inst.json"
    path.write_text(json.dumps(inst))
    code, report = run_main(capsys, ["relax", "--input", str(path)])
    assert code == 0
    assert report["h"] == ["d"]
    assert report["relaxation"]["entries"] == [[2, 1]]
    assert report["field"]["tower"] == [{"deg": 2, "modulus": [1, 1, 1]}]


def test_malformed_input_exits_two(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{nope")
    code, report = run_main(capsys, ["pipeline", "--input", str(path)])
    assert code == 2
    assert report["error"]["type"] == "MalformedJson"


def test_missing_file_exits_two(tmp_path, capsys):
    code, report = run_main(capsys, ["pipeline", "--input", str(tmp_path / "nope.json")])
    assert code == 2
    assert report["error"]["type"] == "MalformedJson"


def test_missing_input_flag_exits_two(capsys):
    code, report = run_main(capsys, ["pipeline"])
    assert code == 2
    assert "needs --input" in report["error"]["message"]


def test_task_kind_mismatch_exits_two(tmp_path, capsys):
    path = tmp_path / "inst.json"
    path.write_text(ALL_ZERO_XFRAGILE)
    code, report = run_main(capsys, ["check-nfragile", "--input", str(path)])
    assert code == 2
    assert "task block of kind 'nfragile'" in report["error"]["message"]


def test_max_ground_limit(tmp_path, capsys):
    path = tmp_path / "inst.json"
    path.write_text(PAIR_PIPELINE)
    code, report = run_main(capsys, ["pipeline", "--input", str(path), "--max-ground", "2"])
    assert code == 2
    assert "above --max-ground" in report["error"]["message"]
    assert main(["pipeline", "--input", str(path), "--max-ground", "0"]) == 2
    capsys.readouterr()


def test_non_fragile_instance_exits_two(tmp_path, capsys):
    inst = {
        "field": {"p": 2, "tower": []},
        "matrix": {"rows": ["c"], "cols": ["d", "e"], "entries": [[0, 0]]},
        "task": {"kind": "pipeline",
                 "minor": {"rows": ["c"], "cols": ["d"], "entries": [[0]]}},
    }
    path = tmp_path / "inst.json"
    path.write_text(json.dumps(inst))
    code, report = run_main(capsys, ["pipeline", "--input", str(path)])
    assert code == 2
    assert report["error"]["type"] == "NotFragile"


def test_verify_suite_single(capsys):
    code, report = run_main(capsys, ["verify-suite", "--suite", "field-core"])
    assert code == 0
    assert report["result"]["suite"] == "field-core"
    assert report["result"]["ok"] is True
    assert report["result"]["failures"] == []


def test_verify_suite_failure_exits_one(monkeypatch):
    # exit 1 is reserved for failed property verification, which a
    # correct build cannot produce; stub a failing suite to cover it
    monkeypatch.setitem(
        suites.SUITES, "field-core",
        lambda seed: {"suite": "field-core", "seed": seed, "checked": 1,
                      "failures": [{"boom": True}], "ok": False, "timing_ms": 0.0},
    )
    report, code = run("verify-suite", None, suite="field-core")
    assert code == 1
    assert report["result"]["ok"] is False


def test_postcondition_violation_exits_one(tmp_path, monkeypatch):
    from matroidfrag import cli
    from matroidfrag.errors import PostconditionViolation

    def boom(M, C, D, *, degree_cap=16, cap=12):
        raise PostconditionViolation("stub")

    monkeypatch.setattr(cli, "relax_entry", boom)
    inst = parse_instance(json.dumps({
        "field": {"p": 2, "tower": []},
        "matrix": {"rows": ["c"], "cols": ["d", "e"], "entries": [[0, 1]]},
        "task": {"kind": "relax", "contract": [], "delete": ["e"]},
    }))
    report, code = run("relax", inst)
    assert code == 1
    assert report["verdict"] is False
    assert report["error"]["type"] == "PostconditionViolation"


def test_report_flag_writes_stdout_text(tmp_path, capsys):
    path = tmp_path / "inst.json"
    path.write_text(PAIR_PIPELINE)
    out_path = tmp_path / "report.json"
    code = main(["pipeline", "--input", str(path), "--report", str(out_path)])
    printed = capsys.readouterr().out
    assert code == 0
    assert out_path.read_text() == printed.rstrip("\n") + "\n"


def test_reports_are_canonical_across_runs(tmp_path, capsys):
    path = tmp_path / "inst.json"
    path.write_text(PAIR_PIPELINE)
    reports = []
    for _ in range(2):
        _, report = run_main(capsys, ["pipeline", "--input", str(path)])
        reports.append(suites.canonical_report(report))
    assert reports[0] == reports[1]


def test_unknown_suite_exits_two(capsys):
    with pytest.raises(SystemExit):
        main(["verify-suite", "--suite", "nope"])  # argparse rejects the choice
    capsys.readouterr()
    report, code = run("verify-suite", None, suite="nope")
    assert code == 2
    assert report["error"]["type"] == "InvalidArgs"
