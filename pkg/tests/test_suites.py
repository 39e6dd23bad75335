"""Suite runner plumbing.  The suites themselves run at full size in
test_acceptance.py; here only the report shape and the dispatch."""

import json

import pytest

from matroidfrag import InvalidArgs
from matroidfrag.suites import SUITES, canonical_report, field_core, run_suite


def test_report_shape():
    report = field_core(seed=3)
    assert report["suite"] == "field-core"
    assert report["seed"] == 3
    assert report["ok"] is True
    assert report["failures"] == []
    assert report["checked"] > 0
    assert isinstance(report["timing_ms"], float)


def test_canonical_report_strips_timing():
    report = field_core(seed=0)
    canon = canonical_report(report)
    assert "timing_ms" not in canon
    assert json.loads(canon)["suite"] == "field-core"
    # compact separators, sorted keys
    assert ": " not in canon and canon.startswith('{"checked"')


def test_run_suite_dispatch():
    assert set(SUITES) == {
        "field-core",
        "isolated-minor",
        "zeroed-block",
        "free-placement",
        "entry-relaxation",
        "pipeline",
        "structural",
        "determinism",
    }
    report = run_suite("field-core", seed=1)
    assert report["suite"] == "field-core" and report["ok"]
    with pytest.raises(InvalidArgs):
        run_suite("nope")
