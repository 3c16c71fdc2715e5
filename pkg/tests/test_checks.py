import json
from pathlib import Path

import pytest

from genpos.checks import REGISTRY, Budget, reports_to_json, reports_to_markdown, run_checks, select
from genpos.errors import UnknownClaimId

README = Path(__file__).resolve().parents[1] / "README.md"


def test_selection_patterns():
    assert select(["thm-3.1-*"]) == ["thm-3.1-lower-bound", "thm-3.1-equality"]
    assert select(["*"]) == list(REGISTRY)
    with pytest.raises(UnknownClaimId):
        select(["no-such-id"])


def test_strong_grid_claim():
    reports = run_checks(["eq-1-strong-grid"])
    assert len(reports) == 25
    assert all(r.passed and r.computed == 4 for r in reports)


def test_thm_3_1_claims_cover_143_graphs():
    reports = run_checks(["thm-3.1-*"])
    assert [r.claim_id for r in reports] == ["thm-3.1-lower-bound", "thm-3.1-equality"]
    assert all(r.params["graphs"] == 143 and r.passed for r in reports)


def test_reports_are_deterministic_across_jobs():
    ids = ["realization", "prop-corona", "thm-blow-up"]
    one = json.dumps(reports_to_json(run_checks(ids, jobs=1)))
    two = json.dumps(reports_to_json(run_checks(ids, jobs=2)))
    assert one == two
    assert one == json.dumps(reports_to_json(run_checks(ids, jobs=1)))


def test_smaller_budget():
    reports = run_checks(["thm-3.1-lower-bound"], Budget(exhaustive_n=4))
    assert reports[0].params["graphs"] == 1 + 1 + 2 + 6


def test_json_schema_and_markdown():
    reports = run_checks(["krt-times-kn"])
    doc = reports_to_json(reports)
    assert doc["schema"] == 1
    assert list(doc["reports"][0]) == ["claim_id", "params", "expected", "computed", "verdict"]
    assert "runtime_ms" in reports_to_json(reports, timings=True)["reports"][0]
    md = reports_to_markdown(reports)
    assert md.count("\n") == 2 + len(reports)


def test_every_claim_is_documented():
    text = README.read_text()
    for cid in REGISTRY:
        assert f"| `{cid}` |" in text, cid
