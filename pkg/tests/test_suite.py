import pytest

from analysis.suite import (
    LEVELS,
    derived_summary,
    failure_record,
    input_digest,
    make_report,
    run_suite,
    type_label,
)
from config.checks import CHECK_ANCHORS, first_failure
from hypergroup.errors import DualVerificationFailed, ModularIdentityFailed, ValidationFailed


def test_levels():
    assert LEVELS == ("axioms", "derived", "full")
    with pytest.raises(ValueError):
        run_suite({}, "everything")


def test_axioms_level_stops_early(s3h12_json):
    result = run_suite(s3h12_json, "axioms")
    assert result.passed
    assert result.hypergroup is None
    assert result.summary == {"dim": 2}
    assert "antipode-bijective" not in {r["name"] for r in result.records}


def test_derived_level_has_summary_but_no_dual(s3h12_json):
    result = run_suite(s3h12_json, "derived")
    assert result.passed
    assert result.dual is None
    assert result.summary["tau"] == "1"
    assert result.summary["delta"] == ["1", "1"]
    assert "dual" not in result.summary
    assert "antipode-supplied" in {r["name"] for r in result.records}


def test_full_suite_on_double_coset(s3h12_json):
    result = run_suite(s3h12_json, "full")
    assert first_failure(result.records) is None
    summary = result.summary
    assert summary["type"] == {"unital": True, "compact": True, "discrete": True, "finite": True}
    assert summary["coproduct_homomorphism"] is False
    assert summary["positivity"] == {"phi": True, "psi": True}
    assert summary["dual"]["delta_functional"] == ["1", "0"]
    assert summary["multiplier_collapse"] is True
    names = [r["name"] for r in result.records]
    assert len(names) == len(set(names))
    assert "bidual-integral" in names
    assert "radford-antipode-fourth" in names


def test_full_suite_on_sweedler(sweedler_json):
    result = run_suite(sweedler_json, "full")
    assert result.passed
    summary = result.summary
    assert summary["tau"] == "-1"
    assert summary["antipode_square_identity"] is False
    assert summary["coproduct_homomorphism"] is True
    assert "positivity" not in summary
    assert {"hopf-left-antipode", "hopf-right-antipode"} <= {r["name"] for r in result.records}


def test_axiom_failure_becomes_record(s3h12_json):
    s3h12_json["comult"][1][1] = "2"
    result = run_suite(s3h12_json, "full")
    assert not result.passed
    assert first_failure(result.records)["name"] == "coassociativity"
    assert result.hypergroup is None


def test_derivation_failure_becomes_record(s3h12_json):
    s3h12_json["antipode"] = [["0", "1"], ["1", "0"]]
    result = run_suite(s3h12_json, "derived")
    bad = first_failure(result.records)
    assert bad["name"] == "antipode-supplied"
    assert bad["anchor"] == CHECK_ANCHORS["antipode-supplied"]


def test_failure_record_mapping():
    rec = failure_record(ModularIdentityFailed("x", stage="modular-element-counit", witness={"v": 1}))
    assert rec["name"] == "modular-element-counit"
    assert rec["witness"] == {"v": 1}
    rec = failure_record(DualVerificationFailed("x", stage="dual:coassociativity"))
    assert rec["name"] == "dual-hypergroup"
    assert rec["witness"]["stage"] == "coassociativity"
    rec = failure_record(ValidationFailed("x", stage="somewhere-else"))
    assert rec["name"] == "pipeline"
    assert rec["status"] == "fail"


def test_report_is_deterministic(s3h12_json):
    a = make_report(s3h12_json, run_suite(s3h12_json, "derived"))
    b = make_report(s3h12_json, run_suite(s3h12_json, "derived"))
    assert a == b
    assert a["status"] == "pass"
    assert a["tool"] == "qhg"
    assert len(a["input_digest"]) == 64
    assert input_digest(s3h12_json) == a["input_digest"]


def test_summary_helpers(s3h12, sweedler):
    summary = derived_summary(s3h12)
    assert summary["labels"] == ["[e]", "[(13)]"]
    assert summary["cointegrals"]["left"] == [["1", "0"]]
    assert type_label(summary) == "finite"
    assert type_label({"type": {"compact": True}}) == "compact"
    assert type_label({"type": {"discrete": True}}) == "discrete"
    assert type_label({}) == "general"
    assert derived_summary(sweedler)["antipode"][2] == ["0", "0", "0", "1"]
