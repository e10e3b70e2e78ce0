from dataclasses import replace
from fractions import Fraction

import pytest

from algebra.errors import StarAbsent
from config.checks import CHECK_ANCHORS, all_passed, first_failure
from hypergroup.axioms import counit_space, integral_space, verify_faithful
from hypergroup.cointegrals import classify_type, cointegral_space, type_records
from hypergroup.derive import derive_modular_automorphism
from hypergroup.errors import ValidationFailed
from hypergroup.model import QuantumHypergroup, evaluate
from hypergroup.pipeline import axiom_records
from hypergroup.relations import (
    coproduct_is_homomorphism,
    verify_defining_identities,
    verify_hopf_conditions,
    verify_structural_relations,
)
from hypergroup.star import integral_positivity, verify_star_axioms
from linalg.errors import DimensionMismatch
from linalg.matrix import Matrix, basis_vec, vec
from linalg.scalar import Scalar
from linalg.tensor import outer
from parsers.structure_json import import_structure_json

HALF = Fraction(1, 2)


# ============================================================
# S3 // {e, (12)}
# ============================================================

def test_double_coset_structure_constants(s3h12):
    e0, e1 = basis_vec(2, 0), basis_vec(2, 1)
    assert s3h12.coproducts[0] == vec([1, 0, 0, HALF])
    assert s3h12.coproducts[1] == vec([0, 1, 1, HALF])
    assert s3h12.counit == vec([1, 0])
    assert s3h12.left_integral == vec([2, 4])
    assert s3h12.alg.find_unit() == vec([1, 1])
    assert s3h12.alg.multiply(e0, e1) == vec([0, 0])


def test_double_coset_derived_data(s3h12):
    d = s3h12.data
    assert d.S == Matrix.identity(2)
    assert d.psi == vec([2, 4])
    assert d.delta == vec([1, 1])
    assert d.delta_inv == vec([1, 1])
    assert d.sigma == Matrix.identity(2)
    assert d.sigma_prime == Matrix.identity(2)
    assert d.tau == Scalar(1)


def test_double_coset_is_finite_type(s3h12):
    kind = classify_type(s3h12)
    assert kind["compact"] and kind["discrete"] and kind["finite"]
    assert kind["cointegrals"]["left"] == [vec([1, 0])]
    assert all_passed(type_records(s3h12))


def test_double_coset_coproduct_not_homomorphism(s3h12):
    assert not coproduct_is_homomorphism(s3h12)
    assert verify_hopf_conditions(s3h12) == []


def test_double_coset_relations_and_star(s3h12):
    assert all_passed(verify_defining_identities(s3h12))
    assert all_passed(verify_structural_relations(s3h12))
    assert all_passed(verify_star_axioms(s3h12))
    assert integral_positivity(s3h12, s3h12.left_integral)


def test_counit_and_integral_spaces_are_lines(s3h12):
    assert counit_space(s3h12) == [vec([1, 0])]
    left = integral_space(s3h12, "left")
    assert len(left) == 1
    assert left[0][1] == 2 * left[0][0]


# ============================================================
# 스위들러
# ============================================================

def test_sweedler_antipode(sweedler):
    S = sweedler.data.S
    assert S.column(0) == basis_vec(4, 0)
    assert S.column(1) == basis_vec(4, 1)
    assert S.column(2) == vec([0, 0, 0, -1])
    assert S.column(3) == basis_vec(4, 2)
    S2 = S @ S
    assert S2 != Matrix.identity(4)
    assert S2 @ S2 == Matrix.identity(4)


def test_sweedler_integrals_and_modular_data(sweedler):
    d = sweedler.data
    assert sweedler.left_integral == vec([0, 0, 0, 1])
    assert d.psi == vec([0, 0, -1, 0])
    assert d.delta == basis_vec(4, 1)
    assert d.delta_inv == basis_vec(4, 1)
    assert d.tau == Scalar(-1)
    assert d.sigma.apply(d.delta) == vec([0, -1, 0, 0])


def test_sweedler_is_hopf(sweedler):
    assert coproduct_is_homomorphism(sweedler)
    hopf = verify_hopf_conditions(sweedler)
    assert [r["name"] for r in hopf] == ["hopf-left-antipode", "hopf-right-antipode"]
    assert all_passed(hopf)
    assert all_passed(verify_structural_relations(sweedler))


def test_sweedler_cointegral(sweedler):
    kind = classify_type(sweedler)
    assert kind["finite"]
    (h,) = kind["cointegrals"]["left"]
    assert h[0].is_zero() and h[1].is_zero()
    assert h[2] == h[3] and not h[2].is_zero()
    assert not evaluate(sweedler.left_integral, h).is_zero()


def test_sweedler_has_no_star(sweedler):
    with pytest.raises(StarAbsent):
        integral_positivity(sweedler, sweedler.left_integral)


def test_modular_automorphism_dispatch(sweedler):
    d = sweedler.data
    assert derive_modular_automorphism(sweedler, "sigma") == d.sigma
    got = derive_modular_automorphism(sweedler, "sigma_prime", S=d.S, S_inv=d.S_inv, psi=d.psi)
    assert got == d.sigma_prime
    with pytest.raises(ValueError):
        derive_modular_automorphism(sweedler, "rho")


# ============================================================
# 군대수 / 함수대수
# ============================================================

def test_group_algebra_is_unimodular(cs3):
    d = cs3.data
    unit = cs3.alg.find_unit()
    assert d.delta == unit
    assert d.tau == Scalar(1)
    assert d.S @ d.S == Matrix.identity(6)
    assert integral_positivity(cs3, cs3.left_integral)
    assert classify_type(cs3)["finite"]


def test_function_algebra_of_z2(kz2):
    assert kz2.dim == 2
    assert coproduct_is_homomorphism(kz2)
    assert kz2.left_integral == vec([1, 1])
    assert all_passed(verify_hopf_conditions(kz2))


# ============================================================
# 실패 단계
# ============================================================

def _stage_of(data):
    with pytest.raises(ValidationFailed) as info:
        import_structure_json(data)
    return info.value.stage


def test_coassociativity_failure(s3h12_json):
    s3h12_json["comult"][1][1] = "2"
    assert _stage_of(s3h12_json) == "coassociativity"


def test_counit_failure(s3h12_json):
    s3h12_json["counit"] = ["1", "1"]
    assert _stage_of(s3h12_json) == "counit-left"


def test_left_integral_failure(s3h12_json):
    s3h12_json["left_integral"] = ["2", "5"]
    assert _stage_of(s3h12_json) == "left-integral-invariance"


def test_supplied_antipode_mismatch(s3h12_json):
    s3h12_json["antipode"] = [["0", "1"], ["1", "0"]]
    with pytest.raises(ValidationFailed) as info:
        import_structure_json(s3h12_json)
    assert info.value.stage == "antipode-supplied"
    assert info.value.as_dict()["witness"] == {"basis": 0, "component": 0}


def test_right_integral_is_not_left_integral(sweedler_json):
    sweedler_json["left_integral"] = ["0", "0", "-1", "0"]
    assert _stage_of(sweedler_json) == "left-integral-invariance"


def test_non_faithful_integral_is_reported(sweedler):
    recs = verify_faithful(sweedler, vec([1, 0, 0, 0]))
    assert recs[0]["status"] == "fail"
    assert recs[0]["witness"]["kernel_vector"]


def test_axiom_records_have_anchors(s3h12):
    raw = QuantumHypergroup(alg=s3h12.alg, comult=s3h12.comult, counit=s3h12.counit,
                            left_integral=s3h12.left_integral)
    records = axiom_records(raw)
    assert first_failure(records) is None
    assert all(r["anchor"] == CHECK_ANCHORS[r["name"]] for r in records)


def test_data_requires_pipeline(s3h12):
    raw = QuantumHypergroup(alg=s3h12.alg, comult=s3h12.comult, counit=s3h12.counit,
                            left_integral=s3h12.left_integral)
    with pytest.raises(ValidationFailed):
        raw.data


def test_shape_checked_on_construction(s3h12):
    with pytest.raises(DimensionMismatch):
        QuantumHypergroup(alg=s3h12.alg, comult=s3h12.comult, counit=vec([1]),
                          left_integral=s3h12.left_integral)


def test_group_like_tensor(cz2):
    for k in range(2):
        e = basis_vec(2, k)
        assert cz2.coproducts[k] == outer(e, e)


def test_changed_coproduct_breaks_invariance_first(s3h12_json):
    # Δ(e0) 의 e1⊗e1 계수를 1 로: 여전히 결합적이지만 φ 가 불변이 아니다
    s3h12_json["comult"][0][3] = "1"
    assert _stage_of(s3h12_json) == "left-integral-invariance"


def test_corrupted_sigma_breaks_coproduct_twist(s3h12):
    # σ = id 의 (0, 1) 성분 하나를 1 로
    bad = replace(s3h12, derived=replace(s3h12.data, sigma=Matrix([[1, 1], [0, 1]])))
    records = {r["name"]: r for r in verify_structural_relations(bad)}
    twist = records["coproduct-sigma-twist"]
    assert twist["status"] == "fail"
    assert twist["witness"] == {"basis": 0, "component": 2}
    assert records["counit-antipode"]["status"] == "pass"


def test_discrete_type_witness_counts_cointegrals(s3h12, monkeypatch):
    kind = classify_type(s3h12)
    monkeypatch.setattr(
        "hypergroup.cointegrals.classify_type",
        lambda h: {**kind, "discrete": False, "cointegrals": {"left": [], "right": kind["cointegrals"]["right"]}},
    )
    discrete = {r["name"]: r for r in type_records(s3h12)}["discrete-type"]
    assert discrete["status"] == "fail"
    assert discrete["witness"] == {"left_dimension": 0, "right_dimension": 1}
