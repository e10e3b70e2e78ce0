from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from config.checks import all_passed
from constructions.compression import (
    compress,
    group_like_projection_compression,
    hecke_isomorphism_check,
    hecke_unit,
    projection_records,
)
from constructions.double_coset import coset_coefficients, double_coset_hypergroup
from constructions.errors import NotAGroup, NotAProjection, NotASubgroup, NotGroupLike
from constructions.group_algebra import group_from_algebra
from constructions.groups import (
    cyclic_group,
    dihedral_group,
    double_cosets,
    group_from_table,
    is_normal,
    subgroup_check,
    subgroup_from_labels,
    symmetric_group,
)
from constructions.sweedler import LABELS, sweedler_algebra
from hypergroup.cointegrals import classify_type
from linalg.matrix import basis_vec, vec
from linalg.scalar import Scalar
from parsers.errors import SchemaError
from parsers.group_json import load_group, load_subgroup, named_group

HALF = Fraction(1, 2)


# ============================================================
# 군
# ============================================================

def test_symmetric_group_order_and_labels(s3):
    assert s3.labels == ("e", "(12)", "(13)", "(23)", "(123)", "(132)")
    assert s3.identity == 0
    assert s3.mul(1, 2) == 5
    assert s3.inverse == (0, 1, 2, 3, 5, 4)
    s4 = symmetric_group(4)
    assert s4.order == 24
    assert s4.labels[:2] == ("e", "(12)")


def test_bundled_tables_match_generators(s3, d4):
    assert load_group("s3") == s3
    assert load_group("d4") == d4
    assert load_group("z2") == cyclic_group(2)


@settings(max_examples=20)
@given(st.integers(min_value=1, max_value=6))
def test_generated_groups_are_groups(m):
    for G in (cyclic_group(m), dihedral_group(m)):
        assert G.cayley[G.identity] == tuple(range(G.order))
        assert all(G.mul(p, G.inverse[p]) == G.identity for p in range(G.order))
    assert dihedral_group(m).order == 2 * m


def test_dihedral_relation_and_named_groups():
    D5 = dihedral_group(5)
    r, s = D5.index("r"), D5.index("s")
    assert D5.mul(D5.mul(s, r), s) == D5.inverse[r]
    assert D5.labels[6] == "rs"
    assert load_group("s4") == symmetric_group(4)
    assert load_group("d5") == D5
    assert load_group("z7").order == 7
    assert named_group("q3") is None
    with pytest.raises(SchemaError):
        load_group("s0")


@pytest.mark.parametrize("table, axiom", [
    ({"elements": ["e", "a"], "table": [[0, 2], [1, 0]]}, "closure"),
    ({"elements": ["e", "e"], "table": [[0, 1], [1, 0]]}, "labels"),
    ({"elements": ["a", "b", "c"], "table": [[0, 1, 2], [1, 0, 0], [2, 0, 0]]}, "associativity"),
    ({"elements": ["a", "b"], "table": [[0, 0], [0, 0]]}, "identity"),
    ({"elements": ["e", "a"], "table": [[0, 1], [1, 1]]}, "inverse"),
])
def test_group_axiom_failures(table, axiom):
    with pytest.raises(NotAGroup) as info:
        group_from_table(table)
    assert info.value.axiom == axiom
    assert info.value.stage == f"group-{axiom}"


def test_subgroups(s3):
    assert subgroup_from_labels(s3, ["(13)", "e"]) == (0, 2)
    assert subgroup_from_labels(s3, [0, 4, 5]) == (0, 4, 5)
    assert not subgroup_check(s3, ["e", "(12)", "(13)"])
    with pytest.raises(NotASubgroup):
        subgroup_from_labels(s3, ["e", "(12)", "(13)"])
    with pytest.raises(NotASubgroup):
        subgroup_from_labels(s3, ["e", "x"])
    with pytest.raises(NotASubgroup):
        subgroup_from_labels(s3, [])


def test_load_subgroup_from_bundled_file(s3):
    assert load_subgroup("h12", s3) == (0, 1)
    assert load_subgroup("a3", s3) == (0, 4, 5)
    assert load_subgroup({"members": ["e"]}, s3) == (0,)


def test_double_cosets_and_normality(s3, d4):
    assert double_cosets(s3, (0, 1)) == [(0, 1), (2, 3, 4, 5)]
    assert double_cosets(s3, (0, 4, 5)) == [(0, 4, 5), (1, 2, 3)]
    assert is_normal(s3, (0, 4, 5))
    assert not is_normal(s3, (0, 1))
    assert double_cosets(d4, (0, 4)) == [(0, 4), (1, 3, 5, 7), (2, 6)]


# ============================================================
# 양쪽 잉여류 하이퍼그룹
# ============================================================

def test_coset_coefficients_are_constant(s3):
    H = (0, 1)
    coeff = coset_coefficients(s3, H, double_cosets(s3, H))
    assert coeff[0, 0] == (1, 0)
    assert coeff[1, 1] == (HALF, HALF)
    assert coeff[0, 1] == (0, 1)


def test_dihedral_double_coset_hypergroup(d4s):
    assert d4s.dim == 3
    assert d4s.left_integral == vec([2, 4, 2])
    assert d4s.alg.labels == ("[e]", "[r]", "[r2]")
    assert classify_type(d4s)["finite"]


def test_normal_subgroup_gives_group_algebra_of_quotient(s3a3):
    # S3 // A3 ≅ K(Z2)
    assert s3a3.dim == 2
    assert s3a3.coproducts[1] == vec([0, 1, 1, 0])
    assert s3a3.left_integral == vec([3, 3])


def test_function_algebra(kz2):
    assert kz2.alg.labels == ("[e]", "[g]")
    assert kz2.coproducts[0] == vec([1, 0, 0, 1])


def test_trivial_subgroup_of_trivial_group():
    G = cyclic_group(1)
    h = double_coset_hypergroup(G, ["e"])
    assert h.dim == 1
    assert h.data.tau == Scalar(1)


# ============================================================
# 군대수 / 압축
# ============================================================

def test_group_algebra_antipode_is_inverse(cs3, s3):
    S = cs3.data.S
    for p in range(s3.order):
        assert S.column(p) == basis_vec(6, s3.inverse[p])
    assert cs3.alg.labels[4] == "λ(123)"


def test_hecke_unit(s3, cs3):
    u = hecke_unit(s3, ["e", "(12)"], cs3)
    assert u == vec([HALF, HALF, 0, 0, 0, 0])
    assert all_passed(projection_records(cs3, u))


def test_hecke_compression(s3, cs3):
    comp = compress(cs3, hecke_unit(s3, ["e", "(12)"]))
    h = comp.hypergroup
    assert h.dim == 2
    assert h.alg.find_unit() == comp.coordinates(comp.unit)
    assert classify_type(h)["finite"]


@pytest.mark.parametrize("members", [["e", "(12)"], ["e", "(123)", "(132)"], ["e"]])
def test_hecke_isomorphism_s3(s3, members):
    records = hecke_isomorphism_check(s3, members)
    assert [r["name"] for r in records][0] == "hecke-iso-bijective"
    assert len(records) == 6
    assert all_passed(records)


def test_hecke_isomorphism_dihedral(d4):
    assert all_passed(hecke_isomorphism_check(d4, ["e", "s"]))


def test_compression_rejects_non_projection(cs3):
    with pytest.raises(NotAProjection) as info:
        compress(cs3, basis_vec(6, 1))
    assert info.value.stage == "projection-idempotent"


def test_compression_rejects_non_group_like(kz2):
    with pytest.raises(NotGroupLike) as info:
        compress(kz2, vec([0, 1]))
    assert info.value.stage == "projection-group-like"


def test_compression_to_one_dimension(kz2):
    h = group_like_projection_compression(kz2, vec([1, 0]))
    assert h.dim == 1
    assert h.counit == vec([1])
    assert h.left_integral == vec([1])


def test_full_group_hecke_unit_compresses_to_one_dimension(s3, cs3):
    h = compress(cs3, hecke_unit(s3, list(s3.labels))).hypergroup
    assert h.dim == 1
    assert h.counit == vec([1])
    assert h.left_integral == vec([Fraction(1, 6)])
    assert classify_type(h)["finite"]


def test_group_recovered_from_group_algebra(s3, cs3, sweedler):
    assert group_from_algebra(cs3.alg) == s3
    with pytest.raises(NotAGroup) as info:
        group_from_algebra(sweedler.alg)
    assert info.value.axiom == "closure"
    assert info.value.as_dict()["witness"] == {"pair": [2, 1]}


# ============================================================
# 스위들러
# ============================================================

def test_sweedler_algebra_labels():
    alg = sweedler_algebra()
    assert alg.labels == LABELS == ("1", "g", "x", "gx")
    assert alg.dim == 4
