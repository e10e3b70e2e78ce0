import pytest
from hypothesis import given, strategies as st

from algebra.checks import check_associativity, check_nondegenerate, check_star, check_unit
from algebra.errors import StarAbsent
from algebra.structure import StructureAlgebra
from config.checks import all_passed
from constructions.sweedler import sweedler_algebra
from linalg.errors import DimensionMismatch
from linalg.matrix import Matrix, basis_vec, vadd, vec, vscale
from linalg.scalar import I, ONE, Scalar
from linalg.tensor import outer


def _by_name(records):
    return {r["name"]: r for r in records}


def test_sweedler_relations():
    alg = sweedler_algebra()
    one, g, x, gx = (basis_vec(4, i) for i in range(4))
    assert alg.multiply(g, g) == one
    assert alg.multiply(x, x) == vec([0, 0, 0, 0])
    assert alg.multiply(x, g) == vec([0, 0, 0, -1])
    assert alg.multiply(g, x) == gx
    assert alg.find_unit() == one
    assert all_passed(check_associativity(alg) + check_nondegenerate(alg) + check_unit(alg))


def test_non_associative_table_reports_triples():
    # e0e1 = e1, e1e1 = e0, e1e0 = 0 → 결합 깨짐
    mult = [
        [[1, 0], [0, 1]],
        [[0, 0], [1, 0]],
    ]
    rec = check_associativity(StructureAlgebra(mult))[0]
    assert rec["status"] == "fail"
    assert rec["witness"]["count"] > 0


def test_degenerate_product_is_caught():
    # e1 은 모든 원소를 0 으로 보낸다
    mult = [
        [[1, 0], [0, 0]],
        [[0, 0], [0, 0]],
    ]
    alg = StructureAlgebra(mult)
    rec = check_nondegenerate(alg)[0]
    assert rec["status"] == "fail"
    assert rec["witness"]["left_annihilator"] == ["0", "1"]
    assert alg.find_unit() is None
    assert check_unit(alg)[0]["status"] == "fail"


def test_star_checks_on_complex_conjugation():
    # ℂ 를 실수 위 1차원 복소 대수로: ✻ = 켤레
    alg = StructureAlgebra([[[1]]], star=Matrix.identity(1))
    assert all_passed(check_star(alg))
    assert alg.apply_star(vec([I])) == vec([-I])


def test_star_not_involutive():
    alg = StructureAlgebra([[[1, 0], [0, 1]], [[0, 1], [1, 0]]],
                           star=Matrix([[1, 0], [0, 2]]))
    records = _by_name(check_star(alg))
    assert records["star-involutive"]["status"] == "fail"


def test_star_absent():
    alg = sweedler_algebra()
    with pytest.raises(StarAbsent) as info:
        alg.apply_star(basis_vec(4, 0))
    assert info.value.as_dict()["stage"] == "star"


def test_tensor_square_multiplies_legs():
    alg = sweedler_algebra()
    sq = alg.tensor_square()
    g, x = basis_vec(4, 1), basis_vec(4, 2)
    s, t = outer(g, x), outer(x, g)
    assert sq.multiply(s, t) == alg.multiply_tensor(s, t)
    assert sq.find_unit() == outer(basis_vec(4, 0), basis_vec(4, 0))


def test_leg_multiply_sides():
    alg = sweedler_algebra()
    one, g, x = basis_vec(4, 0), basis_vec(4, 1), basis_vec(4, 2)
    t = outer(x, one)
    assert alg.leg_multiply(t, g, 1, "left") == outer(alg.multiply(g, x), one)
    assert alg.leg_multiply(t, g, 1, "right") == outer(alg.multiply(x, g), one)
    assert alg.leg_multiply(t, g, 2, "right") == outer(x, g)


def test_bad_shapes():
    with pytest.raises(DimensionMismatch):
        StructureAlgebra([[[1, 0]], [[0, 1]]])
    with pytest.raises(DimensionMismatch):
        StructureAlgebra([[[1]]], labels=["a", "b"])


def test_multiply_map_agrees_with_multiply():
    alg = sweedler_algebra()
    a, b = vec([1, 2, 0, 1]), vec([0, 1, Scalar(1, 1), 3])
    assert alg.multiply_map(outer(a, b)) == alg.multiply(a, b)
    assert alg.multiply(alg.find_unit(), a) == a
    assert alg.left_mult_matrix(a).apply(b) == alg.multiply(a, b)
    assert alg.right_mult_matrix(b).apply(a) == alg.multiply(a, b)
    assert alg.multiply(basis_vec(4, 0), basis_vec(4, 0))[0] == ONE


@given(st.lists(st.integers(-3, 3), min_size=12, max_size=12), st.integers(-3, 3))
def test_sweedler_multiply_is_bilinear(coeffs, c):
    alg = sweedler_algebra()
    x, y, z = vec(coeffs[:4]), vec(coeffs[4:8]), vec(coeffs[8:])
    assert alg.multiply(vadd(x, y), z) == vadd(alg.multiply(x, z), alg.multiply(y, z))
    assert alg.multiply(x, vscale(c, z)) == vscale(c, alg.multiply(x, z))
    assert alg.multiply(alg.multiply(x, y), z) == alg.multiply(x, alg.multiply(y, z))
