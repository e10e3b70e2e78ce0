"""스위들러 4차원 호프 대수

표시 g² = 1, x² = 0, xg = −gx, Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x,
ε(g) = 1, ε(x) = 0 에서 모든 구조상수를 실행 시에 만든다.
기저 순서 1, g, x, gx (gᵃxᵇ 의 인덱스 = a + 2b).
"""

from algebra.structure import StructureAlgebra
from hypergroup.axioms import integral_space
from hypergroup.errors import ValidationFailed
from hypergroup.model import QuantumHypergroup
from hypergroup.pipeline import build_hypergroup
from linalg.matrix import Matrix, basis_vec, vadd, vscale, zero_vec
from linalg.tensor import outer

LABELS = ("1", "g", "x", "gx")


def _index(a: int, b: int) -> int:
    return a + 2 * b


def _product(i: int, j: int) -> tuple:
    a, b = i % 2, i // 2
    c, d = j % 2, j // 2
    if b + d > 1:
        return zero_vec(4)
    sign = -1 if b * c else 1
    return vscale(sign, basis_vec(4, _index((a + c) % 2, b + d)))


def sweedler_algebra() -> StructureAlgebra:
    return StructureAlgebra([[_product(i, j) for j in range(4)] for i in range(4)], labels=LABELS)


def sweedler_fixture() -> QuantumHypergroup:
    alg = sweedler_algebra()
    one, g, x = (basis_vec(4, _index(*ab)) for ab in ((0, 0), (1, 0), (0, 1)))
    delta_g = outer(g, g)
    delta_x = vadd(outer(x, one), outer(g, x))
    coproducts = [outer(one, one), delta_g, delta_x, alg.multiply_tensor(delta_g, delta_x)]
    comult = Matrix.from_columns(coproducts, 16)
    counit = tuple(1 if i // 2 == 0 else 0 for i in range(4))

    draft = QuantumHypergroup(alg=alg, comult=comult, counit=counit, left_integral=zero_vec(4))
    space = integral_space(draft, "left")
    if len(space) != 1:
        raise ValidationFailed("왼쪽 적분 공간이 1차원이 아니다", stage="left-integral-unique",
                               witness={"dimension": len(space)})
    phi = space[0]
    top = phi[_index(1, 1)]
    if not top.is_zero():
        phi = vscale(1 / top, phi)
    return build_hypergroup(alg, comult, counit, phi)
