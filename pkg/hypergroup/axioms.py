"""공곱·쌍대단위·적분·충실성 공리 검증 모듈"""

from config.checks import record
from hypergroup.model import QuantumHypergroup, functional_gram
from linalg.errors import Inconsistent
from linalg.matrix import Matrix, Vector, basis_vec, dot, first_difference, is_zero_vec, vadd, vscale
from linalg.scalar import ONE, ZERO
from linalg.solve import kernel, rank, solve_linear
from linalg.tensor import nonzero_entries, slice_left, slice_right


def delta_left_leg(h: QuantumHypergroup, t: Vector) -> Vector:
    """(Δ⊗ι)(t) ∈ A⊗A⊗A, 인덱스 (p,q,j) ↦ (p·n+q)·n + j"""
    n = h.dim
    out = [ZERO] * (n ** 3)
    for i, j, c in nonzero_entries(t, n):
        for pq, d in enumerate(h.coproducts[i]):
            if not d.is_zero():
                out[pq * n + j] = out[pq * n + j] + c * d
    return tuple(out)


def delta_right_leg(h: QuantumHypergroup, t: Vector) -> Vector:
    """(ι⊗Δ)(t) ∈ A⊗A⊗A"""
    n = h.dim
    out = [ZERO] * (n ** 3)
    for i, j, c in nonzero_entries(t, n):
        for qr, d in enumerate(h.coproducts[j]):
            if not d.is_zero():
                out[i * n * n + qr] = out[i * n * n + qr] + c * d
    return tuple(out)


def verify_comultiplication(h: QuantumHypergroup) -> list[dict]:
    bad = None
    for k, t in enumerate(h.coproducts):
        diff = first_difference(delta_left_leg(h, t), delta_right_leg(h, t))
        if diff is not None:
            bad = {"basis": k, "component": diff}
            break
    unital = h.alg.find_unit() is not None
    return [
        record("coassociativity", bad is None, bad),
        # 유한차원 단위 대수에서는 Δ(a)(1⊗b), (a⊗1)Δ(b) 가 자동으로 A⊗A 안에 있다
        record("coproduct-regular", unital, {"reason": "no unit"}),
    ]


def verify_counit(h: QuantumHypergroup) -> list[dict]:
    n = h.dim
    eps = h.counit
    records = []

    bad_left = bad_right = None
    for k, t in enumerate(h.coproducts):
        e = basis_vec(n, k)
        if bad_left is None and slice_left(t, eps, n) != e:
            bad_left = {"basis": k}
        if bad_right is None and slice_right(t, eps, n) != e:
            bad_right = {"basis": k}
    records.append(record("counit-left", bad_left is None, bad_left))
    records.append(record("counit-right", bad_right is None, bad_right))

    bad_mult = None
    for i in range(n):
        for j in range(n):
            if dot(eps, h.alg.mult[i][j]) != eps[i] * eps[j]:
                bad_mult = {"pair": [i, j]}
                break
        if bad_mult:
            break
    records.append(record("counit-multiplicative", bad_mult is None, bad_mult))

    unit = h.alg.find_unit()
    ok_unit = unit is not None and dot(eps, unit) == ONE
    records.append(record("counit-unital", ok_unit,
                          {"value": str(dot(eps, unit)) if unit is not None else None}))

    space = counit_space(h)
    unique = len(space) == 1 and space[0] == tuple(eps)
    records.append(record("counit-unique", unique, {"solutions": len(space)}))
    return records


def counit_space(h: QuantumHypergroup) -> list[Vector]:
    """(ι⊗ε′)∘Δ = ι 의 해 전체.

    해가 유일하면 한 원소, 모순이면 빈 목록, 해가 여럿이면
    특수해와 (특수해 + 영공간 기저) 들을 돌려준다.
    """
    n = h.dim
    rows, rhs = [], []
    for a, t in enumerate(h.coproducts):
        for k in range(n):
            rows.append([t[k * n + l] for l in range(n)])
            rhs.append(ONE if k == a else ZERO)
    M = Matrix(rows, n)
    try:
        particular = solve_linear(M, tuple(rhs))
    except Inconsistent:
        return []
    return [particular] + [vadd(particular, v) for v in kernel(M)]


def integral_space(h: QuantumHypergroup, side: str = "left") -> list[Vector]:
    """left: (ι⊗f)Δ(a) = f(a)·1, right: (f⊗ι)Δ(a) = f(a)·1 을 만족하는 f 공간의 기저."""
    n = h.dim
    unit = h.alg.find_unit()
    if unit is None:
        return []
    rows = []
    for a, t in enumerate(h.coproducts):
        for k in range(n):
            if side == "left":
                row = [t[k * n + l] for l in range(n)]
            else:
                row = [t[l * n + k] for l in range(n)]
            row[a] = row[a] - unit[k]
            rows.append(row)
    return kernel(Matrix(rows, n))


def _proportional(u: Vector, v: Vector) -> bool:
    """u 와 v 가 같은 직선 위에 있는가 (둘 다 0 아님 가정)."""
    return rank(Matrix([u, v], len(u))) == 1


def verify_left_integral(h: QuantumHypergroup) -> list[dict]:
    n = h.dim
    phi = h.left_integral
    records = [record("left-integral-nonzero", not is_zero_vec(phi), {"phi": "0"})]

    unit = h.alg.find_unit()
    bad = None
    if unit is None:
        bad = {"reason": "no unit"}
    else:
        for a, t in enumerate(h.coproducts):
            if slice_right(t, phi, n) != vscale(phi[a], unit):
                bad = {"basis": a}
                break
    records.append(record("left-integral-invariance", bad is None, bad))

    space = integral_space(h, "left")
    unique = len(space) == 1 and not is_zero_vec(phi) and _proportional(space[0], phi)
    records.append(record("left-integral-unique", unique, {"dimension": len(space)}))
    return records


def verify_right_integral_unique(h: QuantumHypergroup, psi: Vector) -> list[dict]:
    space = integral_space(h, "right")
    unique = len(space) == 1 and _proportional(space[0], psi)
    return [record("right-integral-unique", unique, {"dimension": len(space)})]


def verify_faithful(h: QuantumHypergroup, f: Vector, name: str = "left-integral-faithful") -> list[dict]:
    """Fᵢⱼ = f(eᵢeⱼ) 가 가역이면 통과. 행렬 하나로 양쪽 조건을 모두 본다."""
    F = functional_gram(h, f)
    null = kernel(F)
    witness = {"kernel_vector": [str(c) for c in null[0]]} if null else None
    return [record(name, not null, witness)]
