"""대수 공리 검증 모듈

각 함수는 검증 레코드 목록을 돌려준다 (config.checks.record 참고).
"""

from algebra.structure import StructureAlgebra
from config.checks import record
from linalg.matrix import Matrix, basis_vec, first_difference, vscale
from linalg.scalar import I
from linalg.solve import kernel

_MAX_WITNESSES = 20


def check_associativity(alg: StructureAlgebra) -> list[dict]:
    n = alg.dim
    failing = []
    for i in range(n):
        for j in range(n):
            ij = alg.mult[i][j]
            for k in range(n):
                lhs = alg.multiply(ij, basis_vec(n, k))
                rhs = alg.multiply(basis_vec(n, i), alg.mult[j][k])
                if lhs != rhs:
                    failing.append([i, j, k])
    witness = {"triples": failing[:_MAX_WITNESSES], "count": len(failing)}
    return [record("associativity", not failing, witness)]


def _operator_stack(alg: StructureAlgebra, side: str) -> Matrix:
    """a ↦ (a·eⱼ)ⱼ (side="left") 또는 a ↦ (eⱼ·a)ⱼ 를 세로로 쌓은 n²×n 행렬."""
    n = alg.dim
    rows = []
    for j in range(n):
        for k in range(n):
            if side == "left":
                rows.append([alg.mult[i][j][k] for i in range(n)])
            else:
                rows.append([alg.mult[j][i][k] for i in range(n)])
    return Matrix(rows, n)


def check_nondegenerate(alg: StructureAlgebra) -> list[dict]:
    left = kernel(_operator_stack(alg, "left"))
    right = kernel(_operator_stack(alg, "right"))
    witness = {
        "left_annihilator": [str(c) for c in left[0]] if left else None,
        "right_annihilator": [str(c) for c in right[0]] if right else None,
    }
    return [record("nondegenerate-product", not left and not right, witness)]


def check_unit(alg: StructureAlgebra) -> list[dict]:
    return [record("unit-exists", alg.find_unit() is not None, {"dim": alg.dim})]


def check_star(alg: StructureAlgebra) -> list[dict]:
    """involutive / conjugate-linear / anti-multiplicative. StarAbsent 는 apply_star 가 낸다."""
    n = alg.dim
    records = []

    bad_inv = None
    for j in range(n):
        e = basis_vec(n, j)
        if alg.apply_star(alg.apply_star(e)) != e:
            bad_inv = j
            break
    records.append(record("star-involutive", bad_inv is None, {"basis": bad_inv}))

    bad_lin = None
    for j in range(n):
        e = basis_vec(n, j)
        lhs = alg.apply_star(vscale(I, e))
        rhs = vscale(-I, alg.apply_star(e))
        if lhs != rhs:
            bad_lin = j
            break
    records.append(record("star-conjugate-linear", bad_lin is None, {"basis": bad_lin}))

    bad_anti = None
    for i in range(n):
        for j in range(n):
            lhs = alg.apply_star(alg.mult[i][j])
            rhs = alg.multiply(alg.apply_star(basis_vec(n, j)), alg.apply_star(basis_vec(n, i)))
            k = first_difference(lhs, rhs)
            if k is not None:
                bad_anti = {"pair": [i, j], "component": k}
                break
        if bad_anti:
            break
    records.append(record("star-anti-multiplicative", bad_anti is None, bad_anti))
    return records
