"""이중쌍대 동형 Γ

Γ(a)(ω) = ω(a). 쌍대의 쌍대를 다시 build_dual 로 만들고,
Γ 를 그 기저의 계수 행렬로 적은 뒤 모든 구조 사상을 비교한다.
"""

import logging

from config.checks import record
from duality.dual import DualPackage, build_dual
from linalg.errors import Singular
from linalg.matrix import Matrix, basis_vec, dot, kron
from linalg.solve import invert

logger = logging.getLogger(__name__)


def bidual_map(pkg: DualPackage, pkg2: DualPackage) -> Matrix:
    """Γ = (P̂ᵀ)⁻¹P : A → Â̂"""
    P = pkg.pairing
    return Matrix.from_columns([pkg2.from_functional(P.column(a)) for a in range(pkg.dim)], pkg.dim)


def _matrix_record(name: str, lhs: Matrix, rhs: Matrix) -> dict:
    diff = lhs.first_column_difference(rhs)
    return record(name, diff is None, {"basis": diff[1], "component": diff[0]} if diff else None)


def bidual_check(pkg: DualPackage, pkg2: DualPackage | None = None) -> list[dict]:
    src = pkg.source
    n = pkg.dim
    if pkg2 is None:
        pkg2 = build_dual(pkg.dual)
    bi = pkg2.dual
    gamma = bidual_map(pkg, pkg2)
    try:
        invert(gamma)
    except Singular:
        logger.warning("[이중쌍대] Γ 가 가역이 아니다")
        return [record("bidual-bijective", False, {"component": "Γ"})]

    records = [record("bidual-bijective", True)]

    S = src.data.S
    e_hat = [basis_vec(n, k) for k in range(n)]
    psi_hat = pkg.dual.data.psi

    def represented(a: int):
        # ω = φ(·S(a)) 의 ω-계수는 S(a) 그대로다
        w = S.column(a)
        values = tuple(dot(psi_hat, pkg.multiply(e_hat[k], w)) for k in range(n))
        return pkg2.from_functional(values)

    bad = next((a for a in range(n) if represented(a) != gamma.column(a)), None)
    records.append(record("bidual-representation", bad is None,
                          {"basis": bad} if bad is not None else None))

    bad = next(((a, b) for a in range(n) for b in range(n)
                if gamma.apply(src.alg.mult[a][b]) != pkg2.multiply(gamma.column(a), gamma.column(b))),
               None)
    records.append(record("bidual-product", bad is None,
                          {"indices": list(bad)} if bad is not None else None))

    records.append(_matrix_record("bidual-coproduct", kron(gamma, gamma) @ src.comult, bi.comult @ gamma))
    records.append(record("bidual-counit", gamma.left_apply(bi.counit) == src.counit, None))
    records.append(_matrix_record("bidual-antipode", bi.data.S @ gamma, gamma @ S))
    records.append(record("bidual-integral", gamma.left_apply(bi.left_integral) == src.left_integral,
                          None))
    if src.alg.star is not None and bi.alg.star is not None:
        records.append(_matrix_record("bidual-star", gamma @ src.alg.star,
                                      bi.alg.star @ gamma.conj()))
    logger.info("[이중쌍대] Γ 검증 %d건", len(records))
    return records
