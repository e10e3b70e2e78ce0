"""✻ 구조 공리와 적분의 양성"""

import logging

from algebra.errors import StarAbsent
from config.checks import record
from hypergroup.model import QuantumHypergroup
from linalg.errors import NotHermitian
from linalg.matrix import Matrix, Vector, basis_vec, dot, kron, vconj
from linalg.scalar import ONE
from linalg.solve import psd_check

logger = logging.getLogger(__name__)


def _star(h: QuantumHypergroup) -> Matrix:
    if h.alg.star is None:
        raise StarAbsent("✻ 구조가 없다")
    return h.alg.star


def star_invariant_records(h: QuantumHypergroup) -> list[dict]:
    """파이프라인 불변식: Δ 는 ✻-사상, φ 는 자기수반."""
    K = _star(h)
    D = h.comult
    diff = (D @ K).first_column_difference(kron(K, K) @ D.conj())
    return [
        record("star-coproduct", diff is None, {"basis": diff[1]} if diff else None),
        record("star-integral", K.left_apply(h.left_integral) == vconj(h.left_integral), None),
    ]


def verify_star_axioms(h: QuantumHypergroup) -> list[dict]:
    K = _star(h)
    d = h.data
    n = h.dim
    round_trip = K @ d.S.conj() @ K.conj() @ d.S
    diff = round_trip.first_column_difference(Matrix.identity(n))
    records = star_invariant_records(h)
    records.extend([
        record("star-counit", K.left_apply(h.counit) == vconj(h.counit), None),
        record("star-antipode", diff is None, {"basis": diff[1]} if diff else None),
        record("star-modular-element", h.alg.apply_star(d.delta) == d.delta, None),
        record("star-scaling-constant", d.tau * d.tau.conj() == ONE, {"tau": str(d.tau)}),
    ])
    return records


def positivity_gram(h: QuantumHypergroup, f: Vector) -> Matrix:
    """Gᵢⱼ = f(eᵢ✻eⱼ)"""
    n = h.dim
    stars = [h.alg.apply_star(basis_vec(n, i)) for i in range(n)]
    return Matrix([[dot(f, h.alg.multiply(stars[i], basis_vec(n, j))) for j in range(n)]
                   for i in range(n)], n)


def integral_positivity(h: QuantumHypergroup, f: Vector) -> bool:
    """f(a✻a) ≥ 0 (모든 a). 에르미트가 아닌 그람 행렬은 양성이 아니다."""
    _star(h)
    try:
        return psd_check(positivity_gram(h, f))
    except NotHermitian:
        logger.info("[✻] 그람 행렬이 에르미트가 아님 → 양성 아님")
        return False
