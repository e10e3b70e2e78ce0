"""양쪽 잉여류 하이퍼그룹

G 위에서 HgH 마다 상수인 함수들의 대수. 기저는 각 양쪽 잉여류의 지시함수이고,
Δ(f)(p, q) = (1/|H|) Σ_{h∈H} f(phq).
"""

import logging
from fractions import Fraction

from algebra.structure import StructureAlgebra
from config.checks import record
from constructions.groups import FiniteGroup, double_cosets, subgroup_from_labels
from hypergroup.errors import ValidationFailed
from hypergroup.model import QuantumHypergroup
from hypergroup.pipeline import build_hypergroup, require
from linalg.matrix import Matrix, basis_vec

logger = logging.getLogger(__name__)


def _coset_counts(G: FiniteGroup, H: tuple, which: list[int], n: int, p: int, q: int) -> tuple:
    counts = [0] * n
    for h in H:
        counts[which[G.mul(G.mul(p, h), q)]] += 1
    return tuple(counts)


def coset_coefficients(G: FiniteGroup, H: tuple, cosets: list[tuple]) -> dict:
    """(i, j) → k 별 계수 튜플. 모든 (p, q) 쌍에서 대표값과 같은지 확인한다."""
    n = len(cosets)
    which = [0] * G.order
    for k, part in enumerate(cosets):
        for p in part:
            which[p] = k
    reps = [part[0] for part in cosets]
    table = {(i, j): _coset_counts(G, H, which, n, reps[i], reps[j])
             for i in range(n) for j in range(n)}
    bad = None
    for p in range(G.order):
        for q in range(G.order):
            if _coset_counts(G, H, which, n, p, q) != table[which[p], which[q]]:
                bad = {"pair": [G.labels[p], G.labels[q]]}
                break
        if bad:
            break
    require([record("double-coset-constancy", bad is None, bad)])
    size = len(H)
    return {key: tuple(Fraction(c, size) for c in counts) for key, counts in table.items()}


def double_coset_hypergroup(G: FiniteGroup, H) -> QuantumHypergroup:
    H = subgroup_from_labels(G, H)
    cosets = double_cosets(G, H)
    n = len(cosets)
    coeff = coset_coefficients(G, H, cosets)

    mult = [[basis_vec(n, i) if i == j else (0,) * n for j in range(n)] for i in range(n)]
    comult = Matrix([coeff[i, j] for i in range(n) for j in range(n)], n)
    counit = tuple(1 if G.identity in part else 0 for part in cosets)
    phi = tuple(len(part) for part in cosets)

    position = {p: k for k, part in enumerate(cosets) for p in part}
    antipode = Matrix.from_columns(
        [basis_vec(n, position[G.inverse[part[0]]]) for part in cosets], n)
    labels = [f"[{G.labels[part[0]]}]" for part in cosets]
    alg = StructureAlgebra(mult, labels=labels, star=Matrix.identity(n))

    logger.info("[양쪽잉여류] |G|=%d |H|=%d → 차원 %d", G.order, len(H), n)
    try:
        return build_hypergroup(alg, comult, counit, phi, antipode=antipode)
    except ValidationFailed:
        logger.error("[양쪽잉여류] 파이프라인 실패 (|G|=%d, H=%s)", G.order,
                     [G.labels[h] for h in H])
        raise


def function_algebra(G: FiniteGroup) -> QuantumHypergroup:
    """K(G) = H = {e} 인 양쪽 잉여류 하이퍼그룹"""
    return double_coset_hypergroup(G, [G.identity])
