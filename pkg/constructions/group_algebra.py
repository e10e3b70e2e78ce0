"""군대수 호프 대수 ℂG

λ_pλ_q = λ_pq, Δ(λ_p) = λ_p⊗λ_p, ε(λ_p) = 1, φ(λ_p) = [p = e],
S(λ_p) = λ_p⁻¹, λ_p✻ = λ_p⁻¹.
"""

import logging

from algebra.structure import StructureAlgebra
from constructions.errors import NotAGroup
from constructions.groups import FiniteGroup, group_from_table
from hypergroup.model import QuantumHypergroup
from hypergroup.pipeline import build_hypergroup
from linalg.matrix import Matrix, basis_vec
from linalg.tensor import outer

logger = logging.getLogger(__name__)


def group_algebra_hopf(G: FiniteGroup) -> QuantumHypergroup:
    N = G.order
    lam = [basis_vec(N, p) for p in range(N)]
    mult = [[lam[G.mul(p, q)] for q in range(N)] for p in range(N)]
    comult = Matrix.from_columns([outer(lam[p], lam[p]) for p in range(N)], N * N)
    inverse = Matrix.from_columns([lam[G.inverse[p]] for p in range(N)], N)
    counit = (1,) * N
    phi = tuple(1 if p == G.identity else 0 for p in range(N))
    alg = StructureAlgebra(mult, labels=[f"λ{label}" for label in G.labels], star=inverse)
    logger.info("[군대수] |G|=%d", N)
    return build_hypergroup(alg, comult, counit, phi, antipode=inverse)


def group_from_algebra(alg: StructureAlgebra) -> FiniteGroup:
    """ℂG 의 곱셈표에서 G 를 복원한다. 라벨의 λ 접두어는 뗀다.

    기저끼리의 곱이 다시 기저 원소가 아니면 NotAGroup(closure).
    """
    N = alg.dim
    lam = [basis_vec(N, k) for k in range(N)]
    table = []
    for p in range(N):
        row = []
        for q in range(N):
            k = next((k for k in range(N) if alg.mult[p][q] == lam[k]), None)
            if k is None:
                raise NotAGroup("기저 곱이 기저 원소가 아니다", axiom="closure", witness={"pair": [p, q]})
            row.append(k)
        table.append(row)
    labels = [label[1:] if label.startswith("λ") else label for label in alg.labels]
    return group_from_table({"elements": labels, "table": table})
