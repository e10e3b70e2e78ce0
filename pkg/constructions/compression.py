"""군유사 사영에 의한 압축

u² = u, u✻ = u, Δ(u)(1⊗u) = u⊗u 인 u 로 uBu 를 잘라낸다.
곱은 제한, 공곱은 b ↦ (u⊗u)Δ(b)(u⊗u), ε 와 φ 는 제한.
S 이하 유도 데이터는 파이프라인이 처음부터 다시 구한다.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from algebra.structure import StructureAlgebra
from config.checks import record
from constructions.double_coset import double_coset_hypergroup
from constructions.errors import NotAProjection, NotGroupLike
from constructions.group_algebra import group_algebra_hopf
from constructions.groups import FiniteGroup, double_cosets, subgroup_from_labels
from duality.dual import build_dual
from hypergroup.model import QuantumHypergroup
from hypergroup.pipeline import build_hypergroup
from linalg.errors import Singular
from linalg.matrix import Matrix, Vector, basis_vec, dot, kron, vec
from linalg.solve import invert, pivot_columns, solve_linear
from linalg.tensor import outer

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Compression:
    hypergroup: QuantumHypergroup
    basis: Matrix  # 열 = uBu 기저를 B 좌표로
    unit: Vector

    def coordinates(self, y: Vector) -> Vector:
        """uBu 의 원소 y (B 좌표) → 압축 기저 좌표"""
        return solve_linear(self.basis, y)


def projection_records(B: QuantumHypergroup, u: Vector) -> list[dict]:
    alg = B.alg
    records = [record("projection-idempotent", alg.multiply(u, u) == tuple(u), None)]
    if alg.star is not None:
        records.append(record("projection-self-adjoint", alg.apply_star(u) == tuple(u), None))
    lhs = alg.leg_multiply(B.comult.apply(u), u, 2, "right")
    records.append(record("projection-group-like", lhs == outer(u, u), None))
    return records


def compress(B: QuantumHypergroup, u: Vector) -> Compression:
    u = vec(u)
    alg = B.alg
    n = B.dim
    if len(u) != n:
        raise NotAProjection(f"u 길이 {len(u)} != {n}")
    for r in projection_records(B, u):
        if r["status"] == "fail":
            cls = NotGroupLike if r["name"] == "projection-group-like" else NotAProjection
            raise cls(f"{r['name']} 실패: {r['anchor']}", stage=r["name"])

    L, R = alg.left_mult_matrix(u), alg.right_mult_matrix(u)
    C = L @ R
    pivots = pivot_columns(C)
    V = Matrix.from_columns([C.column(j) for j in pivots], n)
    m = len(pivots)
    cols = V.columns()

    def coords(y):
        return solve_linear(V, y)

    mult = [[coords(alg.multiply(cols[i], cols[j])) for j in range(m)] for i in range(m)]
    sandwich = kron(L, L) @ kron(R, R)
    VV = kron(V, V)
    comult = Matrix.from_columns(
        [solve_linear(VV, sandwich.apply(B.comult.apply(c))) for c in cols], m * m)
    counit = tuple(dot(B.counit, c) for c in cols)
    phi = tuple(dot(B.left_integral, c) for c in cols)

    star = None
    if alg.star is not None:
        star = Matrix.from_columns([coords(alg.apply_star(c)) for c in cols], m)
    labels = [f"u{alg.labels[j]}u" for j in pivots]
    sub = StructureAlgebra(mult, labels=labels, star=star, unit=coords(u))

    logger.info("[압축] dim %d → %d", n, m)
    h = build_hypergroup(sub, comult, counit, phi)
    return Compression(hypergroup=h, basis=V, unit=u)


def group_like_projection_compression(B: QuantumHypergroup, u: Vector) -> QuantumHypergroup:
    return compress(B, u).hypergroup


def hecke_unit(G: FiniteGroup, H, algebra: QuantumHypergroup | None = None) -> Vector:
    """u = (1/|H|) Σ_{h∈H} λ_h. algebra 가 주어지면 사영 조건까지 확인한다."""
    H = subgroup_from_labels(G, H)
    weight = Fraction(1, len(H))
    u = vec(weight if p in H else 0 for p in range(G.order))
    if algebra is not None:
        for r in projection_records(algebra, u):
            if r["status"] == "fail":
                cls = NotGroupLike if r["name"] == "projection-group-like" else NotAProjection
                raise cls(f"{r['name']} 실패", stage=r["name"])
    return u


def _matrix_record(name: str, lhs: Matrix, rhs: Matrix) -> dict:
    diff = lhs.first_column_difference(rhs)
    return record(name, diff is None, {"basis": diff[1], "component": diff[0]} if diff else None)


def hecke_isomorphism_check(G: FiniteGroup, H) -> list[dict]:
    """양쪽 잉여류 하이퍼그룹의 쌍대 ≅ 군대수의 헤케 압축.

    Θ(ωᵢ) = Σ_{p∈Dᵢ} λ_p (합 짝 ⟨f, g⟩ = Σ_p f(p)g(p) 에서 ωᵢ 는 Dᵢ 의 지시함수).
    """
    H = subgroup_from_labels(G, H)
    dual = build_dual(double_coset_hypergroup(G, H)).dual
    B = group_algebra_hopf(G)
    comp = compress(B, hecke_unit(G, H, B))
    target = comp.hypergroup
    cosets = double_cosets(G, H)
    n = len(cosets)

    indicator = [vec(1 if p in part else 0 for p in range(G.order)) for part in cosets]
    if target.dim != n:
        return [record("hecke-iso-bijective", False, {"dual_dim": n, "compression_dim": target.dim})]
    theta = Matrix.from_columns([comp.coordinates(v) for v in indicator], n)
    try:
        invert(theta)
    except Singular:
        return [record("hecke-iso-bijective", False, {"dual_dim": n})]

    records = [record("hecke-iso-bijective", True)]
    e = [basis_vec(n, i) for i in range(n)]
    bad = next(((i, j) for i in range(n) for j in range(n)
                if theta.apply(dual.alg.multiply(e[i], e[j]))
                != target.alg.multiply(theta.column(i), theta.column(j))), None)
    records.append(record("hecke-iso-product", bad is None,
                          {"indices": list(bad)} if bad is not None else None))
    records.append(_matrix_record("hecke-iso-coproduct", kron(theta, theta) @ dual.comult,
                                  target.comult @ theta))
    records.append(record("hecke-iso-counit", theta.left_apply(target.counit) == dual.counit, None))
    records.append(record("hecke-iso-integral",
                          theta.left_apply(target.left_integral) == dual.left_integral, None))
    records.append(_matrix_record("hecke-iso-antipode", target.data.S @ theta, theta @ dual.data.S))
    return records
