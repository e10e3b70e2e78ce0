"""쌍대 양자 하이퍼그룹 구성 모듈

기저 ωᵢ = φ(·eᵢ), 짝 행렬 Pᵢⱼ = ⟨ωᵢ, eⱼ⟩ = φ(eⱼeᵢ).
쌍대 벡터 w 는 ω-기저 계수이고, 함수값 벡터는 f = Pᵀw 이다.
"""

import logging
from dataclasses import dataclass
from functools import cached_property

from algebra.structure import StructureAlgebra
from hypergroup.errors import DualVerificationFailed, ValidationFailed
from hypergroup.model import QuantumHypergroup
from hypergroup.pipeline import build_hypergroup
from linalg.errors import Singular
from linalg.matrix import Matrix, Vector, dot, kron
from linalg.scalar import Scalar
from linalg.solve import invert

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DualPackage:
    dual: QuantumHypergroup
    pairing: Matrix
    source: QuantumHypergroup

    @property
    def dim(self) -> int:
        return self.source.dim

    @cached_property
    def pairing_inv(self) -> Matrix:
        return invert(self.pairing)

    @cached_property
    def _gram_solvers(self) -> dict:
        d = self.source.data
        return {
            "a": invert(d.gram.T),
            "b": invert(d.gram),
            "c": invert(d.psi_gram.T),
            "d": invert(d.psi_gram),
        }

    def functional(self, w: Vector) -> Vector:
        """쌍대 벡터 → A 위의 함수값 (ω(e₀), …)"""
        return self.pairing.left_apply(w)

    def from_functional(self, f: Vector) -> Vector:
        """함수값 → ω-기저 계수 (Pᵀw = f)"""
        return self.pairing_inv.left_apply(f)

    def pair(self, w: Vector, a: Vector) -> Scalar:
        """⟨w, a⟩"""
        return dot(self.functional(w), a)

    def multiply(self, w1: Vector, w2: Vector) -> Vector:
        return self.dual.alg.multiply(w1, w2)


def _pairing_matrix(h: QuantumHypergroup) -> Matrix:
    n = h.dim
    phi = h.left_integral
    return Matrix([[dot(phi, h.alg.mult[j][i]) for j in range(n)] for i in range(n)], n)


def four_forms(pkg: DualPackage, w: Vector) -> tuple[Vector, Vector, Vector, Vector]:
    """ω = φ(a·) = φ(·b) = ψ(c·) = ψ(·d) 인 (a, b, c, d)."""
    f = pkg.functional(w)
    solvers = pkg._gram_solvers
    return tuple(solvers[key].apply(f) for key in "abcd")


def build_dual(h: QuantumHypergroup) -> DualPackage:
    """(Â, Δ̂, ε̂, φ̂, ✻) 를 만들고 전체 파이프라인을 통과시킨다.

    유도된 Ŝ 는 ω ↦ ω∘S 의 행렬과 정확히 같아야 한다.
    """
    d = h.data
    n = h.dim
    P = _pairing_matrix(h)
    try:
        P_inv = invert(P)
    except Singular as exc:
        raise DualVerificationFailed("짝이 퇴화했다", stage="dual-pairing-nondegenerate") from exc
    Q = P_inv.T

    # (ωᵢωⱼ)(eₖ) = (ωᵢ⊗ωⱼ)Δ(eₖ) 를 P⁻¹ 로 계수화
    mult_hat = kron(P, P) @ h.comult @ P_inv
    table = [[mult_hat.row(i * n + j) for j in range(n)] for i in range(n)]

    # ⟨Δ̂(ω), x⊗y⟩ = ⟨ω, xy⟩
    comult_hat = kron(Q, Q) @ h.alg.mult_matrix() @ P.T

    counit_hat = tuple(h.left_integral)

    # φ̂(ψ(c·)) = ε(c)
    C = invert(d.psi_gram.T) @ P.T
    phi_hat = C.left_apply(h.counit)

    star_hat = None
    if h.alg.star is not None:
        K = h.alg.star
        star_hat = Q @ (P.conj() @ K.conj() @ d.S).T

    antipode_hat = Q @ d.S.T @ P.T
    labels = [f"φ(·{label})" for label in h.alg.labels]
    alg_hat = StructureAlgebra(table, labels=labels, star=star_hat)

    logger.info("[쌍대] Â 구성 (dim=%d), 파이프라인 실행", n)
    try:
        dual = build_hypergroup(alg_hat, comult_hat, counit_hat, phi_hat, antipode=antipode_hat)
    except ValidationFailed as exc:
        raise DualVerificationFailed(f"쌍대 검증 실패: {exc}", stage=f"dual:{exc.stage}",
                                     witness=exc.witness) from exc
    return DualPackage(dual=dual, pairing=P, source=h)
