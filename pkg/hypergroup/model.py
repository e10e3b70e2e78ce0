"""QuantumHypergroup / DerivedData 자료형

Δ 는 n²×n 행렬 (열 k = Δ(eₖ) 의 Tensor2), ε 와 φ 는 길이 n 공벡터.
derived 는 유도 파이프라인이 전부 통과했을 때만 채워진다.
"""

from dataclasses import dataclass, field
from functools import cached_property

from algebra.structure import StructureAlgebra
from hypergroup.errors import ValidationFailed
from linalg.errors import DimensionMismatch
from linalg.matrix import Matrix, Vector, dot
from linalg.scalar import Scalar


@dataclass(frozen=True)
class DerivedData:
    S: Matrix
    S_inv: Matrix
    psi: Vector
    delta: Vector
    delta_inv: Vector
    sigma: Matrix
    sigma_prime: Matrix
    tau: Scalar
    gram: Matrix
    psi_gram: Matrix


@dataclass(frozen=True)
class QuantumHypergroup:
    alg: StructureAlgebra
    comult: Matrix
    counit: Vector
    left_integral: Vector
    derived: DerivedData | None = field(default=None, compare=False)

    def __post_init__(self):
        n = self.alg.dim
        if self.comult.shape != (n * n, n):
            raise DimensionMismatch(f"comult {self.comult.shape} != ({n * n}, {n})")
        if len(self.counit) != n:
            raise DimensionMismatch(f"counit 길이 {len(self.counit)} != {n}")
        if len(self.left_integral) != n:
            raise DimensionMismatch(f"left_integral 길이 {len(self.left_integral)} != {n}")

    @property
    def dim(self) -> int:
        return self.alg.dim

    @cached_property
    def coproducts(self) -> tuple:
        """(Δ(e₀), …, Δ(eₙ₋₁))"""
        return tuple(self.comult.columns())

    @property
    def data(self) -> DerivedData:
        if self.derived is None:
            raise ValidationFailed("유도 데이터가 없다 (파이프라인 미실행)", stage="derived")
        return self.derived


def comult_apply(h: QuantumHypergroup, a: Vector) -> Vector:
    """Δ(a)"""
    return h.comult.apply(a)


def evaluate(f: Vector, x: Vector) -> Scalar:
    return dot(f, x)


def functional_gram(h: QuantumHypergroup, f: Vector) -> Matrix:
    """Fᵢⱼ = f(eᵢeⱼ)"""
    n = h.dim
    return Matrix([[dot(f, h.alg.mult[i][j]) for j in range(n)] for i in range(n)], n)
