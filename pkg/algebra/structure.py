"""구조상수 대수 모듈

유한차원 결합대수를 곱셈 텐서 mult[i][j] (= eᵢ·eⱼ 의 계수 벡터)로 표현한다.
✻ 가 있으면 a ↦ K·conj(a) 로 저장한다.
"""

import logging

from algebra.errors import StarAbsent
from linalg.errors import DimensionMismatch, Inconsistent
from linalg.matrix import Matrix, Vector, basis_vec, kron, vconj, vec
from linalg.scalar import ZERO
from linalg.solve import solve_linear
from linalg.tensor import outer

logger = logging.getLogger(__name__)

_UNSET = object()


class StructureAlgebra:
    """mult 표로 주어진 n 차원 대수. 생성 후 불변 (단위원 캐시는 한 번만 기록)."""

    def __init__(self, mult, labels=None, star: Matrix | None = None, unit=_UNSET):
        n = len(mult)
        if n == 0:
            raise DimensionMismatch("차원은 1 이상이어야 한다")
        table = []
        for i, row in enumerate(mult):
            if len(row) != n:
                raise DimensionMismatch(f"mult[{i}] 길이 {len(row)} != {n}")
            cells = []
            for j, cell in enumerate(row):
                v = vec(cell)
                if len(v) != n:
                    raise DimensionMismatch(f"mult[{i}][{j}] 길이 {len(v)} != {n}")
                cells.append(v)
            table.append(tuple(cells))
        self.dim = n
        self.mult = tuple(table)
        self.labels = tuple(labels) if labels is not None else tuple(f"e{i}" for i in range(n))
        if len(self.labels) != n:
            raise DimensionMismatch(f"labels 길이 {len(self.labels)} != {n}")
        if star is not None and star.shape != (n, n):
            raise DimensionMismatch(f"star 행렬 {star.shape} != ({n}, {n})")
        self.star = star
        # eᵢeⱼ 의 0 아닌 성분만 (k, c) 로
        self._sparse = tuple(
            tuple(tuple((k, c) for k, c in enumerate(cell) if not c.is_zero()) for cell in row)
            for row in self.mult
        )
        self._unit = unit

    # ---- 곱 ----

    def multiply(self, x: Vector, y: Vector) -> Vector:
        """Σᵢⱼ xᵢyⱼ·mult[i][j]"""
        n = self.dim
        if len(x) != n or len(y) != n:
            raise DimensionMismatch(f"multiply: 길이 {len(x)}, {len(y)} != {n}")
        out = [ZERO] * n
        ys = [(j, b) for j, b in enumerate(y) if not b.is_zero()]
        for i, a in enumerate(x):
            if a.is_zero():
                continue
            row = self._sparse[i]
            for j, b in ys:
                ab = a * b
                for k, c in row[j]:
                    out[k] = out[k] + ab * c
        return tuple(out)

    def product(self, i: int, j: int) -> Vector:
        return self.mult[i][j]

    def left_mult_matrix(self, a: Vector) -> Matrix:
        """x ↦ a·x 의 행렬"""
        n = self.dim
        return Matrix.from_columns([self.multiply(a, basis_vec(n, j)) for j in range(n)], n)

    def right_mult_matrix(self, a: Vector) -> Matrix:
        """x ↦ x·a 의 행렬"""
        n = self.dim
        return Matrix.from_columns([self.multiply(basis_vec(n, j), a) for j in range(n)], n)

    def mult_matrix(self) -> Matrix:
        """m: A⊗A → A 를 n²×n 행렬의 전치로. 행 (i,j) = eᵢeⱼ."""
        return Matrix([self.mult[i][j] for i in range(self.dim) for j in range(self.dim)], self.dim)

    def multiply_map(self, t: Vector) -> Vector:
        """m(t), t ∈ A⊗A"""
        n = self.dim
        if len(t) != n * n:
            raise DimensionMismatch(f"multiply_map: 길이 {len(t)} != {n}²")
        out = [ZERO] * n
        for idx, c in enumerate(t):
            if c.is_zero():
                continue
            i, j = divmod(idx, n)
            for k, m in self._sparse[i][j]:
                out[k] = out[k] + c * m
        return tuple(out)

    # ---- A⊗A 에서의 곱 ----

    def multiply_tensor(self, s: Vector, t: Vector) -> Vector:
        """(Σ sᵢⱼ eᵢ⊗eⱼ)(Σ tₖₗ eₖ⊗eₗ) = Σ sᵢⱼtₖₗ (eᵢeₖ)⊗(eⱼeₗ)"""
        n = self.dim
        if len(s) != n * n or len(t) != n * n:
            raise DimensionMismatch("multiply_tensor: Tensor2 길이 불일치")
        out = [ZERO] * (n * n)
        ts = [(divmod(idx, n), c) for idx, c in enumerate(t) if not c.is_zero()]
        for idx, a in enumerate(s):
            if a.is_zero():
                continue
            i, j = divmod(idx, n)
            for (k, l), b in ts:
                left = self._sparse[i][k]
                right = self._sparse[j][l]
                if not left or not right:
                    continue
                ab = a * b
                for p, c1 in left:
                    abc = ab * c1
                    base = p * n
                    for q, c2 in right:
                        out[base + q] = out[base + q] + abc * c2
        return tuple(out)

    def leg_multiply(self, t: Vector, a: Vector, leg: int, side: str) -> Vector:
        """텐서의 한 다리를 a 로 곱한다.

        leg=1, side="left"  → (a⊗1)·t
        leg=1, side="right" → t·(a⊗1)
        leg=2, side="left"  → (1⊗a)·t
        leg=2, side="right" → t·(1⊗a)
        """
        n = self.dim
        out = [ZERO] * (n * n)
        for idx, c in enumerate(t):
            if c.is_zero():
                continue
            i, j = divmod(idx, n)
            e = basis_vec(n, i if leg == 1 else j)
            prod = self.multiply(a, e) if side == "left" else self.multiply(e, a)
            for k, v in enumerate(prod):
                if v.is_zero():
                    continue
                pos = k * n + j if leg == 1 else i * n + k
                out[pos] = out[pos] + c * v
        return tuple(out)

    # ---- 단위원 ----

    def find_unit(self) -> Vector | None:
        """u·eⱼ = eⱼ = eⱼ·u 를 하나의 연립방정식으로 푼다. 결과는 캐시된다."""
        if self._unit is not _UNSET:
            return self._unit
        n = self.dim
        rows, rhs = [], []
        for j in range(n):
            target = basis_vec(n, j)
            for k in range(n):
                rows.append([self.mult[i][j][k] for i in range(n)])
                rhs.append(target[k])
                rows.append([self.mult[j][i][k] for i in range(n)])
                rhs.append(target[k])
        try:
            unit = solve_linear(Matrix(rows, n), tuple(rhs))
        except Inconsistent:
            logger.info("[대수] 단위원 없음 (dim=%d)", n)
            unit = None
        self._unit = unit
        return unit

    # ---- ✻ ----

    def apply_star(self, x: Vector) -> Vector:
        if self.star is None:
            raise StarAbsent("✻ 구조가 없다")
        return self.star.apply(vconj(x))

    # ---- 텐서 제곱 ----

    def tensor_square(self) -> "StructureAlgebra":
        """(a⊗b)(c⊗d) = ac⊗bd 를 Tensor2 규약으로 펼친 n² 차원 대수."""
        n = self.dim
        mult = []
        for i in range(n):
            for j in range(n):
                row = []
                for k in range(n):
                    for l in range(n):
                        row.append(outer(self.mult[i][k], self.mult[j][l]))
                mult.append(row)
        labels = [f"{a}⊗{b}" for a in self.labels for b in self.labels]
        star = kron(self.star, self.star) if self.star is not None else None
        base_unit = self.find_unit()
        has_unit = base_unit is not None
        unit = outer(base_unit, base_unit) if has_unit else _UNSET
        return StructureAlgebra(mult, labels=labels, star=star, unit=unit)

    # ---- 비교 ----

    def __eq__(self, other):
        if not isinstance(other, StructureAlgebra):
            return NotImplemented
        return (self.dim == other.dim and self.mult == other.mult
                and self.labels == other.labels and self.star == other.star)

    __hash__ = None

    def __repr__(self):
        return f"StructureAlgebra(dim={self.dim}, star={'yes' if self.star is not None else 'no'})"
