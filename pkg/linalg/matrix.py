"""정확 밀집 행렬 / 벡터 모듈

Vector 는 Scalar 튜플, Matrix 는 행 튜플의 튜플이다.
모든 연산은 차원을 검사하고 새 객체를 돌려준다 (불변).
"""

from collections.abc import Iterable, Sequence

from linalg.errors import DimensionMismatch
from linalg.scalar import ONE, ZERO, Scalar

Vector = tuple  # tuple[Scalar, ...]


# ============================================================
# 벡터 도우미
# ============================================================

def vec(values: Iterable) -> Vector:
    return tuple(Scalar.coerce(v) for v in values)


def zero_vec(n: int) -> Vector:
    return (ZERO,) * n


def basis_vec(n: int, i: int) -> Vector:
    out = [ZERO] * n
    out[i] = ONE
    return tuple(out)


def _check_len(x: Sequence, y: Sequence, what: str):
    if len(x) != len(y):
        raise DimensionMismatch(f"{what}: 길이 {len(x)} != {len(y)}")


def vadd(x: Vector, y: Vector) -> Vector:
    _check_len(x, y, "vadd")
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: Vector, y: Vector) -> Vector:
    _check_len(x, y, "vsub")
    return tuple(a - b for a, b in zip(x, y))


def vscale(c, x: Vector) -> Vector:
    c = Scalar.coerce(c)
    if c.is_zero():
        return zero_vec(len(x))
    return tuple(c * a for a in x)


def vconj(x: Vector) -> Vector:
    return tuple(a.conj() for a in x)


def dot(f: Vector, x: Vector) -> Scalar:
    """켤레 없는 쌍선형 합 Σ fᵢxᵢ (공벡터 적용)."""
    _check_len(f, x, "dot")
    acc = ZERO
    for a, b in zip(f, x):
        if a.is_zero() or b.is_zero():
            continue
        acc = acc + a * b
    return acc


def is_zero_vec(x: Vector) -> bool:
    return all(a.is_zero() for a in x)


def first_difference(x: Vector, y: Vector) -> int | None:
    """처음으로 다른 좌표의 인덱스. 같으면 None."""
    _check_len(x, y, "first_difference")
    for i, (a, b) in enumerate(zip(x, y)):
        if a != b:
            return i
    return None


# ============================================================
# 행렬
# ============================================================

class Matrix:
    """rows×cols 정확 행렬."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        data = tuple(vec(r) for r in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        for r in data:
            if len(r) != ncols:
                raise DimensionMismatch(f"행 길이 {len(r)} != {ncols}")
        object.__setattr__(self, "rows", data)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", ncols)

    @classmethod
    def _raw(cls, rows: tuple, nrows: int, ncols: int) -> "Matrix":
        obj = object.__new__(cls)
        object.__setattr__(obj, "rows", rows)
        object.__setattr__(obj, "nrows", nrows)
        object.__setattr__(obj, "ncols", ncols)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # ---- 생성자 ----

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw(tuple(basis_vec(n, i) for i in range(n)), n, n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        row = zero_vec(ncols)
        return cls._raw((row,) * nrows, nrows, ncols)

    @classmethod
    def diag(cls, values: Iterable) -> "Matrix":
        vals = vec(values)
        n = len(vals)
        rows = []
        for i, v in enumerate(vals):
            r = [ZERO] * n
            r[i] = v
            rows.append(tuple(r))
        return cls._raw(tuple(rows), n, n)

    @classmethod
    def from_columns(cls, cols: Sequence[Vector], nrows: int | None = None) -> "Matrix":
        if nrows is None:
            if not cols:
                raise DimensionMismatch("열이 없으면 nrows 가 필요하다")
            nrows = len(cols[0])
        for c in cols:
            if len(c) != nrows:
                raise DimensionMismatch(f"열 길이 {len(c)} != {nrows}")
        rows = tuple(tuple(c[i] for c in cols) for i in range(nrows))
        return cls._raw(rows, nrows, len(cols))

    # ---- 접근 ----

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    # ---- 연산 ----

    @property
    def T(self) -> "Matrix":
        rows = tuple(zip(*self.rows)) if self.nrows else ()
        if not rows:
            rows = tuple(() for _ in range(self.ncols))
        return Matrix._raw(tuple(rows), self.ncols, self.nrows)

    def conj(self) -> "Matrix":
        return Matrix._raw(tuple(vconj(r) for r in self.rows), self.nrows, self.ncols)

    def apply(self, x: Vector) -> Vector:
        """M·x"""
        if len(x) != self.ncols:
            raise DimensionMismatch(f"apply: {self.shape} · 길이 {len(x)}")
        nz = [(j, a) for j, a in enumerate(x) if not a.is_zero()]
        out = []
        for r in self.rows:
            acc = ZERO
            for j, a in nz:
                m = r[j]
                if not m.is_zero():
                    acc = acc + m * a
            out.append(acc)
        return tuple(out)

    def left_apply(self, f: Vector) -> Vector:
        """공벡터 f 에 대해 f·M (즉 f∘M)."""
        if len(f) != self.nrows:
            raise DimensionMismatch(f"left_apply: 길이 {len(f)} · {self.shape}")
        acc = [ZERO] * self.ncols
        for a, r in zip(f, self.rows):
            if a.is_zero():
                continue
            for j, m in enumerate(r):
                if not m.is_zero():
                    acc[j] = acc[j] + a * m
        return tuple(acc)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"matmul: {self.shape} @ {other.shape}")
        rows = tuple(other.left_apply(r) for r in self.rows)
        return Matrix._raw(rows, self.nrows, other.ncols)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"add: {self.shape} + {other.shape}")
        return Matrix._raw(tuple(vadd(a, b) for a, b in zip(self.rows, other.rows)),
                           self.nrows, self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"sub: {self.shape} - {other.shape}")
        return Matrix._raw(tuple(vsub(a, b) for a, b in zip(self.rows, other.rows)),
                           self.nrows, self.ncols)

    def scale(self, c) -> "Matrix":
        return Matrix._raw(tuple(vscale(c, r) for r in self.rows), self.nrows, self.ncols)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.nrows, self.ncols, self.rows))

    def first_column_difference(self, other: "Matrix") -> tuple[int, int] | None:
        """처음 다른 (행, 열). 열 우선으로 훑어 기저 인덱스 증인을 만든다."""
        if self.shape != other.shape:
            raise DimensionMismatch(f"compare: {self.shape} vs {other.shape}")
        for j in range(self.ncols):
            for i in range(self.nrows):
                if self.rows[i][j] != other.rows[i][j]:
                    return i, j
        return None

    def __repr__(self):
        body = "; ".join(" ".join(str(a) for a in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: {body})"


def kron(m: Matrix, n: Matrix) -> Matrix:
    """크로네커 곱. 행·열 모두 (i,j) ↦ i·dim₂ + j 규약 (앞 인자가 느린 인덱스)."""
    rows = []
    for mr in m.rows:
        for nr in n.rows:
            out = []
            for a in mr:
                if a.is_zero():
                    out.extend((ZERO,) * n.ncols)
                else:
                    out.extend(ZERO if b.is_zero() else a * b for b in nr)
            rows.append(tuple(out))
    return Matrix._raw(tuple(rows), m.nrows * n.nrows, m.ncols * n.ncols)
