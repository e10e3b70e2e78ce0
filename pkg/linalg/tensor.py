"""A⊗A 평탄화 규약 모듈

Tensor2 는 길이 n² 의 벡터이며 (i, j) ↦ i·n + j (앞 인자가 느린 인덱스)로 저장한다.
"""

from collections.abc import Iterator

from linalg.errors import DimensionMismatch
from linalg.matrix import Matrix, Vector
from linalg.scalar import ONE, ZERO, Scalar


def _check(t: Vector, n: int):
    if len(t) != n * n:
        raise DimensionMismatch(f"Tensor2 길이 {len(t)} != {n}²")


def outer(x: Vector, y: Vector) -> Vector:
    """flatten(x⊗y)"""
    out = []
    for a in x:
        if a.is_zero():
            out.extend((ZERO,) * len(y))
        else:
            out.extend(ZERO if b.is_zero() else a * b for b in y)
    return tuple(out)


def nonzero_entries(t: Vector, n: int) -> Iterator[tuple[int, int, Scalar]]:
    _check(t, n)
    for idx, c in enumerate(t):
        if not c.is_zero():
            i, j = divmod(idx, n)
            yield i, j, c


def flip_matrix(n: int) -> Matrix:
    """ζ(eᵢ⊗eⱼ) = eⱼ⊗eᵢ"""
    rows = [[ZERO] * (n * n) for _ in range(n * n)]
    for i in range(n):
        for j in range(n):
            rows[j * n + i][i * n + j] = ONE
    return Matrix(rows, n * n)


def slice_right(t: Vector, f: Vector, n: int) -> Vector:
    """(ι⊗f)(t)"""
    out = [ZERO] * n
    for i, j, c in nonzero_entries(t, n):
        if not f[j].is_zero():
            out[i] = out[i] + c * f[j]
    return tuple(out)


def slice_left(t: Vector, f: Vector, n: int) -> Vector:
    """(f⊗ι)(t)"""
    out = [ZERO] * n
    for i, j, c in nonzero_entries(t, n):
        if not f[i].is_zero():
            out[j] = out[j] + f[i] * c
    return tuple(out)


def pair2(t: Vector, f: Vector, g: Vector, n: int) -> Scalar:
    """(f⊗g)(t)"""
    acc = ZERO
    for i, j, c in nonzero_entries(t, n):
        if f[i].is_zero() or g[j].is_zero():
            continue
        acc = acc + c * f[i] * g[j]
    return acc
