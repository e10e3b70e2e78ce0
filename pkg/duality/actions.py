"""A 와 Â 사이의 네 가지 모듈 작용

  "a>w" : a▸ω = ω(·a)        → 쌍대 벡터
  "w<a" : ω◂a = ω(a·)        → 쌍대 벡터
  "w>a" : ω▸a = (ι⊗ω)Δ(a)    → A 벡터
  "a<w" : a◂ω = (ω⊗ι)Δ(a)    → A 벡터

인자 순서는 기호에 적힌 순서를 따른다. 유한차원이므로 M(Â) = Â.
"""

from duality.dual import DualPackage
from linalg.errors import DimensionMismatch
from linalg.matrix import Vector
from linalg.tensor import slice_left, slice_right

KINDS = ("a>w", "w<a", "w>a", "a<w")


def module_action(pkg: DualPackage, kind: str, x: Vector, y: Vector) -> Vector:
    n = pkg.dim
    if len(x) != n or len(y) != n:
        raise DimensionMismatch(f"module_action: 길이 {len(x)}, {len(y)} != {n}")
    h = pkg.source
    if kind == "a>w":
        f = pkg.functional(y)
        return pkg.from_functional(h.alg.right_mult_matrix(x).left_apply(f))
    if kind == "w<a":
        f = pkg.functional(x)
        return pkg.from_functional(h.alg.left_mult_matrix(y).left_apply(f))
    if kind == "w>a":
        return slice_right(h.comult.apply(y), pkg.functional(x), n)
    if kind == "a<w":
        return slice_left(h.comult.apply(x), pkg.functional(y), n)
    raise ValueError(f"알 수 없는 작용: {kind} (가능: {', '.join(KINDS)})")
