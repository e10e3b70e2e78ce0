"""가우스 유리수 스칼라 모듈

모든 계산의 기저체. 실수부·허수부를 각각 기약분수(fractions.Fraction)로 보관한다.
Fraction 자체가 기약·양의 분모·0=0/1 정규형을 보장하므로 구조적 동등성이 곧 값의 동등성이다.
"""

from fractions import Fraction

from linalg.errors import DivisionByZero

_F0 = Fraction(0)
_F1 = Fraction(1)


def _as_fraction(val) -> Fraction:
    if isinstance(val, Fraction):
        return val
    if isinstance(val, int):
        return Fraction(val)
    if isinstance(val, str):
        return Fraction(val.strip())
    raise TypeError(f"유리수로 변환할 수 없는 값: {val!r}")


class Scalar:
    """불변 가우스 유리수 re + im·i."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "Scalar":
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    @classmethod
    def coerce(cls, val) -> "Scalar":
        if isinstance(val, Scalar):
            return val
        return cls(val)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # ---- 체 연산 ----

    def __add__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return Scalar._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return Scalar._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        if not self.im and not o.im:
            return Scalar._raw(self.re * o.re, _F0)
        return Scalar._raw(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise DivisionByZero(f"{self} / 0")
        if not o.im:
            return Scalar._raw(self.re / o.re, self.im / o.re)
        norm = o.re * o.re + o.im * o.im
        return Scalar._raw(
            (self.re * o.re + self.im * o.im) / norm,
            (self.im * o.re - self.re * o.im) / norm,
        )

    def __rtruediv__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return Scalar._raw(-self.re, -self.im)

    def conj(self) -> "Scalar":
        if not self.im:
            return self
        return Scalar._raw(self.re, -self.im)

    def norm2(self) -> Fraction:
        """|z|² (유리수)."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self):
        return not self.is_zero()

    # ---- 비교 / 해시 ----

    def __eq__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # ---- 표기 ----

    def __str__(self):
        if not self.im:
            return _frac_text(self.re)
        if not self.re:
            return f"{_frac_text(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"{_frac_text(self.re)}{sign}{_frac_text(abs(self.im))}i"

    def __repr__(self):
        return f"Scalar({self})"


def _frac_text(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _coerce_or_none(val):
    if isinstance(val, Scalar):
        return val
    if isinstance(val, (int, Fraction)):
        return Scalar._raw(Fraction(val), _F0)
    return None


ZERO = Scalar._raw(_F0, _F0)
ONE = Scalar._raw(_F1, _F0)
I = Scalar._raw(_F0, _F1)
