"""정확 스칼라 텍스트 표기

JSON 안의 스칼라: 정수, "a/b" 문자열, {"re": "a/b", "im": "c/d"}.
"a/b+c/di" 형태의 문자열도 받는다. 소수(float)는 거부한다.
"""

import re
from fractions import Fraction

from linalg.matrix import Matrix, Vector
from linalg.scalar import Scalar
from parsers.errors import SchemaError

_RATIONAL = r"[+-]?\d+(?:/\d+)?"
_REAL_RE = re.compile(rf"^\s*({_RATIONAL})\s*$")
_IMAG_RE = re.compile(r"^\s*([+-]?)(\d+(?:/\d+)?)?\s*i\s*$")
_COMPLEX_RE = re.compile(rf"^\s*({_RATIONAL})\s*([+-])\s*(\d+(?:/\d+)?)?\s*i\s*$")


class ScalarFormatError(SchemaError):
    pass


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ScalarFormatError(f"유리수가 아니다: {text!r}") from exc


def _parse_text(text: str) -> Scalar:
    text = text.replace(" ", "")
    m = _REAL_RE.match(text)
    if m:
        return Scalar(_fraction(m.group(1)))
    m = _IMAG_RE.match(text)
    if m:
        sign, im = m.groups()
        im_val = _fraction(im) if im else Fraction(1)
        return Scalar(0, -im_val if sign == "-" else im_val)
    m = _COMPLEX_RE.match(text)
    if m:
        re_part, sign, im = m.groups()
        im_val = _fraction(im) if im else Fraction(1)
        return Scalar(_fraction(re_part), im_val if sign == "+" else -im_val)
    raise ScalarFormatError(f"스칼라 표기가 아니다: {text!r}")


def parse_scalar(val) -> Scalar:
    if isinstance(val, bool):
        raise ScalarFormatError(f"불리언은 스칼라가 아니다: {val!r}")
    if isinstance(val, int):
        return Scalar(val)
    if isinstance(val, str):
        return _parse_text(val)
    if isinstance(val, dict):
        if set(val) - {"re", "im"}:
            raise ScalarFormatError(f"알 수 없는 키: {sorted(set(val) - {'re', 'im'})}")
        re_part = parse_scalar(val.get("re", 0))
        im_part = parse_scalar(val.get("im", 0))
        if not (re_part.is_real() and im_part.is_real()):
            raise ScalarFormatError("re/im 은 실수여야 한다")
        return Scalar(re_part.re, im_part.re)
    raise ScalarFormatError(f"스칼라로 읽을 수 없다: {val!r}")


def format_scalar(x: Scalar) -> str | dict:
    """실수는 "a/b" (분모 1 이면 "a"), 복소수는 {"re", "im"}."""
    x = Scalar.coerce(x)
    if x.is_real():
        return str(x)
    return {"re": str(Scalar(x.re)), "im": str(Scalar(x.im))}


def parse_vector(values, length: int | None = None) -> Vector:
    if not isinstance(values, list):
        raise ScalarFormatError("스칼라 목록이어야 한다")
    out = tuple(parse_scalar(v) for v in values)
    if length is not None and len(out) != length:
        raise ScalarFormatError(f"길이 {len(out)} != {length}")
    return out


def parse_matrix(rows, nrows: int, ncols: int) -> Matrix:
    if not isinstance(rows, list) or len(rows) != nrows:
        raise ScalarFormatError(f"행 수가 {nrows} 이어야 한다")
    return Matrix([parse_vector(r, ncols) for r in rows], ncols)


def format_vector(x: Vector) -> list:
    return [format_scalar(c) for c in x]


def format_matrix(m: Matrix) -> list:
    return [format_vector(r) for r in m.rows]
