"""정확 선형대수 예외 모듈"""


class LinalgError(Exception):
    """linalg 패키지 예외의 공통 부모."""


class DivisionByZero(LinalgError, ZeroDivisionError):
    pass


class DimensionMismatch(LinalgError, ValueError):
    pass


class Inconsistent(LinalgError):
    """연립방정식에 해가 없다."""


class Singular(LinalgError):
    """정사각 행렬이 가역이 아니다."""


class NotHermitian(LinalgError):
    pass
