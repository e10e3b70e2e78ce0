"""입력 파일 형식 오류"""


class SchemaError(ValueError):
    """JSON 구조·스칼라 표기·크기 제한 위반. CLI 종료 코드 2."""
