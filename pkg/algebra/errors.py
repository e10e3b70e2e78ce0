"""구조 검증 예외의 공통 부모"""


class StructureError(Exception):
    """입력이 요구되는 대수 구조가 아닐 때. stage 와 JSON 직렬화 가능한 witness 를 싣는다."""

    stage = "structure"

    def __init__(self, message: str = "", *, stage: str | None = None, witness=None):
        super().__init__(message or self.__class__.__name__)
        if stage is not None:
            self.stage = stage
        self.witness = witness

    def as_dict(self) -> dict:
        return {
            "error": self.__class__.__name__,
            "stage": self.stage,
            "message": str(self),
            "witness": self.witness,
        }


class StarAbsent(StructureError):
    stage = "star"
