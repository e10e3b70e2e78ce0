"""구성기 입력 예외"""

from hypergroup.errors import ValidationFailed


class NotAGroup(ValidationFailed):
    """axiom 은 깨진 군 공리 이름 (closure, associativity, identity, inverse, labels)."""

    stage = "group"

    def __init__(self, message: str = "", *, axiom: str, witness=None):
        super().__init__(message or f"군 공리 위반: {axiom}", stage=f"group-{axiom}", witness=witness)
        self.axiom = axiom


class NotASubgroup(ValidationFailed):
    stage = "subgroup"


class NotAProjection(ValidationFailed):
    stage = "projection-idempotent"


class NotGroupLike(ValidationFailed):
    stage = "projection-group-like"
