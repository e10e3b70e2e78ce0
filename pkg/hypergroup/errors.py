"""양자 하이퍼그룹 검증 실패 예외

모든 하위 클래스는 ValidationFailed 이며 자기 stage 를 고정한다.
"""

from algebra.errors import StructureError


class ValidationFailed(StructureError):
    stage = "validation"


class SpanDeficient(ValidationFailed):
    stage = "span-right-leg-x"


class InconsistentAntipodeSystem(ValidationFailed):
    stage = "antipode-defining"


class AntipodeNotBijective(ValidationFailed):
    stage = "antipode-bijective"


class AntipodeNotAntiHomomorphism(ValidationFailed):
    stage = "antipode-anti-multiplicative"


class AntipodeMismatch(ValidationFailed):
    stage = "antipode-supplied"


class RightInvarianceFailed(ValidationFailed):
    stage = "right-integral-invariance"


class MirroredAntipodeIdentityFailed(ValidationFailed):
    stage = "antipode-mirrored"


class ModularElementInconsistent(ValidationFailed):
    stage = "modular-element-left"


class ModularElementNotInvertible(ValidationFailed):
    stage = "modular-element-invertible"


class ModularIdentityFailed(ValidationFailed):
    """stage 는 실패한 항등식 이름."""


class NotAutomorphism(ValidationFailed):
    stage = "sigma-multiplicative"


class InvarianceFailed(ValidationFailed):
    stage = "sigma-kms"


class ScalingInconsistent(ValidationFailed):
    stage = "scaling-constant"


class HopfConditionFailed(ValidationFailed):
    stage = "hopf-left-antipode"


class CointegralIntegralVanishes(ValidationFailed):
    stage = "cointegral-integral-nonzero"


class DualVerificationFailed(ValidationFailed):
    stage = "dual"


class BidualMismatch(ValidationFailed):
    stage = "bidual"


class DualityTypeMismatch(ValidationFailed):
    stage = "type-duality"


class RadfordIdentityFailed(ValidationFailed):
    stage = "radford"
