"""쌍대적분(co-integral)과 유형 분류"""

from config.checks import record
from hypergroup.errors import CointegralIntegralVanishes
from hypergroup.model import QuantumHypergroup
from linalg.matrix import Matrix, Vector, basis_vec, dot
from linalg.solve import kernel
from linalg.tensor import outer


def cointegral_space(h: QuantumHypergroup, side: str = "left") -> list[Vector]:
    """left: eₐh = ε(eₐ)h, right: h·eₐ = ε(eₐ)h 의 해공간 기저."""
    n = h.dim
    alg = h.alg
    rows = []
    for a in range(n):
        ea = basis_vec(n, a)
        op = alg.left_mult_matrix(ea) if side == "left" else alg.right_mult_matrix(ea)
        op = op - Matrix.identity(n).scale(h.counit[a])
        rows.extend(op.rows)
    return kernel(Matrix(rows, n))


def classify_type(h: QuantumHypergroup) -> dict:
    """{"compact", "discrete", "finite", "unital", "cointegrals": {...}}.

    0 이 아닌 쌍대적분 h 에 대해 φ(h) = 0 이면 CointegralIntegralVanishes.
    """
    unit = h.alg.find_unit()
    compact = unit is not None and h.comult.apply(unit) == outer(unit, unit)
    left = cointegral_space(h, "left")
    right = cointegral_space(h, "right")
    for side, space in (("left", left), ("right", right)):
        for v in space:
            if dot(h.left_integral, v).is_zero():
                raise CointegralIntegralVanishes(f"{side} 쌍대적분에서 φ(h) = 0",
                                                 witness={"side": side})
    discrete = bool(left)
    return {
        "unital": unit is not None,
        "compact": compact,
        "discrete": discrete,
        "finite": compact and discrete,
        "cointegrals": {"left": left, "right": right},
    }


def type_records(h: QuantumHypergroup) -> list[dict]:
    try:
        kind = classify_type(h)
    except CointegralIntegralVanishes as exc:
        return [record("cointegral-integral-nonzero", False, exc.witness)]
    spaces = kind["cointegrals"]
    return [
        record("compact-type", kind["compact"], {"unital": kind["unital"]}),
        record("discrete-type", kind["discrete"],
               {"left_dimension": len(spaces["left"]), "right_dimension": len(spaces["right"])}),
        record("cointegral-integral-nonzero", True),
    ]
