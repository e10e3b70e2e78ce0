"""검증 스위트

구조 JSON 하나를 받아 수준별(axioms / derived / full) 검증 레코드와 요약을 만든다.
실패는 예외로 새지 않고 첫 실패 레코드로 남는다 (SchemaError 만 그대로 올린다).
"""

import hashlib
import json
import logging
from dataclasses import dataclass, field

from config.checks import CHECK_ANCHORS, all_passed, record
from config.settings import TOOL_NAME, TOOL_VERSION
from duality.bidual import bidual_check
from duality.checks import (
    check_product_formulas,
    compact_discrete_duality_check,
    dual_data_check,
    module_action_records,
    pairing_records,
    radford_check,
)
from duality.dual import DualPackage, build_dual
from hypergroup.axioms import verify_faithful, verify_right_integral_unique
from hypergroup.cointegrals import classify_type, type_records
from hypergroup.errors import DualVerificationFailed, ValidationFailed
from hypergroup.model import QuantumHypergroup
from hypergroup.pipeline import axiom_records, derive_all
from hypergroup.relations import (
    coproduct_is_homomorphism,
    verify_defining_identities,
    verify_hopf_conditions,
    verify_structural_relations,
)
from hypergroup.star import integral_positivity, verify_star_axioms
from linalg.matrix import Matrix
from parsers.scalar_text import format_matrix, format_vector
from parsers.structure_json import parse_structure

logger = logging.getLogger(__name__)

LEVELS = ("axioms", "derived", "full")

# derive_all 이 통과했다면 이미 성립한 단계들
_DERIVATION_CHECKS = (
    "antipode-bijective", "antipode-anti-multiplicative", "right-integral-invariance",
    "modular-element-left", "modular-element-invertible", "modular-element-right",
    "modular-element-antipode", "modular-element-counit", "modular-element-inverse",
    "sigma-multiplicative", "sigma-kms", "sigma-invariance",
    "sigma-prime-multiplicative", "sigma-prime-kms", "sigma-prime-invariance",
    "scaling-constant",
)


@dataclass
class SuiteResult:
    level: str
    records: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    hypergroup: QuantumHypergroup | None = None
    dual: DualPackage | None = None

    @property
    def passed(self) -> bool:
        return all_passed(self.records)

    def extend(self, records: list[dict]):
        """이미 있는 이름은 건너뛴다."""
        seen = {r["name"] for r in self.records}
        for r in records:
            if r["name"] not in seen:
                self.records.append(r)
                seen.add(r["name"])


def failure_record(exc: ValidationFailed) -> dict:
    stage = exc.stage
    if stage.startswith("dual:"):
        return record("dual-hypergroup", False, {"stage": stage[5:], "detail": exc.witness})
    if stage in CHECK_ANCHORS:
        return record(stage, False, exc.witness)
    return record("pipeline", False, {"stage": stage, "message": str(exc)})


def input_digest(data) -> str:
    canonical = json.dumps(data, sort_keys=True, ensure_ascii=False, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


# ============================================================
# 요약
# ============================================================

def derived_summary(h: QuantumHypergroup) -> dict:
    d = h.data
    n = h.dim
    kind = classify_type(h)
    S2 = d.S @ d.S
    summary = {
        "dim": n,
        "labels": list(h.alg.labels),
        "antipode": format_matrix(d.S),
        "antipode_square_identity": S2 == Matrix.identity(n),
        "psi": format_vector(d.psi),
        "delta": format_vector(d.delta),
        "delta_inv": format_vector(d.delta_inv),
        "sigma": format_matrix(d.sigma),
        "sigma_prime": format_matrix(d.sigma_prime),
        "tau": str(d.tau),
        "type": {key: kind[key] for key in ("unital", "compact", "discrete", "finite")},
        "cointegrals": {side: [format_vector(v) for v in kind["cointegrals"][side]]
                        for side in ("left", "right")},
        "coproduct_homomorphism": coproduct_is_homomorphism(h),
    }
    if h.alg.star is not None:
        summary["positivity"] = {
            "phi": integral_positivity(h, h.left_integral),
            "psi": integral_positivity(h, d.psi),
        }
    return summary


def type_label(summary: dict) -> str:
    kind = summary.get("type", {})
    if kind.get("finite"):
        return "finite"
    if kind.get("compact"):
        return "compact"
    if kind.get("discrete"):
        return "discrete"
    return "general"


# ============================================================
# 수준별 실행
# ============================================================

def derived_records(h: QuantumHypergroup, antipode_supplied: bool) -> list[dict]:
    records = [record(name, True) for name in _DERIVATION_CHECKS]
    if antipode_supplied:
        records.append(record("antipode-supplied", True))
    records += verify_faithful(h, h.data.psi, "right-integral-faithful")
    records += verify_defining_identities(h)
    records += verify_right_integral_unique(h, h.data.psi)
    records += verify_structural_relations(h)
    if h.alg.star is not None:
        records += verify_star_axioms(h)
    records += verify_hopf_conditions(h)
    records += type_records(h)
    return records


def dual_records(pkg: DualPackage) -> list[dict]:
    records = [record("dual-hypergroup", True), record("dual-antipode", True)]
    records += pairing_records(pkg)
    records += check_product_formulas(pkg)
    records += module_action_records(pkg)
    records += dual_data_check(pkg)
    records += radford_check(pkg)
    records += compact_discrete_duality_check(pkg)
    try:
        pkg2 = build_dual(pkg.dual)
    except DualVerificationFailed as exc:
        records.append(record("bidual-bijective", False, {"stage": exc.stage}))
        return records
    records += bidual_check(pkg, pkg2)
    return records


def run_suite(data: dict, level: str = "full") -> SuiteResult:
    if level not in LEVELS:
        raise ValueError(f"알 수 없는 수준: {level} (가능: {', '.join(LEVELS)})")
    alg, comult, counit, left_integral, antipode = parse_structure(data)
    raw = QuantumHypergroup(alg=alg, comult=comult, counit=counit, left_integral=left_integral)
    result = SuiteResult(level=level, summary={"dim": raw.dim})

    result.extend(axiom_records(raw))
    if level == "axioms" or not result.passed:
        return result

    try:
        h = derive_all(raw, antipode=antipode)
    except ValidationFailed as exc:
        logger.info("[스위트] 유도 실패: %s", exc.stage)
        result.extend([failure_record(exc)])
        return result
    result.hypergroup = h
    result.extend(derived_records(h, antipode is not None))
    result.summary.update(derived_summary(h))
    if level == "derived":
        return result

    try:
        pkg = build_dual(h)
    except ValidationFailed as exc:
        result.extend([failure_record(exc)])
        return result
    result.dual = pkg
    result.extend(dual_records(pkg))
    dd = pkg.dual.data
    result.summary["dual"] = {
        "delta": format_vector(dd.delta),
        "delta_functional": format_vector(pkg.functional(dd.delta)),
        "tau": str(dd.tau),
        "type": {key: value for key, value in classify_type(pkg.dual).items() if key != "cointegrals"},
    }
    result.summary["multiplier_collapse"] = True
    return result


def make_report(data, result: SuiteResult) -> dict:
    return {
        "tool": TOOL_NAME,
        "version": TOOL_VERSION,
        "input_digest": input_digest(data),
        "level": result.level,
        "checks": result.records,
        "summary": result.summary,
        "status": "pass" if result.passed else "fail",
    }
