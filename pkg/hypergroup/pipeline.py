"""검증·유도 파이프라인

공리 검증 → 충실성 → S → ψ → δ → σ → σ′ → τ → 관계식.
첫 번째로 깨진 조건에서 ValidationFailed(stage=검증 이름) 로 중단하며,
중간 단계의 DerivedData 는 절대 밖으로 내보내지 않는다.
"""

import logging
from dataclasses import replace

from algebra.checks import check_associativity, check_nondegenerate, check_star, check_unit
from algebra.structure import StructureAlgebra
from config.checks import first_failure
from hypergroup.axioms import (
    verify_comultiplication,
    verify_counit,
    verify_faithful,
    verify_left_integral,
    verify_right_integral_unique,
)
from hypergroup.cointegrals import classify_type
from hypergroup.derive import (
    derive_antipode,
    derive_modular_element,
    derive_right_integral,
    derive_scaling_constant,
    derive_sigma,
    derive_sigma_prime,
)
from hypergroup.errors import AntipodeMismatch, HopfConditionFailed, ValidationFailed
from hypergroup.model import DerivedData, QuantumHypergroup, functional_gram
from hypergroup.relations import (
    verify_defining_identities,
    verify_hopf_conditions,
    verify_structural_relations,
)
from hypergroup.star import star_invariant_records, verify_star_axioms
from linalg.matrix import Matrix, Vector, vec

logger = logging.getLogger(__name__)


def require(records: list[dict]):
    """첫 실패 레코드를 ValidationFailed 로 바꾼다."""
    bad = first_failure(records)
    if bad is not None:
        raise ValidationFailed(f"{bad['name']} 실패: {bad['anchor']}",
                               stage=bad["name"], witness=bad["witness"])


def axiom_records(h: QuantumHypergroup) -> list[dict]:
    """유도 이전 단계의 모든 공리 레코드 (정해진 순서)."""
    alg = h.alg
    records = []
    records += check_associativity(alg)
    records += check_nondegenerate(alg)
    records += check_unit(alg)
    if alg.star is not None:
        records += check_star(alg)
    records += verify_comultiplication(h)
    records += verify_counit(h)
    records += verify_left_integral(h)
    records += verify_faithful(h, h.left_integral)
    if alg.star is not None:
        records += star_invariant_records(h)
    return records


def derive_all(h: QuantumHypergroup, antipode: Matrix | None = None) -> QuantumHypergroup:
    """h 를 검증하고 DerivedData 가 채워진 새 객체를 돌려준다.

    antipode 가 주어지면 유도된 S 와 정확히 같아야 한다.
    """
    n = h.dim
    h.alg.find_unit()
    require(axiom_records(h))
    logger.info("[파이프라인] 공리 통과 (dim=%d)", n)

    S, S_inv = derive_antipode(h)
    if antipode is not None and antipode != S:
        diff = antipode.first_column_difference(S) if antipode.shape == S.shape else None
        raise AntipodeMismatch("입력 antipode 가 유도된 S 와 다르다",
                               witness={"basis": diff[1], "component": diff[0]} if diff else None)

    psi = derive_right_integral(h, S)
    require(verify_faithful(h, psi, "right-integral-faithful"))
    delta, delta_inv = derive_modular_element(h, S, psi)
    gram = functional_gram(h, h.left_integral)
    psi_gram = functional_gram(h, psi)
    sigma = derive_sigma(h, gram)
    sigma_prime = derive_sigma_prime(h, S, S_inv, sigma, psi, psi_gram)
    tau = derive_scaling_constant(h, S)

    derived = DerivedData(
        S=S, S_inv=S_inv, psi=psi, delta=delta, delta_inv=delta_inv,
        sigma=sigma, sigma_prime=sigma_prime, tau=tau, gram=gram, psi_gram=psi_gram,
    )
    out = replace(h, derived=derived)

    require(verify_defining_identities(out))
    require(verify_right_integral_unique(out, psi))
    require(verify_structural_relations(out))
    if out.alg.star is not None:
        require(verify_star_axioms(out))
    hopf = verify_hopf_conditions(out)
    bad = first_failure(hopf)
    if bad is not None:
        raise HopfConditionFailed(f"{bad['name']} 실패", stage=bad["name"], witness=bad["witness"])
    classify_type(out)
    logger.info("[파이프라인] 유도 완료: τ=%s", tau)
    return out


def build_hypergroup(alg: StructureAlgebra, comult: Matrix, counit: Vector, left_integral: Vector,
                     antipode: Matrix | None = None) -> QuantumHypergroup:
    h = QuantumHypergroup(alg=alg, comult=comult, counit=vec(counit),
                          left_integral=vec(left_integral))
    return derive_all(h, antipode=antipode)
