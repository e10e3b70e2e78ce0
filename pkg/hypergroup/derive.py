"""유도 데이터 계산 모듈

순서: S → ψ → δ → σ → σ′ → τ. 각 함수는 앞 단계의 결과를 인자로 받고,
검증에 실패하면 해당 ValidationFailed 하위 예외를 낸다.
"""

import logging

from hypergroup.errors import (
    AntipodeNotAntiHomomorphism,
    AntipodeNotBijective,
    InconsistentAntipodeSystem,
    InvarianceFailed,
    MirroredAntipodeIdentityFailed,
    ModularElementInconsistent,
    ModularElementNotInvertible,
    ModularIdentityFailed,
    NotAutomorphism,
    RightInvarianceFailed,
    ScalingInconsistent,
    SpanDeficient,
)
from hypergroup.model import QuantumHypergroup, functional_gram
from linalg.errors import Inconsistent, Singular
from linalg.matrix import Matrix, Vector, basis_vec, dot, vscale
from linalg.scalar import ONE, Scalar
from linalg.solve import invert, rank, solve_linear, solve_matrix
from linalg.tensor import slice_left, slice_right

logger = logging.getLogger(__name__)


# ============================================================
# 조각 (slice) 도우미
# ============================================================

def antipode_sources(h: QuantumHypergroup, f: Vector) -> list[Vector]:
    """xᵢⱼ = (ι⊗f)(Δ(eᵢ)(1⊗eⱼ)), (i,j) 사전식 순서."""
    n = h.dim
    return [
        slice_right(h.alg.leg_multiply(h.coproducts[i], basis_vec(n, j), 2, "right"), f, n)
        for i in range(n) for j in range(n)
    ]


def antipode_targets(h: QuantumHypergroup, f: Vector) -> list[Vector]:
    """yᵢⱼ = (ι⊗f)((1⊗eᵢ)Δ(eⱼ))"""
    n = h.dim
    return [
        slice_right(h.alg.leg_multiply(h.coproducts[j], basis_vec(n, i), 2, "left"), f, n)
        for i in range(n) for j in range(n)
    ]


def mirrored_sources(h: QuantumHypergroup, psi: Vector) -> list[Vector]:
    """(ψ⊗ι)((eⱼ⊗1)Δ(eᵢ)), (i,j) 순서"""
    n = h.dim
    return [
        slice_left(h.alg.leg_multiply(h.coproducts[i], basis_vec(n, j), 1, "left"), psi, n)
        for i in range(n) for j in range(n)
    ]


def mirrored_targets(h: QuantumHypergroup, psi: Vector) -> list[Vector]:
    """(ψ⊗ι)(Δ(eⱼ)(eᵢ⊗1))"""
    n = h.dim
    return [
        slice_left(h.alg.leg_multiply(h.coproducts[j], basis_vec(n, i), 1, "right"), psi, n)
        for i in range(n) for j in range(n)
    ]


def spans_algebra(vectors: list[Vector], n: int) -> bool:
    return rank(Matrix.from_columns(vectors, n)) == n


def _pair(idx: int, n: int) -> list[int]:
    return list(divmod(idx, n))


# ============================================================
# S
# ============================================================

def derive_antipode(h: QuantumHypergroup) -> tuple[Matrix, Matrix]:
    """S(xᵢⱼ) = yᵢⱼ 를 행렬 S 에 대해 푼다.

    Returns:
        (S, S⁻¹)
    """
    n = h.dim
    phi = h.left_integral
    xs = antipode_sources(h, phi)
    ys = antipode_targets(h, phi)
    X = Matrix.from_columns(xs, n)
    if rank(X) < n:
        raise SpanDeficient("(ι⊗φ)(Δ(a)(1⊗b)) 가 A 를 생성하지 않는다",
                            witness={"rank": rank(X), "dim": n})
    Y = Matrix.from_columns(ys, n)
    try:
        S = solve_matrix(X.T, Y.T).T
    except Inconsistent as exc:
        raise InconsistentAntipodeSystem(str(exc), witness={"dim": n}) from exc
    try:
        S_inv = invert(S)
    except Singular as exc:
        raise AntipodeNotBijective(str(exc), witness={"rank": rank(S)}) from exc
    for i in range(n):
        for j in range(n):
            lhs = S.apply(h.alg.mult[i][j])
            rhs = h.alg.multiply(S.column(j), S.column(i))
            if lhs != rhs:
                raise AntipodeNotAntiHomomorphism(f"S(e{i}e{j}) != S(e{j})S(e{i})",
                                                  witness={"pair": [i, j]})
    logger.info("[파이프라인] S 유도 완료 (dim=%d)", n)
    return S, S_inv


# ============================================================
# ψ
# ============================================================

def derive_right_integral(h: QuantumHypergroup, S: Matrix) -> Vector:
    """ψ = φ∘S 를 만들고 오른쪽 불변성과 거울 항등식을 확인한다."""
    n = h.dim
    psi = S.left_apply(h.left_integral)
    unit = h.alg.find_unit()
    for a, t in enumerate(h.coproducts):
        if slice_left(t, psi, n) != vscale(psi[a], unit):
            raise RightInvarianceFailed(f"(ψ⊗ι)Δ(e{a}) != ψ(e{a})1", witness={"basis": a})
    for idx, (src, tgt) in enumerate(zip(mirrored_sources(h, psi), mirrored_targets(h, psi))):
        if S.apply(src) != tgt:
            raise MirroredAntipodeIdentityFailed("S((ψ⊗ι)((b⊗1)Δ(a))) 불일치",
                                                 witness={"pair": _pair(idx, n)})
    return psi


# ============================================================
# δ
# ============================================================

def derive_modular_element(h: QuantumHypergroup, S: Matrix, psi: Vector) -> tuple[Vector, Vector]:
    """(φ⊗ι)Δ(eᵢ)/φ(eᵢ) 를 기저마다 계산하고 서로 맞는지 본다.

    Returns:
        (δ, δ⁻¹)
    """
    n = h.dim
    phi = h.left_integral
    unit = h.alg.find_unit()
    delta = None
    for i, t in enumerate(h.coproducts):
        s = slice_left(t, phi, n)
        if phi[i].is_zero():
            if any(not c.is_zero() for c in s):
                raise ModularElementInconsistent(f"φ(e{i}) = 0 인데 조각이 0 이 아니다",
                                                 witness={"basis": i})
            continue
        cand = vscale(ONE / phi[i], s)
        if delta is None:
            delta = cand
        elif cand != delta:
            raise ModularElementInconsistent(f"e{i} 에서 δ 후보 불일치", witness={"basis": i})
    if delta is None:
        raise ModularElementInconsistent("φ = 0", witness=None)

    try:
        delta_inv = solve_linear(h.alg.left_mult_matrix(delta), unit)
    except Inconsistent as exc:
        raise ModularElementNotInvertible("δ·x = 1 해 없음", witness=None) from exc
    if h.alg.multiply(delta_inv, delta) != unit:
        raise ModularElementNotInvertible("x·δ != 1", witness=None)

    for a, t in enumerate(h.coproducts):
        if slice_right(t, psi, n) != vscale(psi[a], delta_inv):
            raise ModularIdentityFailed("(ι⊗ψ)Δ(a) != ψ(a)δ⁻¹", stage="modular-element-right",
                                        witness={"basis": a})
    phi_s = S.left_apply(phi)
    for a in range(n):
        if phi_s[a] != dot(phi, h.alg.multiply(basis_vec(n, a), delta)):
            raise ModularIdentityFailed("φ(S(a)) != φ(aδ)", stage="modular-element-antipode",
                                        witness={"basis": a})
    if dot(h.counit, delta) != ONE:
        raise ModularIdentityFailed("ε(δ) != 1", stage="modular-element-counit",
                                    witness={"value": str(dot(h.counit, delta))})
    if S.apply(delta) != delta_inv:
        raise ModularIdentityFailed("S(δ) != δ⁻¹", stage="modular-element-inverse", witness=None)
    logger.info("[파이프라인] δ 유도 완료")
    return delta, delta_inv


# ============================================================
# σ, σ′
# ============================================================

def _stage(name: str, suffix: str) -> str:
    return f"{name.replace('_', '-')}-{suffix}"


def _check_automorphism(h: QuantumHypergroup, M: Matrix, name: str):
    n = h.dim
    try:
        invert(M)
    except Singular as exc:
        raise NotAutomorphism(f"{name} 가역 아님", stage=_stage(name, "multiplicative"),
                              witness={"map": name}) from exc
    for i in range(n):
        for j in range(n):
            if M.apply(h.alg.mult[i][j]) != h.alg.multiply(M.column(i), M.column(j)):
                raise NotAutomorphism(f"{name}(e{i}e{j}) != {name}(e{i}){name}(e{j})",
                                      stage=_stage(name, "multiplicative"), witness={"map": name, "pair": [i, j]})


def _check_kms(h: QuantumHypergroup, f: Vector, gram: Matrix, M: Matrix, name: str):
    """f(eᵢeⱼ) = f(eⱼ·M(eᵢ)) 그리고 f∘M = f"""
    n = h.dim
    for i in range(n):
        Mi = M.column(i)
        for j in range(n):
            if gram[i, j] != dot(f, h.alg.multiply(basis_vec(n, j), Mi)):
                raise InvarianceFailed(f"{name}: f(ab) != f(b·{name}(a))",
                                       stage=_stage(name, "kms"), witness={"map": name, "pair": [i, j]})
    if M.left_apply(f) != tuple(f):
        raise InvarianceFailed(f"f∘{name} != f", stage=_stage(name, "invariance"),
                               witness={"map": name})


def derive_sigma(h: QuantumHypergroup, gram: Matrix) -> Matrix:
    """Φᵀ = Φ·σ ⇒ σ = Φ⁻¹Φᵀ"""
    sigma = invert(gram) @ gram.T
    _check_automorphism(h, sigma, "sigma")
    _check_kms(h, h.left_integral, gram, sigma, "sigma")
    return sigma


def derive_sigma_prime(h: QuantumHypergroup, S: Matrix, S_inv: Matrix, sigma: Matrix,
                       psi: Vector, psi_gram: Matrix) -> Matrix:
    """σ′ = S⁻¹σ⁻¹S"""
    sigma_prime = S_inv @ invert(sigma) @ S
    _check_automorphism(h, sigma_prime, "sigma_prime")
    _check_kms(h, psi, psi_gram, sigma_prime, "sigma_prime")
    return sigma_prime


def derive_modular_automorphism(h: QuantumHypergroup, which: str, **known) -> Matrix:
    """which = "sigma" | "sigma_prime". σ′ 에는 S, S_inv, sigma, psi 가 필요하다."""
    gram = known.get("gram") or functional_gram(h, h.left_integral)
    if which == "sigma":
        return derive_sigma(h, gram)
    if which == "sigma_prime":
        psi = known["psi"]
        sigma = known.get("sigma") or derive_sigma(h, gram)
        return derive_sigma_prime(h, known["S"], known["S_inv"], sigma, psi,
                                  functional_gram(h, psi))
    raise ValueError(f"알 수 없는 모듈러 자기동형: {which}")


# ============================================================
# τ
# ============================================================

def derive_scaling_constant(h: QuantumHypergroup, S: Matrix) -> Scalar:
    """φ∘S² = τφ 를 만족하는 유일한 τ."""
    n = h.dim
    phi = h.left_integral
    phi_s2 = (S @ S).left_apply(phi)
    pivot = next(i for i in range(n) if not phi[i].is_zero())
    tau = phi_s2[pivot] / phi[pivot]
    for j in range(n):
        if phi_s2[j] != tau * phi[j]:
            raise ScalingInconsistent(f"φ(S²(e{j})) != τφ(e{j})", witness={"basis": j, "tau": str(tau)})
    if h.alg.star is not None and tau * tau.conj() != ONE:
        raise ScalingInconsistent("|τ| != 1", stage="star-scaling-constant", witness={"tau": str(tau)})
    logger.info("[파이프라인] τ = %s", tau)
    return tau
