"""검증 항목 카탈로그

이름(안정 식별자) → 앵커(검증하는 항등식) 의 단일 사전.
record() 는 등록되지 않은 이름에 KeyError 를 낸다.
"""

CHECK_ANCHORS = {
    "pipeline": "verification pipeline completes",
    # 대수
    "associativity": "(eᵢeⱼ)eₖ = eᵢ(eⱼeₖ)",
    "nondegenerate-product": "a·A = 0 ⇒ a = 0 and A·a = 0 ⇒ a = 0",
    "unit-exists": "∃u: u·eⱼ = eⱼ = eⱼ·u",
    "star-involutive": "(x✻)✻ = x",
    "star-conjugate-linear": "(λx)✻ = conj(λ)·x✻",
    "star-anti-multiplicative": "(xy)✻ = y✻x✻",
    # 공곱 / 쌍대단위 / 적분
    "coassociativity": "(Δ⊗ι)∘Δ = (ι⊗Δ)∘Δ",
    "coproduct-regular": "Δ(A)(1⊗A) ⊆ A⊗A and (A⊗1)Δ(A) ⊆ A⊗A",
    "counit-left": "(ε⊗ι)∘Δ = ι",
    "counit-right": "(ι⊗ε)∘Δ = ι",
    "counit-multiplicative": "ε(ab) = ε(a)ε(b)",
    "counit-unital": "ε(1) = 1",
    "counit-unique": "(ι⊗ε′)∘Δ = ι ⇒ ε′ = ε",
    "left-integral-nonzero": "φ ≠ 0",
    "left-integral-invariance": "(ι⊗φ)Δ(a) = φ(a)·1",
    "left-integral-unique": "(ι⊗f)Δ(a) = f(a)·1 ⇒ f = λφ",
    "right-integral-unique": "(f⊗ι)Δ(a) = f(a)·1 ⇒ f = λψ",
    "left-integral-faithful": "det[φ(eᵢeⱼ)] ≠ 0",
    "right-integral-faithful": "det[ψ(eᵢeⱼ)] ≠ 0",
    "span-right-leg-x": "span{(ι⊗φ)(Δ(a)(1⊗b))} = A",
    "span-right-leg-y": "span{(ι⊗φ)((1⊗a)Δ(b))} = A",
    "span-left-leg-x": "span{(ψ⊗ι)((b⊗1)Δ(a))} = A",
    "span-left-leg-y": "span{(ψ⊗ι)(Δ(b)(a⊗1))} = A",
    # 유도 데이터
    "antipode-defining": "S((ι⊗φ)(Δ(a)(1⊗b))) = (ι⊗φ)((1⊗a)Δ(b))",
    "antipode-bijective": "S invertible",
    "antipode-anti-multiplicative": "S(ab) = S(b)S(a)",
    "antipode-supplied": "S_input = S",
    "right-integral-invariance": "(ψ⊗ι)Δ(a) = ψ(a)·1",
    "antipode-mirrored": "S((ψ⊗ι)((b⊗1)Δ(a))) = (ψ⊗ι)(Δ(b)(a⊗1))",
    "modular-element-left": "(φ⊗ι)Δ(a) = φ(a)δ",
    "modular-element-right": "(ι⊗ψ)Δ(a) = ψ(a)δ⁻¹",
    "modular-element-antipode": "φ(S(a)) = φ(aδ)",
    "modular-element-counit": "ε(δ) = 1",
    "modular-element-inverse": "S(δ) = δ⁻¹",
    "modular-element-invertible": "∃δ⁻¹: δδ⁻¹ = 1 = δ⁻¹δ",
    "sigma-kms": "φ(ab) = φ(bσ(a))",
    "sigma-multiplicative": "σ(ab) = σ(a)σ(b)",
    "sigma-invariance": "φ∘σ = φ",
    "sigma-prime-kms": "ψ(ab) = ψ(bσ′(a))",
    "sigma-prime-multiplicative": "σ′(ab) = σ′(a)σ′(b)",
    "sigma-prime-invariance": "ψ∘σ′ = ψ",
    "scaling-constant": "φ∘S² = τφ",
    # 관계식
    "counit-antipode": "ε∘S = ε",
    "coproduct-antipode": "Δ∘S = ζ∘(S⊗S)∘Δ",
    "sigma-antipode-sigma-prime": "σ∘S∘σ′ = S",
    "sigma-prime-conjugation": "σ′(a) = δσ(a)δ⁻¹",
    "sigma-modular-element": "σ(δ) = δ/τ",
    "sigma-prime-modular-element": "σ′(δ) = δ/τ",
    "sigma-commute": "σ∘σ′ = σ′∘σ",
    "sigma-square-antipode": "σ∘S² = S²∘σ",
    "sigma-prime-square-antipode": "σ′∘S² = S²∘σ′",
    "coproduct-sigma-twist": "Δ∘σ = (S²⊗σ)∘Δ",
    "coproduct-sigma-prime-twist": "Δ∘σ′ = (σ′⊗S⁻²)∘Δ",
    "coproduct-square-antipode": "Δ∘S² = (σ⊗σ′⁻¹)∘Δ",
    # 호프 조건
    "hopf-left-antipode": "m((S⊗ι)(Δ(x)(1⊗y))) = ε(x)y",
    "hopf-right-antipode": "m((ι⊗S)((x⊗1)Δ(y))) = ε(y)x",
    # 유형
    "compact-type": "1 ∈ A and Δ(1) = 1⊗1",
    "discrete-type": "∃h ≠ 0: ah = ε(a)h",
    "cointegral-integral-nonzero": "φ(h) ≠ 0",
    # ✻ 구조
    "star-coproduct": "Δ(a✻) = Δ(a)✻",
    "star-counit": "ε(a✻) = conj ε(a)",
    "star-integral": "φ(a✻) = conj φ(a)",
    "star-antipode": "S(S(x)✻)✻ = x",
    "star-modular-element": "δ✻ = δ",
    "star-scaling-constant": "τ·conj(τ) = 1",
    # 쌍대
    "dual-pairing-nondegenerate": "det[⟨ωᵢ, eⱼ⟩] ≠ 0",
    "dual-hypergroup": "(Â, Δ̂) passes the full hypergroup pipeline",
    "dual-antipode": "Ŝ(ω) = ω∘S",
    "dual-product-pairing": "⟨ωω′, x⟩ = ⟨ω⊗ω′, Δ(x)⟩",
    "dual-coproduct-pairing": "⟨Δ̂(ω), x⊗y⟩ = ⟨ω, xy⟩",
    "dual-antipode-pairing": "⟨Ŝ(ω), x⟩ = ⟨ω, S(x)⟩",
    "dual-star-pairing": "⟨ω✻, x⟩ = conj ⟨ω, S(x)✻⟩",
    "dual-counit-forms": "ε̂(ω) = φ(a) = φ(b) = ψ(c) = ψ(d)",
    "four-forms-sigma": "ω = φ(a·) = φ(·b) ⇒ b = σ(a)",
    "product-formula-left-phi": "ω·φ(·a) = φ(·b), b = ((ω∘S⁻¹)⊗ι)Δ(a)",
    "product-formula-right-phi": "ω·φ(a·) = φ(c·), c = ((ω∘S)⊗ι)Δ(a)",
    "product-formula-left-psi": "ψ(·a)·ω = ψ(·d), d = (ι⊗(ω∘S))Δ(a)",
    "product-formula-right-psi": "ψ(a·)·ω = ψ(e·), e = (ι⊗(ω∘S⁻¹))Δ(a)",
    "dual-coproduct-slice-left": "⟨(ω₁⊗1)Δ̂(ω₂), x⊗y⟩ = ⟨ω₁⊗ω₂, Δ(x)(1⊗y)⟩",
    "dual-coproduct-slice-right": "⟨Δ̂(ω₁)(1⊗ω₂), x⊗y⟩ = ⟨ω₁⊗ω₂, (x⊗1)Δ(y)⟩",
    "module-action-left": "⟨ω′, ω▸a⟩ = ⟨ω′ω, a⟩",
    "module-action-right": "⟨ω′, a◂ω⟩ = ⟨ωω′, a⟩",
    "multiplier-collapse": "M(Â) = Â",
    # 이중쌍대
    "bidual-bijective": "Γ invertible",
    "bidual-representation": "Γ(a) = ψ̂(·ω), ω = φ(·S(a))",
    "bidual-product": "Γ(ab) = Γ(a)Γ(b)",
    "bidual-coproduct": "(Γ⊗Γ)∘Δ = Δ̂̂∘Γ",
    "bidual-counit": "ε̂̂∘Γ = ε",
    "bidual-antipode": "Ŝ̂∘Γ = Γ∘S",
    "bidual-integral": "φ̂̂∘Γ = φ",
    "bidual-star": "Γ(a✻) = Γ(a)✻",
    # 쌍대 데이터
    "dual-modular-element": "δ̂ = ε∘σ⁻¹ = ε∘σ′⁻¹",
    "dual-modular-element-inverse": "δ̂⁻¹ = ε∘σ = ε∘σ′",
    "dual-sigma": "⟨σ̂(ω), a⟩ = ⟨ω, S²(a)δ⁻¹⟩",
    "dual-sigma-prime": "⟨σ̂′(ω), a⟩ = ⟨ω, δ⁻¹S⁻²(a)⟩",
    "dual-modular-element-character": "⟨aa′, δ̂⟩ = ⟨a, δ̂⟩⟨a′, δ̂⟩",
    "modular-element-group-like": "Δ(δ) = δ⊗δ",
    "dual-right-integral": "ψ̂(φ(·a)) = ε(a)",
    "dual-integral-positive": "ψ positive ⇒ φ̂ positive",
    # 래드퍼드
    "radford-sigma": "σ(a) = δ̂⁻¹▸S²(a)",
    "radford-sigma-prime": "σ′(a) = S⁻²(a)◂δ̂⁻¹",
    "radford-antipode-fourth": "S⁴(a) = δ⁻¹(δ̂▸a◂δ̂⁻¹)δ",
    # 유형 쌍대성
    "type-compact-dual-discrete": "compact(A) ⇔ discrete(Â)",
    "type-discrete-dual-compact": "discrete(A) ⇔ compact(Â)",
    "dual-left-cointegral": "ω·φ = ε̂(ω)φ",
    "dual-right-cointegral": "ψ·ω = ε̂(ω)ψ",
    "dual-cointegral-span": "left co-integrals of Â = span{φ}",
    # 구성
    "double-coset-constancy": "Δ(f)(h₁ph₂, h₃qh₄) = Δ(f)(p, q)",
    "projection-idempotent": "u² = u",
    "projection-self-adjoint": "u✻ = u",
    "projection-group-like": "Δ(u)(1⊗u) = u⊗u",
    "hecke-iso-bijective": "Θ: Â → uBu invertible",
    "hecke-iso-product": "Θ(ωω′) = Θ(ω)Θ(ω′)",
    "hecke-iso-coproduct": "(Θ⊗Θ)∘Δ̂ = Δ_u∘Θ",
    "hecke-iso-counit": "ε_u∘Θ = ε̂",
    "hecke-iso-integral": "φ_u∘Θ = φ̂",
    "hecke-iso-antipode": "S_u∘Θ = Θ∘Ŝ",
}


def record(name: str, ok: bool, witness=None) -> dict:
    """검증 레코드 하나를 만든다."""
    return {
        "name": name,
        "anchor": CHECK_ANCHORS[name],
        "status": "pass" if ok else "fail",
        "witness": None if ok else witness,
    }


def all_passed(records: list[dict]) -> bool:
    return all(r["status"] == "pass" for r in records)


def first_failure(records: list[dict]) -> dict | None:
    return next((r for r in records if r["status"] != "pass"), None)
