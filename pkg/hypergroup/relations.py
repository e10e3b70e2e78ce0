"""유도 데이터 사이의 구조 관계식 및 호프 조건 검증"""

from config.checks import record
from hypergroup.derive import (
    antipode_sources,
    antipode_targets,
    mirrored_sources,
    mirrored_targets,
    spans_algebra,
)
from hypergroup.model import QuantumHypergroup
from linalg.matrix import Matrix, basis_vec, kron, vscale
from linalg.scalar import ONE
from linalg.solve import invert
from linalg.tensor import flip_matrix


def _matrix_record(name: str, lhs: Matrix, rhs: Matrix) -> dict:
    diff = lhs.first_column_difference(rhs)
    witness = {"basis": diff[1], "component": diff[0]} if diff else None
    return record(name, diff is None, witness)


def _basiswise_record(name: str, n: int, lhs_of, rhs_of) -> dict:
    for a in range(n):
        if lhs_of(a) != rhs_of(a):
            return record(name, False, {"basis": a})
    return record(name, True)


def verify_structural_relations(h: QuantumHypergroup) -> list[dict]:
    d = h.data
    n = h.dim
    alg = h.alg
    S, S_inv, sigma, sigma_p = d.S, d.S_inv, d.sigma, d.sigma_prime
    S2 = S @ S
    S2_inv = S_inv @ S_inv
    sigma_p_inv = invert(sigma_p)
    D = h.comult
    delta_over_tau = vscale(ONE / d.tau, d.delta)

    records = [
        record("counit-antipode", S.left_apply(h.counit) == tuple(h.counit), None),
        _matrix_record("coproduct-antipode", D @ S, flip_matrix(n) @ kron(S, S) @ D),
        _matrix_record("sigma-antipode-sigma-prime", sigma @ S @ sigma_p, S),
        _basiswise_record(
            "sigma-prime-conjugation", n,
            lambda a: sigma_p.column(a),
            lambda a: alg.multiply(alg.multiply(d.delta, sigma.column(a)), d.delta_inv),
        ),
        record("sigma-modular-element", sigma.apply(d.delta) == delta_over_tau,
               {"tau": str(d.tau)}),
        record("sigma-prime-modular-element", sigma_p.apply(d.delta) == delta_over_tau,
               {"tau": str(d.tau)}),
        _matrix_record("sigma-commute", sigma @ sigma_p, sigma_p @ sigma),
        _matrix_record("sigma-square-antipode", sigma @ S2, S2 @ sigma),
        _matrix_record("sigma-prime-square-antipode", sigma_p @ S2, S2 @ sigma_p),
        _matrix_record("coproduct-sigma-twist", D @ sigma, kron(S2, sigma) @ D),
        _matrix_record("coproduct-sigma-prime-twist", D @ sigma_p, kron(sigma_p, S2_inv) @ D),
        _matrix_record("coproduct-square-antipode", D @ S2, kron(sigma, sigma_p_inv) @ D),
    ]
    return records


def verify_defining_identities(h: QuantumHypergroup) -> list[dict]:
    """유도 후 S 와 ψ 의 정의 항등식, 그리고 조각 생성 조건을 다시 확인한다."""
    d = h.data
    n = h.dim
    phi, psi = h.left_integral, d.psi
    xs, ys = antipode_sources(h, phi), antipode_targets(h, phi)
    ms, mt = mirrored_sources(h, psi), mirrored_targets(h, psi)

    def first_bad(srcs, tgts):
        for idx, (s, t) in enumerate(zip(srcs, tgts)):
            if d.S.apply(s) != t:
                return {"pair": list(divmod(idx, n))}
        return None

    bad_def = first_bad(xs, ys)
    bad_mir = first_bad(ms, mt)
    return [
        record("span-right-leg-x", spans_algebra(xs, n), {"dim": n}),
        record("span-right-leg-y", spans_algebra(ys, n), {"dim": n}),
        record("span-left-leg-x", spans_algebra(ms, n), {"dim": n}),
        record("span-left-leg-y", spans_algebra(mt, n), {"dim": n}),
        record("antipode-defining", bad_def is None, bad_def),
        record("antipode-mirrored", bad_mir is None, bad_mir),
    ]


def coproduct_is_homomorphism(h: QuantumHypergroup) -> bool:
    n = h.dim
    cps = h.coproducts
    for i in range(n):
        for j in range(n):
            if h.comult.apply(h.alg.mult[i][j]) != h.alg.multiply_tensor(cps[i], cps[j]):
                return False
    return True


def verify_hopf_conditions(h: QuantumHypergroup) -> list[dict]:
    """Δ 가 준동형일 때만 두 호프 조건을 확인한다. 아니면 빈 목록."""
    if not coproduct_is_homomorphism(h):
        return []
    d = h.data
    n = h.dim
    alg = h.alg
    eye = Matrix.identity(n)
    s_left = kron(d.S, eye)
    s_right = kron(eye, d.S)
    bad_left = bad_right = None
    for i in range(n):
        for j in range(n):
            ei, ej = basis_vec(n, i), basis_vec(n, j)
            if bad_left is None:
                t = alg.leg_multiply(h.coproducts[i], ej, 2, "right")
                if alg.multiply_map(s_left.apply(t)) != vscale(h.counit[i], ej):
                    bad_left = {"pair": [i, j]}
            if bad_right is None:
                t = alg.leg_multiply(h.coproducts[j], ei, 1, "left")
                if alg.multiply_map(s_right.apply(t)) != vscale(h.counit[j], ei):
                    bad_right = {"pair": [i, j]}
    return [
        record("hopf-left-antipode", bad_left is None, bad_left),
        record("hopf-right-antipode", bad_right is None, bad_right),
    ]
