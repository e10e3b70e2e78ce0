"""쌍대 구조 검증 모듈

짝을 통한 구조 사상의 쌍대성, 곱 공식, 조각 공식, 모듈 작용,
쌍대 데이터 공식, 래드퍼드 공식, 유형 쌍대성을 정확히 확인한다.
"""

from config.checks import record
from duality.actions import module_action
from duality.dual import DualPackage, four_forms
from hypergroup.axioms import _proportional
from hypergroup.cointegrals import classify_type, cointegral_space
from hypergroup.star import integral_positivity
from linalg.matrix import Vector, basis_vec, dot, vscale
from linalg.solve import invert
from linalg.tensor import outer, pair2, slice_left, slice_right


def _first(n: int, dims: int, bad_of):
    """모든 인덱스 튜플을 돌며 처음 실패한 것을 증인으로 돌려준다."""
    def walk(prefix):
        if len(prefix) == dims:
            return list(prefix) if bad_of(*prefix) else None
        for i in range(n):
            found = walk(prefix + (i,))
            if found is not None:
                return found
        return None
    found = walk(())
    return {"indices": found} if found is not None else None


def _rec(name: str, witness) -> dict:
    return record(name, witness is None, witness)


# ============================================================
# 짝과 구조 사상
# ============================================================

def pairing_records(pkg: DualPackage) -> list[dict]:
    src, dual = pkg.source, pkg.dual
    n = pkg.dim
    P = pkg.pairing
    f = [P.row(i) for i in range(n)]
    e = [basis_vec(n, i) for i in range(n)]
    records = [record("dual-pairing-nondegenerate", True)]

    def product_bad(i, j):
        lhs = pkg.functional(pkg.multiply(e[i], e[j]))
        rhs = tuple(pair2(src.coproducts[k], f[i], f[j], n) for k in range(n))
        return lhs != rhs
    records.append(_rec("dual-product-pairing", _first(n, 2, product_bad)))

    def coproduct_bad(k, a, b):
        lhs = pair2(dual.coproducts[k], P.column(a), P.column(b), n)
        return lhs != dot(f[k], src.alg.mult[a][b])
    records.append(_rec("dual-coproduct-pairing", _first(n, 3, coproduct_bad)))

    lhs = dual.data.S.T @ P
    rhs = P @ src.data.S
    diff = lhs.first_column_difference(rhs)
    records.append(_rec("dual-antipode-pairing",
                        {"indices": [diff[0], diff[1]]} if diff else None))

    if src.alg.star is not None:
        S = src.data.S

        def star_bad(k, x):
            left = pkg.functional(dual.alg.apply_star(e[k]))[x]
            right = dot(f[k], src.alg.apply_star(S.column(x))).conj()
            return left != right
        records.append(_rec("dual-star-pairing", _first(n, 2, star_bad)))

    d = src.data
    phi, psi = src.left_integral, d.psi

    def counit_bad(i):
        a, b, c, dd = four_forms(pkg, e[i])
        val = dual.counit[i]
        return not (val == dot(phi, a) == dot(phi, b) == dot(psi, c) == dot(psi, dd))
    records.append(_rec("dual-counit-forms", _first(n, 1, counit_bad)))

    def sigma_bad(i):
        a, b, _, _ = four_forms(pkg, e[i])
        return d.sigma.apply(a) != b
    records.append(_rec("four-forms-sigma", _first(n, 1, sigma_bad)))
    records.append(record("multiplier-collapse", True))
    return records


# ============================================================
# 곱 공식 / 조각 공식
# ============================================================

def check_product_formulas(pkg: DualPackage) -> list[dict]:
    src, dual = pkg.source, pkg.dual
    n = pkg.dim
    d = src.data
    Phi, Psi = d.gram, d.psi_gram
    f = [pkg.pairing.row(i) for i in range(n)]
    f_s = [d.S.left_apply(fi) for fi in f]
    f_sinv = [d.S_inv.left_apply(fi) for fi in f]
    cps = src.coproducts

    def values(g_left, g_right):
        return tuple(pair2(cps[k], g_left, g_right, n) for k in range(n))

    def left_phi_bad(i, a):
        b = slice_left(cps[a], f_sinv[i], n)
        return values(f[i], Phi.column(a)) != Phi.apply(b)

    def right_phi_bad(i, a):
        c = slice_left(cps[a], f_s[i], n)
        return values(f[i], Phi.row(a)) != Phi.T.apply(c)

    def left_psi_bad(i, a):
        dd = slice_right(cps[a], f_s[i], n)
        return values(Psi.column(a), f[i]) != Psi.apply(dd)

    def right_psi_bad(i, a):
        ee = slice_right(cps[a], f_sinv[i], n)
        return values(Psi.row(a), f[i]) != Psi.T.apply(ee)

    records = [
        _rec("product-formula-left-phi", _first(n, 2, left_phi_bad)),
        _rec("product-formula-right-phi", _first(n, 2, right_phi_bad)),
        _rec("product-formula-left-psi", _first(n, 2, left_psi_bad)),
        _rec("product-formula-right-psi", _first(n, 2, right_psi_bad)),
    ]

    e_hat = [basis_vec(n, i) for i in range(n)]
    cols = [pkg.pairing.column(x) for x in range(n)]
    left_t = {(i, j): dual.alg.leg_multiply(dual.coproducts[j], e_hat[i], 1, "left")
              for i in range(n) for j in range(n)}
    right_t = {(i, j): dual.alg.leg_multiply(dual.coproducts[i], e_hat[j], 2, "right")
               for i in range(n) for j in range(n)}
    src_left = {(x, y): src.alg.leg_multiply(cps[x], basis_vec(n, y), 2, "right")
                for x in range(n) for y in range(n)}
    src_right = {(x, y): src.alg.leg_multiply(cps[y], basis_vec(n, x), 1, "left")
                 for x in range(n) for y in range(n)}

    def slice_left_bad(i, j, x, y):
        return pair2(left_t[i, j], cols[x], cols[y], n) != pair2(src_left[x, y], f[i], f[j], n)

    def slice_right_bad(i, j, x, y):
        return pair2(right_t[i, j], cols[x], cols[y], n) != pair2(src_right[x, y], f[i], f[j], n)

    records.append(_rec("dual-coproduct-slice-left", _first(n, 4, slice_left_bad)))
    records.append(_rec("dual-coproduct-slice-right", _first(n, 4, slice_right_bad)))
    return records


# ============================================================
# 모듈 작용
# ============================================================

def module_action_records(pkg: DualPackage) -> list[dict]:
    n = pkg.dim
    e = [basis_vec(n, i) for i in range(n)]

    def left_bad(w, w2, a):
        lhs = pkg.pair(e[w2], module_action(pkg, "w>a", e[w], e[a]))
        return lhs != pkg.pair(pkg.multiply(e[w2], e[w]), e[a])

    def right_bad(w, w2, a):
        lhs = pkg.pair(e[w2], module_action(pkg, "a<w", e[a], e[w]))
        return lhs != pkg.pair(pkg.multiply(e[w], e[w2]), e[a])

    return [
        _rec("module-action-left", _first(n, 3, left_bad)),
        _rec("module-action-right", _first(n, 3, right_bad)),
    ]


# ============================================================
# 쌍대 데이터
# ============================================================

def dual_data_check(pkg: DualPackage) -> list[dict]:
    src, dual = pkg.source, pkg.dual
    n = pkg.dim
    d, dd = src.data, dual.data
    eps = src.counit
    sigma_inv = invert(d.sigma)
    sigma_p_inv = invert(d.sigma_prime)
    records = []

    delta_hat = pkg.functional(dd.delta)
    ok = delta_hat == sigma_inv.left_apply(eps) == sigma_p_inv.left_apply(eps)
    records.append(record("dual-modular-element", ok, {"delta_hat": [str(c) for c in delta_hat]}))

    delta_hat_inv = pkg.functional(dd.delta_inv)
    ok = delta_hat_inv == d.sigma.left_apply(eps) == d.sigma_prime.left_apply(eps)
    records.append(record("dual-modular-element-inverse", ok, None))

    S2 = d.S @ d.S
    S2_inv = d.S_inv @ d.S_inv
    f = [pkg.pairing.row(i) for i in range(n)]
    sig_hat = [pkg.functional(dd.sigma.column(i)) for i in range(n)]
    sig_hat_p = [pkg.functional(dd.sigma_prime.column(i)) for i in range(n)]
    right_a = [src.alg.multiply(S2.column(a), d.delta_inv) for a in range(n)]
    right_b = [src.alg.multiply(d.delta_inv, S2_inv.column(a)) for a in range(n)]

    records.append(_rec("dual-sigma", _first(
        n, 2, lambda i, a: sig_hat[i][a] != dot(f[i], right_a[a]))))
    records.append(_rec("dual-sigma-prime", _first(
        n, 2, lambda i, a: sig_hat_p[i][a] != dot(f[i], right_b[a]))))

    records.append(_rec("dual-modular-element-character", _first(
        n, 2, lambda a, b: dot(delta_hat, src.alg.mult[a][b]) != delta_hat[a] * delta_hat[b])))
    records.append(record("modular-element-group-like",
                          src.comult.apply(d.delta) == outer(d.delta, d.delta), None))
    records.append(record("dual-right-integral", tuple(dd.psi) == tuple(eps), None))

    if src.alg.star is not None:
        psi_pos = integral_positivity(src, d.psi)
        ok = (not psi_pos) or integral_positivity(dual, dual.left_integral)
        records.append(record("dual-integral-positive", ok, {"psi_positive": psi_pos}))
    return records


# ============================================================
# 래드퍼드
# ============================================================

def radford_check(pkg: DualPackage) -> list[dict]:
    src = pkg.source
    n = pkg.dim
    d, dd = src.data, pkg.dual.data
    alg = src.alg
    S2 = d.S @ d.S
    S2_inv = d.S_inv @ d.S_inv
    S4 = S2 @ S2

    def sigma_bad(a):
        return d.sigma.column(a) != module_action(pkg, "w>a", dd.delta_inv, S2.column(a))

    def sigma_p_bad(a):
        return d.sigma_prime.column(a) != module_action(pkg, "a<w", S2_inv.column(a), dd.delta_inv)

    def fourth_bad(a):
        inner = module_action(pkg, "a<w", basis_vec(n, a), dd.delta_inv)
        mid = module_action(pkg, "w>a", dd.delta, inner)
        rhs = alg.multiply(alg.multiply(d.delta_inv, mid), d.delta)
        return S4.column(a) != rhs

    return [
        _rec("radford-sigma", _first(n, 1, sigma_bad)),
        _rec("radford-sigma-prime", _first(n, 1, sigma_p_bad)),
        _rec("radford-antipode-fourth", _first(n, 1, fourth_bad)),
    ]


# ============================================================
# 유형 쌍대성
# ============================================================

def compact_discrete_duality_check(pkg: DualPackage) -> list[dict]:
    src, dual = pkg.source, pkg.dual
    n = pkg.dim
    t_src = classify_type(src)
    t_dual = classify_type(dual)
    records = [
        record("type-compact-dual-discrete", t_src["compact"] == t_dual["discrete"],
               {"compact": t_src["compact"], "dual_discrete": t_dual["discrete"]}),
        record("type-discrete-dual-compact", t_src["discrete"] == t_dual["compact"],
               {"discrete": t_src["discrete"], "dual_compact": t_dual["compact"]}),
    ]
    if not t_src["unital"]:
        return records

    w_phi = pkg.from_functional(src.left_integral)
    w_psi = pkg.from_functional(src.data.psi)
    e = [basis_vec(n, i) for i in range(n)]
    eps_hat = dual.counit
    records.append(_rec("dual-left-cointegral", _first(
        n, 1, lambda i: pkg.multiply(e[i], w_phi) != vscale(eps_hat[i], w_phi))))
    records.append(_rec("dual-right-cointegral", _first(
        n, 1, lambda i: pkg.multiply(w_psi, e[i]) != vscale(eps_hat[i], w_psi))))
    space = cointegral_space(dual, "left")
    ok = len(space) == 1 and _proportional(space[0], w_phi)
    records.append(record("dual-cointegral-span", ok, {"dimension": len(space)}))
    return records


def cointegral_image(pkg: DualPackage) -> Vector:
    """φ 를 Â 의 원소로 본 계수 벡터."""
    return pkg.from_functional(pkg.source.left_integral)
