"""정확 소거 모듈

분수 없는(Bareiss) 전진 소거 후 체 위 후진 대입으로 기약 행사다리꼴을 만든다.
solve / kernel / invert / rank / determinant / psd_check 가 모두 이 위에 선다.
"""

from math import lcm

from linalg.errors import DimensionMismatch, Inconsistent, NotHermitian, Singular
from linalg.matrix import Matrix, Vector, basis_vec
from linalg.scalar import ONE, ZERO, Scalar


def _integralize(row: list[Scalar]) -> list[Scalar]:
    """행 전체에 분모의 최소공배수를 곱해 가우스 정수 행으로 만든다."""
    dens = [q.denominator for a in row for q in (a.re, a.im) if q]
    if not dens:
        return list(row)
    scale = lcm(*dens)
    if scale == 1:
        return list(row)
    return [a * scale for a in row]


def _bareiss_forward(m: list[list[Scalar]], limit: int) -> tuple[list[int], int]:
    """m 을 제자리에서 상삼각화한다. 피벗은 앞쪽 limit 개 열에서만 고른다.

    Returns:
        (피벗 열 목록, 행 교환 횟수)
    """
    nr = len(m)
    nc = len(m[0]) if m else 0
    prev = ONE
    r = 0
    swaps = 0
    pivots = []
    for c in range(limit):
        if r == nr:
            break
        p = next((i for i in range(r, nr) if not m[i][c].is_zero()), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
            swaps += 1
        piv_row = m[r]
        piv = piv_row[c]
        for i in range(r + 1, nr):
            row = m[i]
            a = row[c]
            for j in range(c + 1, nc):
                v = piv * row[j]
                if not a.is_zero():
                    v = v - a * piv_row[j]
                row[j] = v / prev if not v.is_zero() else ZERO
            row[c] = ZERO
        prev = piv
        pivots.append(c)
        r += 1
    return pivots, swaps


def _rref(rows, limit: int) -> tuple[list[list[Scalar]], list[int]]:
    m = [_integralize(list(r)) for r in rows]
    pivots, _ = _bareiss_forward(m, limit)
    for k in reversed(range(len(pivots))):
        c = pivots[k]
        piv = m[k][c]
        if piv != ONE:
            m[k] = [a / piv if not a.is_zero() else ZERO for a in m[k]]
        pk = m[k]
        for i in range(k):
            f = m[i][c]
            if f.is_zero():
                continue
            m[i] = [a - f * b if not b.is_zero() else a for a, b in zip(m[i], pk)]
    return m, pivots


def solve_matrix(M: Matrix, B: Matrix) -> Matrix:
    """M·X = B 의 해 하나 (자유변수 = 0). 해가 없으면 Inconsistent."""
    if M.nrows != B.nrows:
        raise DimensionMismatch(f"solve: {M.shape} vs rhs {B.shape}")
    aug = [M.rows[i] + B.rows[i] for i in range(M.nrows)]
    m, pivots = _rref(aug, M.ncols)
    rank = len(pivots)
    for i in range(rank, M.nrows):
        if any(not a.is_zero() for a in m[i][M.ncols:]):
            raise Inconsistent(f"행 {i} 모순")
    rows = [[ZERO] * B.ncols for _ in range(M.ncols)]
    for k, c in enumerate(pivots):
        rows[c] = m[k][M.ncols:]
    return Matrix(rows, B.ncols)


def solve_linear(M: Matrix, rhs: Vector) -> Vector:
    if M.nrows != len(rhs):
        raise DimensionMismatch(f"solve: {M.shape} vs rhs 길이 {len(rhs)}")
    X = solve_matrix(M, Matrix.from_columns([tuple(rhs)], M.nrows))
    return X.column(0)


def kernel(M: Matrix) -> list[Vector]:
    """오른쪽 영공간의 정확한 기저 (자유변수마다 하나)."""
    if M.nrows == 0:
        return [basis_vec(M.ncols, j) for j in range(M.ncols)]
    m, pivots = _rref(M.rows, M.ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(M.ncols):
        if f in pivot_set:
            continue
        v = [ZERO] * M.ncols
        v[f] = ONE
        for k, c in enumerate(pivots):
            a = m[k][f]
            if not a.is_zero():
                v[c] = -a
        basis.append(tuple(v))
    return basis


def pivot_columns(M: Matrix) -> list[int]:
    if M.nrows == 0:
        return []
    _, pivots = _rref(M.rows, M.ncols)
    return pivots


def rank(M: Matrix) -> int:
    return len(pivot_columns(M))


def invert(M: Matrix) -> Matrix:
    if not M.is_square:
        raise DimensionMismatch(f"invert: 정사각 아님 {M.shape}")
    if rank(M) < M.nrows:
        raise Singular(f"rank < {M.nrows}")
    try:
        return solve_matrix(M, Matrix.identity(M.nrows))
    except Inconsistent as exc:
        raise Singular(str(exc)) from exc


def determinant(M: Matrix) -> Scalar:
    """Bareiss 행렬식. 마지막 피벗이 곧 행렬식(교환 부호 포함)이다."""
    if not M.is_square:
        raise DimensionMismatch(f"determinant: 정사각 아님 {M.shape}")
    n = M.nrows
    if n == 0:
        return ONE
    m = [list(r) for r in M.rows]
    pivots, swaps = _bareiss_forward(m, n)
    if len(pivots) < n:
        return ZERO
    det = m[n - 1][n - 1]
    return -det if swaps % 2 else det


def is_hermitian(G: Matrix) -> bool:
    if not G.is_square:
        return False
    return all(G.rows[i][j] == G.rows[j][i].conj()
               for i in range(G.nrows) for j in range(i, G.nrows))


def psd_check(G: Matrix) -> bool:
    """피벗 LDLᴴ 로 양의 반정부호 여부를 정확히 판정한다.

    매 단계에서 대각 0 인 인덱스는 그 행 전체가 0 이어야 하며 제거된다.
    음의 대각이 남으면 거짓, 양의 대각 하나로 슈어 보수를 취한다.
    """
    if not is_hermitian(G):
        raise NotHermitian(f"{G.shape} 행렬이 에르미트가 아니다")
    a = [list(r) for r in G.rows]
    alive = list(range(G.nrows))
    while alive:
        nxt = []
        for i in alive:
            d = a[i][i]
            if d.is_zero():
                if any(not a[i][j].is_zero() for j in alive):
                    return False
                continue
            if d.re < 0:
                return False
            nxt.append(i)
        alive = nxt
        if not alive:
            return True
        k = alive[0]
        piv = a[k][k]
        rest = alive[1:]
        for i in rest:
            aik = a[i][k]
            if aik.is_zero():
                continue
            coef = aik / piv
            for j in rest:
                akj = a[k][j]
                if not akj.is_zero():
                    a[i][j] = a[i][j] - coef * akj
        alive = rest
    return True
