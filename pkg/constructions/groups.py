"""유한군 모듈

곱셈표 cayley[i][j] = (원소 i)·(원소 j) 의 인덱스.
불러올 때 닫힘·결합·항등원·역원을 모두 확인한다.
"""

import logging
from dataclasses import dataclass
from functools import cached_property

from sympy.combinatorics import Permutation
from sympy.combinatorics.named_groups import CyclicGroup, DihedralGroup, SymmetricGroup

from constructions.errors import NotAGroup, NotASubgroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteGroup:
    labels: tuple
    cayley: tuple
    identity: int
    inverse: tuple

    @property
    def order(self) -> int:
        return len(self.labels)

    def mul(self, p: int, q: int) -> int:
        return self.cayley[p][q]

    @cached_property
    def _index(self) -> dict:
        return {label: i for i, label in enumerate(self.labels)}

    def index(self, label) -> int:
        """라벨 또는 정수 인덱스 → 인덱스"""
        if isinstance(label, int) and not isinstance(label, bool):
            if not 0 <= label < self.order:
                raise NotASubgroup(f"원소 인덱스 범위 밖: {label}", witness={"element": label})
            return label
        try:
            return self._index[label]
        except KeyError:
            raise NotASubgroup(f"알 수 없는 원소: {label}", witness={"element": str(label)}) from None


def group_from_table(data: dict) -> FiniteGroup:
    """{"elements": [...], "table": [[...]]} → 검증된 FiniteGroup"""
    labels = tuple(str(x) for x in data["elements"])
    table = data["table"]
    N = len(labels)
    if N == 0:
        raise NotAGroup("원소가 없다", axiom="closure")
    if len(set(labels)) != N:
        raise NotAGroup("라벨 중복", axiom="labels")
    if len(table) != N or any(len(row) != N for row in table):
        raise NotAGroup("곱셈표 크기가 원소 수와 다르다", axiom="closure", witness={"order": N})
    for i, row in enumerate(table):
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < N:
                raise NotAGroup("곱셈표 값이 범위 밖", axiom="closure", witness={"pair": [i, j]})
    cayley = tuple(tuple(row) for row in table)

    for a in range(N):
        for b in range(N):
            ab = cayley[a][b]
            for c in range(N):
                if cayley[ab][c] != cayley[a][cayley[b][c]]:
                    raise NotAGroup("결합법칙 위반", axiom="associativity", witness={"triple": [a, b, c]})

    identity = next((e for e in range(N)
                     if all(cayley[e][p] == p and cayley[p][e] == p for p in range(N))), None)
    if identity is None:
        raise NotAGroup("항등원이 없다", axiom="identity")

    inverse = []
    for p in range(N):
        q = next((q for q in range(N) if cayley[p][q] == identity and cayley[q][p] == identity), None)
        if q is None:
            raise NotAGroup("역원이 없다", axiom="inverse", witness={"element": p})
        inverse.append(q)

    logger.debug("[군] 위수 %d 곱셈표 검증 완료", N)
    return FiniteGroup(labels=labels, cayley=cayley, identity=identity, inverse=tuple(inverse))


# ============================================================
# 부분군 / 정규성 / 양쪽 잉여류
# ============================================================

def subgroup_check(G: FiniteGroup, subset) -> bool:
    members = {G.index(x) for x in subset}
    if not members:
        return False
    return all(G.inverse[p] in members and all(G.mul(p, q) in members for q in members)
               for p in members)


def subgroup_from_labels(G: FiniteGroup, members) -> tuple:
    """라벨/인덱스 목록 → 정렬된 인덱스 튜플. 부분군이 아니면 NotASubgroup."""
    if not members:
        raise NotASubgroup("빈 부분집합")
    indices = tuple(sorted({G.index(x) for x in members}))
    if not subgroup_check(G, indices):
        raise NotASubgroup("곱 또는 역원에 닫혀 있지 않다",
                           witness={"members": [G.labels[i] for i in indices]})
    return indices


def is_normal(G: FiniteGroup, H) -> bool:
    members = set(H)
    return all(G.mul(G.mul(g, h), G.inverse[g]) in members for g in range(G.order) for h in members)


def double_cosets(G: FiniteGroup, H) -> list[tuple]:
    """G 를 HgH 로 분할. 항등원을 담은 H 가 먼저, 나머지는 최소 인덱스 순."""
    H = tuple(H)
    seen = set()
    parts = []
    for g in range(G.order):
        if g in seen:
            continue
        part = tuple(sorted({G.mul(G.mul(h1, g), h2) for h1 in H for h2 in H}))
        seen.update(part)
        parts.append(part)
    parts.sort(key=lambda part: (G.identity not in part, part[0]))
    return parts


# ============================================================
# 표준 군 생성기 (sympy 치환군 → 곱셈표)
# ============================================================

def _compose(p: Permutation, q: Permutation) -> Permutation:
    """(p∘q)(x) = p(q(x)). sympy 의 p*q 는 p 를 먼저 적용한다."""
    return q * p


def _cycle_label(perm: Permutation) -> str:
    cycles = perm.cyclic_form
    if not cycles:
        return "e"
    sep = "," if perm.size > 9 else ""
    return "".join("(" + sep.join(str(x + 1) for x in cycle) + ")" for cycle in cycles)


def _from_permutations(elements: list, labels: list) -> FiniteGroup:
    position = {p: i for i, p in enumerate(elements)}
    table = [[position[_compose(p, q)] for q in elements] for p in elements]
    return group_from_table({"elements": labels, "table": table})


def symmetric_group(k: int) -> FiniteGroup:
    """Sₖ. 곱은 합성, 원소는 (k − 사이클 수, 라벨) 순."""
    if k < 1:
        raise ValueError("k 는 1 이상")
    perms = sorted(SymmetricGroup(k).generate(),
                   key=lambda p: (k - p.cycles, _cycle_label(p)))
    return _from_permutations(perms, [_cycle_label(p) for p in perms])


def dihedral_group(m: int) -> FiniteGroup:
    """위수 2m 정이면체군. rᵃsᵇ 의 인덱스 = a + m·b."""
    if m < 1:
        raise ValueError("m 은 1 이상")
    D = DihedralGroup(m)
    if m == 1:
        r, s = D.identity, D.generators[0]
    else:
        r, s = D.generators[0], D.generators[1]
    elements, labels = [], []
    for b in range(2):
        for a in range(m):
            elements.append(_compose(r ** a, s ** b))
            rot = "" if a == 0 else ("r" if a == 1 else f"r{a}")
            labels.append((rot + ("s" if b else "")) or "e")
    return _from_permutations(elements, labels)


def cyclic_group(m: int) -> FiniteGroup:
    if m < 1:
        raise ValueError("m 은 1 이상")
    g = CyclicGroup(m).generators[0]
    labels = ["e"] + ["g" if a == 1 else f"g{a}" for a in range(1, m)]
    return _from_permutations([g ** a for a in range(m)], labels)
