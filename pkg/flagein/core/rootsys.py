"""
단순 Lie 타입의 루트 시스템 (정수/유리수 정확 계산).

Cartan 행렬에서 출발하여 양의 루트를 saturation 으로 생성하고,
최고 루트, marks, 대칭화 내적, Killing 형식 정규화, 루트 스트링,
구조 상수의 제곱 N²_{α,β} 를 계산합니다.

번호 규칙:
- A~D, F4, G2: Bourbaki 번호 (F4, G2 Cartan 행렬은 아래 예시와 동일)
- E_ℓ: 사슬 α1 − … − α_{ℓ−1} 에 α_ℓ 이 α3 에 연결된 형태

Usage:
    rs = build_root_system(LieType("G", 2))
    rs.cartan          # ((2, -1), (-3, 2))
    rs.highest_root    # (2, 3)
    rs.killing_scale   # Fraction(8, 1)
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, List, Sequence, Tuple

from .errors import DimensionMismatch, NotARoot
from .schema import LieType, Rational, RootVec

logger = logging.getLogger(__name__)

# 타입별 양의 루트 개수 (생성 결과 검증용)
_EXCEPTIONAL_ROOT_COUNTS = {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}


def expected_positive_root_count(lie_type: LieType) -> int:
    ell = lie_type.rank
    family = lie_type.family
    if family == "A":
        return ell * (ell + 1) // 2
    if family in ("B", "C"):
        return ell * ell
    if family == "D":
        return ell * (ell - 1)
    return _EXCEPTIONAL_ROOT_COUNTS[(family, ell)]


def cartan_matrix(lie_type: LieType) -> Tuple[Tuple[int, ...], ...]:
    """a_ij = 2(α_i, α_j)/(α_i, α_i) 규약의 Cartan 행렬."""
    ell = lie_type.rank
    a = [[2 if i == j else 0 for j in range(ell)] for i in range(ell)]

    def link(i: int, j: int, a_ij: int = -1, a_ji: int = -1) -> None:
        # 1-based 노드 번호
        a[i - 1][j - 1] = a_ij
        a[j - 1][i - 1] = a_ji

    family = lie_type.family
    if family in ("A", "B", "C"):
        for i in range(1, ell):
            link(i, i + 1)
        if family == "B":
            link(ell - 1, ell, -1, -2)   # α_ℓ short
        elif family == "C":
            link(ell - 1, ell, -2, -1)   # α_ℓ long
    elif family == "D":
        for i in range(1, ell - 1):
            link(i, i + 1)
        link(ell - 2, ell)
    elif family == "E":
        for i in range(1, ell - 1):
            link(i, i + 1)
        link(3, ell)
    elif family == "F":
        link(1, 2)
        link(2, 3, -1, -2)
        link(3, 4)
    elif family == "G":
        link(1, 2, -1, -3)
    return tuple(tuple(row) for row in a)


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> Tuple[Fraction, ...]:
    """d_i·a_ij = d_j·a_ji 를 만족하고 max_i d_i = 1 (긴 루트 길이² = 2) 인 d."""
    ell = len(cartan)
    d: Dict[int, Fraction] = {0: Fraction(1)}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(ell):
            if j != i and cartan[i][j] != 0 and j not in d:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                queue.append(j)
    top = max(d.values())
    return tuple(d[i] / top for i in range(ell))


def _pairing(cartan, sym, lam: Sequence[Rational], mu: Sequence[Rational]) -> Fraction:
    total = Fraction(0)
    for i, li in enumerate(lam):
        if not li:
            continue
        row = cartan[i]
        di = sym[i]
        for j, mj in enumerate(mu):
            if mj and row[j]:
                total += li * mj * di * row[j]
    return total


def _height(v: Sequence[int]) -> int:
    return sum(v)


def _root_order_key(v: RootVec):
    return (_height(v), tuple(-c for c in v))


@dataclass(frozen=True)
class RootSystem:
    """단순 Lie 타입의 조합론적 루트 데이터 (생성 후 불변).

    Attributes:
        lie_type: (family, rank).
        cartan: ℓ×ℓ 정수 Cartan 행렬.
        symmetrizer: (α_i, α_j) := d_i·a_ij 를 대칭으로 만드는 d.
        positive_roots: 높이 순으로 정렬된 양의 루트.
        highest_root: 최고 루트 θ.
        marks: θ 의 단순근 계수 m_i.
        killing_scale: (λ, μ)_B = ⟨λ, μ⟩ / k 를 만족하는 k.
    """
    lie_type: LieType
    cartan: Tuple[Tuple[int, ...], ...]
    symmetrizer: Tuple[Fraction, ...]
    positive_roots: Tuple[RootVec, ...]
    highest_root: RootVec
    marks: Tuple[int, ...]
    killing_scale: Fraction
    _positive_set: FrozenSet[RootVec] = field(default=frozenset(), repr=False, compare=False)

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    def simple_root(self, i: int) -> RootVec:
        """1-based 단순근 α_i."""
        return tuple(1 if k == i - 1 else 0 for k in range(self.rank))

    def is_positive_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self._positive_set

    def is_root(self, v: Sequence[int]) -> bool:
        v = tuple(v)
        return self.is_positive_root(v) or self.is_positive_root(tuple(-c for c in v))

    def all_roots(self) -> List[RootVec]:
        return list(self.positive_roots) + [tuple(-c for c in r) for r in self.positive_roots]

    def root_length_sq(self, i: int) -> Fraction:
        """⟨α_i, α_i⟩ (1-based)."""
        return 2 * self.symmetrizer[i - 1]


def _saturate_positive_roots(cartan, sym) -> List[RootVec]:
    """단순근에서 출발해 γ+α_i 를 루트 스트링 산술로 판정하며 높이별로 확장."""
    ell = len(cartan)
    simple = [tuple(1 if k == i else 0 for k in range(ell)) for i in range(ell)]
    found = set(simple)
    layer = list(simple)
    while layer:
        next_layer: List[RootVec] = []
        for gamma in layer:
            for i in range(ell):
                candidate = tuple(c + (1 if k == i else 0) for k, c in enumerate(gamma))
                if candidate in found:
                    continue
                # p: γ − pα_i ∈ R 인 최대 p (하위 높이 루트는 이미 모두 발견됨)
                p = 0
                while True:
                    lower = tuple(c - ((p + 1) if k == i else 0) for k, c in enumerate(gamma))
                    if lower in found:
                        p += 1
                    else:
                        break
                alpha_i = simple[i]
                coroot_pairing = 2 * _pairing(cartan, sym, gamma, alpha_i) / _pairing(cartan, sym, alpha_i, alpha_i)
                q = p - coroot_pairing
                if q > 0:
                    found.add(candidate)
                    next_layer.append(candidate)
        layer = next_layer
    return sorted(found, key=_root_order_key)


@lru_cache(maxsize=None)
def build_root_system(lie_type: LieType) -> RootSystem:
    """Cartan 행렬로부터 루트 시스템 전체를 구성합니다."""
    cartan = cartan_matrix(lie_type)
    sym = _symmetrizer(cartan)
    positives = _saturate_positive_roots(cartan, sym)

    top_height = max(_height(r) for r in positives)
    tops = [r for r in positives if _height(r) == top_height]
    if len(tops) != 1:
        raise RuntimeError(f"{lie_type}: 최고 루트가 유일하지 않습니다: {tops}")
    theta = tops[0]
    if any(any(c > m for c, m in zip(r, theta)) for r in positives):
        raise RuntimeError(f"{lie_type}: 최고 루트 {theta} 가 모든 양의 루트를 지배하지 않습니다")

    theta_sq = _pairing(cartan, sym, theta, theta)
    # R = R⁺ ∪ (−R⁺) 이므로 양의 루트 합의 두 배
    k = 2 * sum(_pairing(cartan, sym, theta, r) ** 2 for r in positives) / theta_sq

    expected = expected_positive_root_count(lie_type)
    if len(positives) != expected:
        raise RuntimeError(f"{lie_type}: 양의 루트 {len(positives)}개 (기대값 {expected})")

    logger.debug("root system %s: |R+|=%d, θ=%s, k=%s", lie_type, len(positives), theta, k)
    return RootSystem(
        lie_type=lie_type,
        cartan=cartan,
        symmetrizer=sym,
        positive_roots=tuple(positives),
        highest_root=theta,
        marks=tuple(theta),
        killing_scale=k,
        _positive_set=frozenset(positives),
    )


def _check_length(rs: RootSystem, *vectors: Sequence) -> None:
    for v in vectors:
        if len(v) != rs.rank:
            raise DimensionMismatch(rs.rank, len(v))


def inner_product(rs: RootSystem, lam: Sequence[Rational], mu: Sequence[Rational]) -> Fraction:
    """⟨λ, μ⟩ = Σ λ_i μ_j d_i a_ij (긴 루트 길이² = 2 정규화)."""
    _check_length(rs, lam, mu)
    return _pairing(rs.cartan, rs.symmetrizer, lam, mu)


def killing_inner_product(rs: RootSystem, lam: Sequence[Rational], mu: Sequence[Rational]) -> Fraction:
    """Killing 형식이 유도하는 내적 (λ, μ)_B = ⟨λ, μ⟩ / k."""
    return inner_product(rs, lam, mu) / rs.killing_scale


def root_string(rs: RootSystem, alpha: Sequence[int], beta: Sequence[int]) -> Tuple[int, int]:
    """β 를 지나는 α-스트링 β − pα, …, β + qα 의 (p, q)."""
    alpha, beta = tuple(alpha), tuple(beta)
    _check_length(rs, alpha, beta)
    for v in (alpha, beta):
        if not rs.is_root(v):
            raise NotARoot(v)
    if beta == alpha or beta == tuple(-c for c in alpha):
        raise ValueError(f"β = ±α 인 경우 루트 스트링이 정의되지 않습니다: α={alpha}")

    def shifted(n: int) -> RootVec:
        return tuple(b + n * a for a, b in zip(alpha, beta))

    p = 0
    while rs.is_root(shifted(-(p + 1))):
        p += 1
    q = 0
    while rs.is_root(shifted(q + 1)):
        q += 1
    return p, q


def structure_constant_sq(rs: RootSystem, alpha: Sequence[int], beta: Sequence[int]) -> Fraction:
    """N²_{α,β} = q(1+p)(α,α)_B / 2, α+β ∉ R 이면 0.

    B(E_α, E_{−α}) = −1 로 정규화된 루트 벡터 기준이며, 상수 1/2 은
    G2 에서 t_oracle = t_closed_form = 1 이 되도록 맞춘 값입니다.
    """
    p, q = root_string(rs, alpha, beta)
    total = tuple(a + b for a, b in zip(alpha, beta))
    if not rs.is_root(total):
        return Fraction(0)
    return q * (1 + p) * killing_inner_product(rs, alpha, alpha) / 2


def killing_consistency_violations(rs: RootSystem) -> List[str]:
    """각 단순근 α_i 에 대해 ⟨α_i,α_i⟩/k = Σ_γ ⟨α_i,γ⟩²/k² 확인."""
    k = rs.killing_scale
    roots = rs.all_roots()
    witnesses = []
    for i in range(1, rs.rank + 1):
        a = rs.simple_root(i)
        lhs = inner_product(rs, a, a) / k
        rhs = sum(inner_product(rs, a, g) ** 2 for g in roots) / (k * k)
        if lhs != rhs:
            witnesses.append(f"α{i}: {lhs} ≠ {rhs}")
    return witnesses


def cartan_violations(rs: RootSystem) -> List[str]:
    """대각 2, 비대각 ≤ 0, d_i a_ij = d_j a_ji, max⟨α_i,α_i⟩ = 2 확인."""
    witnesses = []
    a, d = rs.cartan, rs.symmetrizer
    for i in range(rs.rank):
        if a[i][i] != 2:
            witnesses.append(f"a[{i + 1}][{i + 1}] = {a[i][i]}")
        for j in range(rs.rank):
            if i != j and a[i][j] > 0:
                witnesses.append(f"a[{i + 1}][{j + 1}] = {a[i][j]} > 0")
            if d[i] * a[i][j] != d[j] * a[j][i]:
                witnesses.append(f"d{i + 1}·a{i + 1}{j + 1} ≠ d{j + 1}·a{j + 1}{i + 1}")
    if max(2 * x for x in d) != 2:
        witnesses.append(f"max ⟨α_i,α_i⟩ = {max(2 * x for x in d)}")
    if any(m < 1 for m in rs.marks):
        witnesses.append(f"marks {rs.marks} 에 1 미만 값")
    return witnesses


def root_closure_violations(rs: RootSystem) -> List[str]:
    """N² = 0 ⟺ α+β ∉ R (양의 루트 쌍 전수 확인)."""
    witnesses = []
    for alpha in rs.positive_roots:
        for beta in rs.positive_roots:
            if alpha == beta:
                continue
            total = tuple(x + y for x, y in zip(alpha, beta))
            n_sq = structure_constant_sq(rs, alpha, beta)
            if (n_sq == 0) == rs.is_root(total):
                witnesses.append(f"N²{alpha},{beta} = {n_sq}, α+β∈R = {rs.is_root(total)}")
    return witnesses
