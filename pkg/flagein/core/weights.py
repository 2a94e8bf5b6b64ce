"""
기본 무게 좌표, isotropy 부분 공간의 최고 무게, Weyl 차원 공식.

- α_i = Σ_j a_ji Λ_j : 단순근 기저 → 기본 무게 기저 변환
- K-모듈 m_n 의 최고 무게 λ_n : grading[n] 에서 K 의 단순근을 더해도 루트가 되지 않는 유일한 원소
- dim_C ρ_λ = ∏_{α∈R_K⁺} (1 + ⟨λ,α⟩/⟨δ_K,α⟩), δ_K = ½ Σ R_K⁺
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .errors import DimensionMismatch, NonIntegerResult, NotDominant, NotUnique
from .flagspace import TwoSummandSpace
from .rootsys import RootSystem, inner_product
from .schema import RootVec, WeightVec


def to_weight_basis(rs: RootSystem, v: Sequence[int]) -> WeightVec:
    """단순근 기저 좌표 v 를 기본 무게 기저 좌표로 변환 (j 번째 성분 = Σ_i a_ji v_i)."""
    if len(v) != rs.rank:
        raise DimensionMismatch(rs.rank, len(v))
    return tuple(
        Fraction(sum(rs.cartan[j][i] * v[i] for i in range(rs.rank)))
        for j in range(rs.rank)
    )


def unpainted_simple_roots(ts: TwoSummandSpace) -> List[RootVec]:
    rs = ts.root_system
    return [rs.simple_root(i) for i in range(1, rs.rank + 1) if i != ts.node]


def highest_weight(ts: TwoSummandSpace, n: int) -> RootVec:
    """m_n 의 최고 무게 (루트 좌표)."""
    rs = ts.root_system
    simple_k = unpainted_simple_roots(ts)
    candidates = [
        gamma
        for gamma in ts.grading[n]
        if not any(rs.is_root(tuple(g + a for g, a in zip(gamma, alpha))) for alpha in simple_k)
    ]
    if len(candidates) != 1:
        raise NotUnique(n, candidates)
    return candidates[0]


def half_sum(rs: RootSystem, roots: Iterable[RootVec]) -> Tuple[Fraction, ...]:
    total = [Fraction(0)] * rs.rank
    for root in roots:
        for i, c in enumerate(root):
            total[i] += c
    return tuple(x / 2 for x in total)


def weyl_dim(rs: RootSystem, rk_plus: Iterable[RootVec], lam: Sequence[int]) -> int:
    """부분 루트 시스템 rk_plus 에 대한 최고 무게 λ 표현의 복소 차원."""
    rk_plus = list(rk_plus)
    delta = half_sum(rs, rk_plus)
    result = Fraction(1)
    for alpha in rk_plus:
        pairing = inner_product(rs, lam, alpha)
        if pairing < 0:
            raise NotDominant(alpha, pairing)
        result *= 1 + pairing / inner_product(rs, delta, alpha)
    if result.denominator != 1:
        raise NonIntegerResult(result)
    return int(result)


def weyl_consistency_violations(ts: TwoSummandSpace) -> List[str]:
    """weyl_dim(λ_n) = |grading[n]| (n = 1, 2)."""
    witnesses = []
    for n in (1, 2):
        lam = highest_weight(ts, n)
        dim = weyl_dim(ts.root_system, ts.grading[0], lam)
        if dim != len(ts.grading[n]):
            witnesses.append(f"n={n}: weyl_dim(λ{n}={lam}) = {dim} ≠ |grading| = {len(ts.grading[n])}")
    return witnesses


def delta_identity_violations(ts: TwoSummandSpace) -> List[str]:
    """δ_K 와 K 의 각 단순 coroot 의 pairing 이 정확히 1."""
    rs = ts.root_system
    delta = half_sum(rs, ts.grading[0])
    witnesses = []
    for alpha in unpainted_simple_roots(ts):
        value = 2 * inner_product(rs, delta, alpha) / inner_product(rs, alpha, alpha)
        if value != 1:
            witnesses.append(f"⟨δ_K, {alpha}^∨⟩ = {value}")
    return witnesses


def basis_round_trip_violations(rs: RootSystem) -> List[str]:
    """to_weight_basis(α_i) 의 j 성분이 a_ji 와 같고, coroot pairing 과도 일치."""
    witnesses = []
    for i in range(1, rs.rank + 1):
        alpha_i = rs.simple_root(i)
        coords = to_weight_basis(rs, alpha_i)
        for j in range(1, rs.rank + 1):
            alpha_j = rs.simple_root(j)
            coroot_pairing = 2 * inner_product(rs, alpha_i, alpha_j) / inner_product(rs, alpha_j, alpha_j)
            if coords[j - 1] != rs.cartan[j - 1][i - 1] or coords[j - 1] != coroot_pairing:
                witnesses.append(f"α{i}: Λ{j} 성분 {coords[j - 1]} ≠ a{j}{i} = {rs.cartan[j - 1][i - 1]}")
    return witnesses
