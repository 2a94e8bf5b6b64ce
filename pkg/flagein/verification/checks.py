"""
기본 교차 검증 체크 모음.

공간 단위 체크는 TwoSummandSpace 를, 루트 시스템 단위 체크는 RootSystem 을
대상으로 하며, 각 체크는 최소 두 가지 독립 경로의 결과를 비교합니다.
"""

from __future__ import annotations

from typing import List

from ..core.einstein import (
    einstein_residual_violations,
    homogeneity_violations,
    scalar_curvature,
    solve_einstein,
    symbolic_einstein_roots,
    system9_residuals,
    t_closed_form,
    t_oracle,
)
from ..core.flagspace import (
    TwoSummandSpace,
    bracket_grading_violations,
    closed_form_dims,
    partition_violations,
)
from ..core.hessian import (
    criticality_violations,
    identity_violations,
    lagrange_multiplier,
    ray_invariance_violations,
    sign_duality_violations,
    symbolic_determinant_violations,
)
from ..core.rootsys import (
    RootSystem,
    cartan_violations,
    expected_positive_root_count,
    killing_consistency_violations,
    root_closure_violations,
)
from ..core.weights import (
    basis_round_trip_violations,
    delta_identity_violations,
    highest_weight,
    weyl_consistency_violations,
    weyl_dim,
)
from .registry import CheckContext, CheckRegistry, CheckScope

DEFAULT_REGISTRY = CheckRegistry()
check = DEFAULT_REGISTRY.check


# ==================== 공간 단위 ====================

@check("partition")
def _partition(ts: TwoSummandSpace, ctx: CheckContext) -> List[str]:
    return partition_violations(ts)


@check("bracket_grading")
def _bracket_grading(ts: TwoSummandSpace, ctx: CheckContext) -> List[str]:
    return bracket_grading_violations(ts)


@check("dimension_triple")
def _dimension_triple(ts: TwoSummandSpace, ctx: CheckContext) -> List[str]:
    by_roots = (ts.d1, ts.d2)
    by_weyl = tuple(
        2 * weyl_dim(ts.root_system, ts.grading[0], highest_weight(ts, n)) for n in (1, 2)
    )
    by_table = closed_form_dims(ts.lie_type, ts.node)
    if by_table is None:
        return [f"{ts.subject}: 차원표 항목 없음"]
    if not by_roots == by_weyl == by_table:
        return [f"roots {by_roots}, weyl {by_weyl}, table {by_table}"]
    return []


@check("weyl_consistency")
def _weyl_consistency(ts: TwoSummandSpace, ctx: CheckContext) -> List[str]:
    return weyl_consistency_violations(ts)


@check("delta_identity")
def _delta_identity(ts: TwoSummandSpace, ctx: CheckContext) -> List[str]:
    return delta_identity_violations(ts)


@check("t_oracle")
def _t_oracle(ts: TwoSummandSpace, ctx: CheckContext) -> List[str]:
    closed, oracle = t_closed_form(ts.d1, ts.d2), t_oracle(ts)
    if closed != oracle:
        return [f"t_closed_form = {closed} ≠ t_oracle = {oracle}"]
    return []


@check("einstein_residuals")
def _einstein_residuals(ts: TwoSummandSpace, ctx: CheckContext) -> List[str]:
    witnesses = einstein_residual_violations(ts)
    solutions = solve_einstein(ts)
    for g in (solutions.kaehler, solutions.non_kaehler):
        c = lagrange_multiplier(ts.d1, ts.d2, solutions.t, g)
        residuals = system9_residuals(ts.d1, ts.d2, solutions.t, g, c)
        if any(r != 0 for r in residuals):
            witnesses.append(f"({g.x1}, {g.x2}), c={c}: 연립방정식 잔차 {residuals}")
    return witnesses


@check("eq11_identity")
def _eq11_identity(ts: TwoSummandSpace, ctx: CheckContext) -> List[str]:
    return identity_violations(ts, "eq11")


@check("eq12_identity")
def _eq12_identity(ts: TwoSummandSpace, ctx: CheckContext) -> List[str]:
    return identity_violations(ts, "eq12")


@check("symbolic_determinant")
def _symbolic_determinant(ts: TwoSummandSpace, ctx: CheckContext) -> List[str]:
    return symbolic_determinant_violations(ts)


@check("criticality")
def _criticality(ts: TwoSummandSpace, ctx: CheckContext) -> List[str]:
    return criticality_violations(ts)


@check("sign_duality")
def _sign_duality(ts: TwoSummandSpace, ctx: CheckContext) -> List[str]:
    return sign_duality_violations(ts)


@check("ray_invariance")
def _ray_invariance(ts: TwoSummandSpace, ctx: CheckContext) -> List[str]:
    return ray_invariance_violations(ts, ctx.scales)


@check("homogeneity")
def _homogeneity(ts: TwoSummandSpace, ctx: CheckContext) -> List[str]:
    return homogeneity_violations(ts, ctx.scales)


@check("positivity")
def _positivity(ts: TwoSummandSpace, ctx: CheckContext) -> List[str]:
    solutions = solve_einstein(ts)
    witnesses = []
    for g in (solutions.kaehler, solutions.non_kaehler):
        S = scalar_curvature(ts.d1, ts.d2, solutions.t, g)
        if S <= 0:
            witnesses.append(f"S({g.x1}, {g.x2}) = {S} ≤ 0")
    return witnesses


@check("symbolic_roots")
def _symbolic_roots(ts: TwoSummandSpace, ctx: CheckContext) -> List[str]:
    solutions = solve_einstein(ts)
    expected = sorted([solutions.kaehler.x2, solutions.non_kaehler.x2])
    got = symbolic_einstein_roots(ts.d1, ts.d2, solutions.t)
    if got != expected:
        return [f"sympy 근 {[str(x) for x in got]} ≠ {[str(x) for x in expected]}"]
    return []


# ==================== 루트 시스템 단위 ====================

@check("cartan_symmetrizer", scope=CheckScope.ROOT_SYSTEM)
def _cartan_symmetrizer(rs: RootSystem, ctx: CheckContext) -> List[str]:
    return cartan_violations(rs)


@check("root_count", scope=CheckScope.ROOT_SYSTEM)
def _root_count(rs: RootSystem, ctx: CheckContext) -> List[str]:
    expected = expected_positive_root_count(rs.lie_type)
    witnesses = []
    if len(rs.positive_roots) != expected:
        witnesses.append(f"|R⁺| = {len(rs.positive_roots)} ≠ {expected}")
    for root in rs.positive_roots:
        if any(c > m for c, m in zip(root, rs.highest_root)):
            witnesses.append(f"θ = {rs.highest_root} 가 {root} 를 지배하지 않음")
    return witnesses


@check("killing_consistency", scope=CheckScope.ROOT_SYSTEM)
def _killing_consistency(rs: RootSystem, ctx: CheckContext) -> List[str]:
    return killing_consistency_violations(rs)


@check("basis_round_trip", scope=CheckScope.ROOT_SYSTEM)
def _basis_round_trip(rs: RootSystem, ctx: CheckContext) -> List[str]:
    return basis_round_trip_violations(rs)


@check("root_closure", scope=CheckScope.ROOT_SYSTEM)
def _root_closure(rs: RootSystem, ctx: CheckContext) -> List[str]:
    return root_closure_violations(rs)
