"""
부피 제약 하 스칼라 곡률의 임계점 판정.

S̃ = S − c(V − 1) 의 bordered Hessian

    | 0      −V1     −V2   |
    | −V1    S̃11     S̃12   |
    | −V2    S̃12     S̃22   |

의 행렬식은 승수 c 에 대해 아핀이며, |H| > 0 이면 극대, |H| < 0 이면 극소로
판정합니다. 독립 검증으로 부피 등위 곡선 x1^d1·x2^d2 = const 를 따라 S 의
2계 도함수 D² 를 정확히 계산합니다 (D² > 0 극소, D² < 0 극대).

[참고] 유도된 승수 c = −S/(nV) 는 항상 음수입니다. c > 0 을 가정한 판정과는
부호가 다를 수 있으므로 보고서에 두 값을 모두 기록합니다.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import sympy

from .einstein import (
    einstein_polynomial,
    scalar_curvature,
    scalar_curvature_gradient,
    solve_einstein,
    t_closed_form,
    volume,
    volume_gradient,
)
from .errors import NotCritical
from .flagspace import TwoSummandSpace
from .schema import (
    AffinePoly,
    BorderedVerdict,
    CriticalPointReport,
    InvariantMetric,
    MetricKind,
    OracleVerdict,
    Rational,
    to_fraction,
)

logger = logging.getLogger(__name__)


def scalar_curvature_hessian(d1: int, d2: int, t: Rational, g: InvariantMetric) -> Tuple[Fraction, Fraction, Fraction]:
    """(S11, S12, S22)."""
    x1, x2 = g.x1, g.x2
    s11 = d1 / x1 ** 3 - 3 * t * x2 / (2 * x1 ** 4)
    s12 = Fraction(t) / (2 * x1 ** 3)
    s22 = (d2 - t) / x2 ** 3
    return s11, s12, s22


def volume_hessian(d1: int, d2: int, g: InvariantMetric) -> Tuple[Fraction, Fraction, Fraction]:
    """(V11, V12, V22)."""
    x1, x2 = g.x1, g.x2
    v11 = d1 * (d1 - 1) * x1 ** (d1 - 2) * x2 ** d2
    v12 = d1 * d2 * x1 ** (d1 - 1) * x2 ** (d2 - 1)
    v22 = d2 * (d2 - 1) * x1 ** d1 * x2 ** (d2 - 2)
    return v11, v12, v22


def _det3(m: Sequence[Sequence[Fraction]]) -> Fraction:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def bordered_hessian_matrix(d1: int, d2: int, t: Rational, g: InvariantMetric, c: Rational) -> List[List[Fraction]]:
    v1, v2 = volume_gradient(d1, d2, g)
    s11, s12, s22 = scalar_curvature_hessian(d1, d2, t, g)
    v11, v12, v22 = volume_hessian(d1, d2, g)
    c = to_fraction(c)
    return [
        [Fraction(0), -v1, -v2],
        [-v1, s11 - c * v11, s12 - c * v12],
        [-v2, s12 - c * v12, s22 - c * v22],
    ]


def bordered_hessian_poly(d1: int, d2: int, t: Rational, g: InvariantMetric) -> AffinePoly:
    """|H| = a0 + a1·c (행렬식 전개, c = 0 과 c = 1 에서의 값으로 계수 결정)."""
    at_zero = _det3(bordered_hessian_matrix(d1, d2, t, g, 0))
    at_one = _det3(bordered_hessian_matrix(d1, d2, t, g, 1))
    return AffinePoly(at_zero, at_one - at_zero)


def symbolic_bordered_hessian_poly(d1: int, d2: int, t: Rational, g: InvariantMetric) -> AffinePoly:
    """sympy 기호 c 로 행렬식을 전개한 결과 (교차 검증용)."""
    c = sympy.Symbol("c")

    def rat(value: Fraction) -> sympy.Rational:
        return sympy.Rational(value.numerator, value.denominator)

    base = bordered_hessian_matrix(d1, d2, t, g, 0)
    v11, v12, v22 = volume_hessian(d1, d2, g)
    matrix = sympy.Matrix(3, 3, [rat(x) for row in base for x in row])
    matrix[1, 1] -= c * rat(v11)
    matrix[1, 2] -= c * rat(v12)
    matrix[2, 1] -= c * rat(v12)
    matrix[2, 2] -= c * rat(v22)
    poly = sympy.Poly(sympy.expand(matrix.det()), c)
    if poly.degree() > 1:
        raise ValueError(f"|H| 가 c 에 대해 아핀이 아닙니다: {poly}")
    a1 = poly.coeff_monomial(c)
    a0 = poly.coeff_monomial(1)
    return AffinePoly(Fraction(int(a0.p), int(a0.q)), Fraction(int(a1.p), int(a1.q)))


def closed_form_eq11(d1: int, d2: int) -> AffinePoly:
    """Kähler 계량 (1, 2) 에서의 |H| 닫힌 형태."""
    prefactor = -Fraction((d1 + d2) * d1 * d2) * 2 ** (2 * d2 - 2)
    return AffinePoly(prefactor * Fraction(d2, d1 + 4 * d2), prefactor * 2 ** d2)


def closed_form_eq12(d1: int, d2: int) -> AffinePoly:
    """non-Kähler 계량 (1, 4d2/(d1+2d2)) 에서의 |H| 닫힌 형태."""
    r = Fraction(4 * d2, d1 + 2 * d2)
    prefactor = -d1 * r ** (2 * d2 - 2)
    numerator = d1 ** 3 * d2 + 5 * d1 ** 2 * d2 ** 2 + 6 * d1 * d2 ** 3 + 2 * d2 ** 4
    constant = Fraction(numerator, (d1 + 2 * d2) * (d1 + 4 * d2))
    return AffinePoly(prefactor * constant, prefactor * d2 * r ** d2 * (d1 + d2))


def lagrange_multiplier(d1: int, d2: int, t: Rational, g: InvariantMetric) -> Fraction:
    """∇S = c∇V 의 승수 c = −S/(nV). g 가 Einstein ray 위에 없으면 NotCritical."""
    residual = einstein_polynomial(d1, d2, t, g.x1, g.x2)
    if residual != 0:
        raise NotCritical(residual)
    S = scalar_curvature(d1, d2, t, g)
    return -S / ((d1 + d2) * volume(d1, d2, g))


def constraint_curve_derivatives(d1: int, d2: int, g: InvariantMetric) -> Tuple[Fraction, Fraction]:
    """부피 등위 곡선 x2(x1) 의 (x2′, x2″)."""
    r = Fraction(d1, d2)
    return -r * g.x2 / g.x1, r * (r + 1) * g.x2 / g.x1 ** 2


def first_order_residual(d1: int, d2: int, t: Rational, g: InvariantMetric) -> Fraction:
    """S1 + S2·x2′ (제약 곡선 방향 1계 도함수)."""
    s1, s2 = scalar_curvature_gradient(d1, d2, t, g)
    x2p, _ = constraint_curve_derivatives(d1, d2, g)
    return s1 + s2 * x2p


def constrained_second_derivative(d1: int, d2: int, t: Rational, g: InvariantMetric) -> Fraction:
    """D² = S11 + 2·S12·x2′ + S22·x2′² + S2·x2″ (부피 고정 곡선 위 S 의 2계 도함수)."""
    residual = first_order_residual(d1, d2, t, g)
    if residual != 0:
        raise NotCritical(residual, "S1 + S2·x2′")
    _, s2 = scalar_curvature_gradient(d1, d2, t, g)
    s11, s12, s22 = scalar_curvature_hessian(d1, d2, t, g)
    x2p, x2pp = constraint_curve_derivatives(d1, d2, g)
    return s11 + 2 * s12 * x2p + s22 * x2p ** 2 + s2 * x2pp


def bordered_verdict(value: Fraction) -> BorderedVerdict:
    if value > 0:
        return BorderedVerdict.LOCAL_MAX
    if value < 0:
        return BorderedVerdict.LOCAL_MIN
    return BorderedVerdict.SADDLE


def oracle_verdict(d2_value: Fraction) -> OracleVerdict:
    if d2_value > 0:
        return OracleVerdict.LOCAL_MIN
    if d2_value < 0:
        return OracleVerdict.LOCAL_MAX
    return OracleVerdict.DEGENERATE


def classify_metric(
    d1: int,
    d2: int,
    t: Rational,
    g: InvariantMetric,
    c: Optional[Rational] = None,
) -> CriticalPointReport:
    """Einstein 계량 하나를 bordered Hessian 과 D² 두 방법으로 판정합니다.

    Args:
        c: 지정하면 유도된 승수 대신 이 값에서 |H| 를 평가합니다.
    """
    derived = lagrange_multiplier(d1, d2, t, g)
    poly = bordered_hessian_poly(d1, d2, t, g)
    multiplier = derived if c is None else to_fraction(c)
    value = poly.evaluate(multiplier)
    d2_value = constrained_second_derivative(d1, d2, t, g)
    kind = MetricKind.KAEHLER if g.ratio == 2 else MetricKind.NON_KAEHLER
    report = CriticalPointReport(
        metric=g,
        kind=kind,
        S=scalar_curvature(d1, d2, t, g),
        V=volume(d1, d2, g),
        multiplier_c=multiplier,
        hessian_poly=poly,
        hessian_value=value,
        bordered_verdict=bordered_verdict(value),
        oracle_d2=d2_value,
        oracle_verdict=oracle_verdict(d2_value),
        derived_c=derived,
        multiplier_source="derived" if c is None else "supplied",
    )
    logger.debug(
        "classify (%d,%d) at (%s,%s): |H|=%s → %s, D²=%s → %s",
        d1, d2, g.x1, g.x2, value, report.bordered_verdict.value, d2_value, report.oracle_verdict.value,
    )
    return report


def classify(ts: TwoSummandSpace, g: InvariantMetric, c: Optional[Rational] = None) -> CriticalPointReport:
    return classify_metric(ts.d1, ts.d2, t_closed_form(ts.d1, ts.d2), g, c)


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def identity_violations(ts: TwoSummandSpace, which: str) -> List[str]:
    """직접 행렬식 = 닫힌 형태 (which: 'eq11' 은 Kähler, 'eq12' 는 non-Kähler)."""
    solutions = solve_einstein(ts)
    if which == "eq11":
        g, expected = solutions.kaehler, closed_form_eq11(ts.d1, ts.d2)
    else:
        g, expected = solutions.non_kaehler, closed_form_eq12(ts.d1, ts.d2)
    got = bordered_hessian_poly(ts.d1, ts.d2, solutions.t, g)
    if got != expected:
        return [f"{which}: 행렬식 {got.expanded()} ≠ 닫힌 형태 {expected.expanded()}"]
    return []


def criticality_violations(ts: TwoSummandSpace) -> List[str]:
    solutions = solve_einstein(ts)
    witnesses = []
    for g in (solutions.kaehler, solutions.non_kaehler):
        residual = first_order_residual(ts.d1, ts.d2, solutions.t, g)
        if residual != 0:
            witnesses.append(f"({g.x1}, {g.x2}): S1 + S2·x2′ = {residual}")
    return witnesses


def sign_duality_violations(ts: TwoSummandSpace) -> List[str]:
    """sign(|H| at derived c) = −sign(D²), 두 판정의 일치."""
    solutions = solve_einstein(ts)
    witnesses = []
    for g in (solutions.kaehler, solutions.non_kaehler):
        report = classify(ts, g)
        h_sign, d_sign = _sign(report.hessian_value), _sign(report.oracle_d2)
        if h_sign and d_sign and h_sign != -d_sign:
            witnesses.append(f"({g.x1}, {g.x2}): sign|H| = {h_sign}, sign D² = {d_sign}")
        if not report.methods_agree:
            witnesses.append(f"({g.x1}, {g.x2}): {report.bordered_verdict.value} ≠ {report.oracle_verdict.value}")
    return witnesses


def ray_invariance_violations(ts: TwoSummandSpace, scales: Sequence[Fraction]) -> List[str]:
    """(s, s·x2*) 에서의 판정이 (1, x2*) 와 같음."""
    solutions = solve_einstein(ts)
    witnesses = []
    for g in (solutions.kaehler, solutions.non_kaehler):
        base = classify(ts, g)
        for s in scales:
            scaled = classify(ts, g.scaled(s))
            if (scaled.bordered_verdict, scaled.oracle_verdict) != (base.bordered_verdict, base.oracle_verdict):
                witnesses.append(
                    f"s={s}: ({scaled.bordered_verdict.value}, {scaled.oracle_verdict.value}) ≠ "
                    f"({base.bordered_verdict.value}, {base.oracle_verdict.value})"
                )
    return witnesses


def symbolic_determinant_violations(ts: TwoSummandSpace) -> List[str]:
    """Fraction 직접 전개와 sympy 기호 행렬식이 두 Einstein 계량에서 같은 |H| 를 주는지 확인."""
    solutions = solve_einstein(ts)
    witnesses = []
    for g in (solutions.kaehler, solutions.non_kaehler):
        direct = bordered_hessian_poly(ts.d1, ts.d2, solutions.t, g)
        symbolic = symbolic_bordered_hessian_poly(ts.d1, ts.d2, solutions.t, g)
        if direct != symbolic:
            witnesses.append(f"({g.x1}, {g.x2}): 직접 {direct.expanded()} ≠ sympy {symbolic.expanded()}")
    return witnesses
