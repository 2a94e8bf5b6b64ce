"""
두 개의 isotropy summand 를 갖는 flag manifold 의 불변 Einstein 계량.

대각 계량 g = x1(−B)|m1 + x2(−B)|m2 에 대해:
- 스칼라 곡률  S = ½(d1/x1 + d2/x2) − ¼(t·x2/x1² + 2t/x2),  t = [112]
- 부피         V = x1^d1 · x2^d2
- Einstein 방정식은 2차 동차식 (einstein_polynomial) 으로 환원되며,
  x1 = 1 로 정규화하면 Kähler 해 x2 = 2 와 non-Kähler 해 x2 = 4d2/(d1+2d2) 를 갖습니다.

t 는 닫힌 형태 d1·d2/(d1+4d2) 로 계산하고, 구조 상수 합 (t_oracle) 은
검증 경로로만 사용합니다.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import List, Tuple

import sympy

from .flagspace import TwoSummandSpace
from .rootsys import structure_constant_sq
from .schema import EinsteinSolutionSet, InvariantMetric, Rational

logger = logging.getLogger(__name__)


def t_closed_form(d1: int, d2: int) -> Fraction:
    return Fraction(d1 * d2, d1 + 4 * d2)


def t_oracle(ts: TwoSummandSpace) -> Fraction:
    """[112] = Σ_{α,β∈R⁺(1), α+β∈R⁺(2)} 2·N²_{α,β} (순서쌍)."""
    rs = ts.root_system
    level_two = set(ts.grading[2])
    total = Fraction(0)
    for alpha in ts.grading[1]:
        for beta in ts.grading[1]:
            if tuple(a + b for a, b in zip(alpha, beta)) in level_two:
                total += 2 * structure_constant_sq(rs, alpha, beta)
    logger.debug("t_oracle %s = %s", ts.subject, total)
    return total


def scalar_curvature(d1: int, d2: int, t: Rational, g: InvariantMetric) -> Fraction:
    x1, x2 = g.x1, g.x2
    return Fraction(1, 2) * (d1 / x1 + d2 / x2) - Fraction(1, 4) * (t * x2 / x1 ** 2 + 2 * t / x2)


def einstein_polynomial(d1: int, d2: int, t: Rational, x1: Rational, x2: Rational) -> Fraction:
    """2td1x1² − 2d1d2x1² − td1x2² + 2d1d2x1x2 − 2td2x2² (Einstein ray 위에서 0)."""
    t, x1, x2 = Fraction(t), Fraction(x1), Fraction(x2)
    return (
        2 * t * d1 * x1 ** 2
        - 2 * d1 * d2 * x1 ** 2
        - t * d1 * x2 ** 2
        + 2 * d1 * d2 * x1 * x2
        - 2 * t * d2 * x2 ** 2
    )


def einstein_metrics(d1: int, d2: int) -> EinsteinSolutionSet:
    return EinsteinSolutionSet(
        kaehler=InvariantMetric(1, 2),
        non_kaehler=InvariantMetric(1, Fraction(4 * d2, d1 + 2 * d2)),
        t=t_closed_form(d1, d2),
    )


def solve_einstein(ts: TwoSummandSpace) -> EinsteinSolutionSet:
    """x1 = 1 로 정규화한 두 Einstein 계량."""
    return einstein_metrics(ts.d1, ts.d2)


def volume(d1: int, d2: int, g: InvariantMetric) -> Fraction:
    return g.x1 ** d1 * g.x2 ** d2


def _log_fraction(value: Fraction) -> float:
    # 큰 정수도 math.log 로 처리 가능 (float 변환 overflow 회피)
    return math.log(value.numerator) - math.log(value.denominator)


def volume_and_constant(d1: int, d2: int, g: InvariantMetric, S: Rational) -> Tuple[Fraction, int, float]:
    """(V, n, κ): κ = S·V^{1/n}/n 은 같은 ray 위 부피 1 계량의 Einstein 상수."""
    V = volume(d1, d2, g)
    n = d1 + d2
    kappa = float(S) * math.exp(_log_fraction(V) / n) / n
    return V, n, kappa


def unit_volume_point(d1: int, d2: int, g: InvariantMetric) -> Tuple[float, float]:
    """g 의 ray 위에서 부피가 1 인 점 (표시용 float)."""
    scale = math.exp(-_log_fraction(volume(d1, d2, g)) / (d1 + d2))
    return float(g.x1) * scale, float(g.x2) * scale


def scalar_curvature_gradient(d1: int, d2: int, t: Rational, g: InvariantMetric) -> Tuple[Fraction, Fraction]:
    x1, x2 = g.x1, g.x2
    s1 = -Fraction(d1) / (2 * x1 ** 2) + t * x2 / (2 * x1 ** 3)
    s2 = (t - d2) / (2 * x2 ** 2) - Fraction(t) / (4 * x1 ** 2)
    return s1, s2


def volume_gradient(d1: int, d2: int, g: InvariantMetric) -> Tuple[Fraction, Fraction]:
    x1, x2 = g.x1, g.x2
    return d1 * x1 ** (d1 - 1) * x2 ** d2, d2 * x1 ** d1 * x2 ** (d2 - 1)


def system9_residuals(d1: int, d2: int, t: Rational, g: InvariantMetric, c: Rational) -> Tuple[Fraction, Fraction]:
    """∂S/∂x_i − c·∂V/∂x_i (i = 1, 2). Lagrange 조건에서 둘 다 0."""
    s1, s2 = scalar_curvature_gradient(d1, d2, t, g)
    v1, v2 = volume_gradient(d1, d2, g)
    return s1 - c * v1, s2 - c * v2


def symbolic_einstein_roots(d1: int, d2: int, t: Rational) -> List[Fraction]:
    """x1 = 1 에서 Einstein 방정식을 x2 에 대해 sympy 로 풀어 얻은 양의 근 (오름차순)."""
    x2 = sympy.Symbol("x2", positive=True)
    t_sym = sympy.Rational(Fraction(t).numerator, Fraction(t).denominator)
    expr = 2 * t_sym * d1 - 2 * d1 * d2 - t_sym * d1 * x2 ** 2 + 2 * d1 * d2 * x2 - 2 * t_sym * d2 * x2 ** 2
    roots = sympy.roots(sympy.Poly(expr, x2))
    result = []
    for root in roots:
        if not root.is_Rational:
            raise ValueError(f"유리수가 아닌 근: {root}")
        if root > 0:
            result.append(Fraction(int(root.p), int(root.q)))
    return sorted(result)


def einstein_residual_violations(ts: TwoSummandSpace) -> List[str]:
    """두 해가 Einstein 다항식을 만족하고 서로 다른지 확인."""
    solutions = solve_einstein(ts)
    witnesses = []
    for label, g in (("kaehler", solutions.kaehler), ("non_kaehler", solutions.non_kaehler)):
        value = einstein_polynomial(ts.d1, ts.d2, solutions.t, g.x1, g.x2)
        if value != 0:
            witnesses.append(f"{label} {g.x1, g.x2}: Einstein 다항식 = {value}")
    if solutions.kaehler.x2 == solutions.non_kaehler.x2:
        witnesses.append("Kähler 해와 non-Kähler 해가 일치")
    return witnesses


def homogeneity_violations(ts: TwoSummandSpace, scales: List[Fraction]) -> List[str]:
    """S 는 −1 차, V 는 n 차 동차."""
    solutions = solve_einstein(ts)
    d1, d2, t = ts.d1, ts.d2, solutions.t
    n = d1 + d2
    witnesses = []
    for g in (solutions.kaehler, solutions.non_kaehler):
        S = scalar_curvature(d1, d2, t, g)
        V = volume(d1, d2, g)
        for s in scales:
            scaled = g.scaled(s)
            if scalar_curvature(d1, d2, t, scaled) != S / s:
                witnesses.append(f"S({scaled.x1}, {scaled.x2}) ≠ S/{s}")
            if volume(d1, d2, scaled) != V * s ** n:
                witnesses.append(f"V({scaled.x1}, {scaled.x2}) ≠ {s}^{n}·V")
    return witnesses
