#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
bordered Hessian / 임계점 판정 테스트

시나리오 목록:
  S1. Lagrange 승수 c = −S/(nV)
  S2. E6 (40,10) 행렬식: 직접 전개 vs 닫힌 형태 vs sympy
  S3. 전체 공간: 직접 행렬식 = 닫힌 형태 (Kähler, non-Kähler)
  S4. 부피 고정 곡선 위 2계 도함수 D²
  S5. classify: 두 판정의 일치, 부호 쌍대성, 지정 승수
  S6. ray 재조정 불변성 (무작위 양의 유리수 20개)
  S7. 직접 행렬식 = sympy 기호 행렬식 (두 Einstein 계량)
"""

import os
import random
import sys
from fractions import Fraction

import pytest

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, PROJECT_ROOT)

from flagein.core.einstein import einstein_metrics, solve_einstein
from flagein.core.errors import NotCritical
from flagein.core.flagspace import PaintedDiagram, validate
from flagein.core.hessian import (
    bordered_hessian_poly,
    bordered_verdict,
    classify,
    closed_form_eq11,
    closed_form_eq12,
    constrained_second_derivative,
    criticality_violations,
    lagrange_multiplier,
    oracle_verdict,
    ray_invariance_violations,
    sign_duality_violations,
    symbolic_bordered_hessian_poly,
    symbolic_determinant_violations,
)
from flagein.core.rootsys import build_root_system
from flagein.core.schema import AffinePoly, BorderedVerdict, InvariantMetric, LieType, MetricKind, OracleVerdict
from flagein.verification.runner import collect_spaces


# ==================== 테스트 러너 ====================

class _T:
    _results = []
    _scenario = ""

    @classmethod
    def scenario(cls, name: str):
        cls._scenario = name
        print(f"\n{'='*70}")
        print(f"🧪 {name}")
        print(f"{'='*70}")

    @classmethod
    def check(cls, label: str, condition: bool, detail: str = ""):
        cls._results.append((cls._scenario, label, bool(condition)))
        print(f"  {'✅' if condition else '❌'} {label}" + (f" — {detail}" if detail else ""))
        assert condition, f"{label} {detail}".strip()

    @classmethod
    def summary(cls) -> int:
        failed = sum(1 for _, _, ok in cls._results if not ok)
        print(f"\n📊 Hessian 테스트: {len(cls._results) - failed}/{len(cls._results)} 통과")
        return 1 if failed else 0


T = _T
F = Fraction

KAEHLER = InvariantMetric(1, 2)
NON_KAEHLER = InvariantMetric(1, F(2, 3))


def _space(family: str, rank: int, node: int):
    return validate(PaintedDiagram(build_root_system(LieType(family, rank)), node))


def test_s1_lagrange_multiplier():
    T.scenario("S1. Lagrange 승수")
    T.check("E6 (1,2) → c = −3/8192", lagrange_multiplier(40, 10, 5, KAEHLER) == F(-3, 8192))
    T.check("E6 (1,2/3) → c = −216513/8192", lagrange_multiplier(40, 10, 5, NON_KAEHLER) == F(-216513, 8192))

    c = lagrange_multiplier(40, 10, 5, KAEHLER)
    for s in (F(2), F(1, 3), F(7, 5)):
        scaled = lagrange_multiplier(40, 10, 5, KAEHLER.scaled(s))
        T.check(f"c(s·g) = c(g)/s^(n+1), s={s}", scaled == c / s ** 51)

    with pytest.raises(NotCritical) as excinfo:
        lagrange_multiplier(40, 10, 5, InvariantMetric(1, 1))
    T.check("Einstein ray 밖 → NotCritical, 잔차 +100", excinfo.value.residual == 100)


def test_s2_e6_determinant():
    T.scenario("S2. E6 (40,10) 행렬식")
    kaehler = bordered_hessian_poly(40, 10, 5, KAEHLER)
    T.check("(1,2): a0 = −655360000", kaehler.a0 == -655360000)
    T.check("(1,2): a1 = −5368709120000", kaehler.a1 == -5368709120000)
    T.check("(1,2): 인수분해형 −655360000·(1+8192c)", kaehler.factored() == "-655360000·(1+8192c)", kaehler.factored())
    T.check("(1,2) = 닫힌 형태 (Kähler)", kaehler == closed_form_eq11(40, 10))

    non_kaehler = bordered_hessian_poly(40, 10, 5, NON_KAEHLER)
    T.check("(1,2/3): a0 = −11141120000/1162261467", non_kaehler.a0 == F(-11141120000, 1162261467))
    T.check(
        "(1,2/3): a1 = −5368709120000/22876792454961 = −20000·(2/3)^28",
        non_kaehler.a1 == F(-5368709120000, 22876792454961) == -20000 * F(2, 3) ** 28,
    )
    T.check("(1,2/3) = 닫힌 형태 (non-Kähler)", non_kaehler == closed_form_eq12(40, 10))
    T.check(
        "인쇄된 계수 53687091200000/22876792454961 와는 10배 차이",
        F(-53687091200000, 22876792454961) / non_kaehler.a1 == 10,
    )

    T.check("sympy 전개 = 직접 전개 (1,2)", symbolic_bordered_hessian_poly(40, 10, 5, KAEHLER) == kaehler)
    T.check("sympy 전개 = 직접 전개 (1,2/3)", symbolic_bordered_hessian_poly(40, 10, 5, NON_KAEHLER) == non_kaehler)
    T.check("비임계점에서도 계산 가능", isinstance(bordered_hessian_poly(40, 10, 5, InvariantMetric(1, 1)), AffinePoly))


def test_s3_closed_form_identities():
    T.scenario("S3. 닫힌 형태 항등식 (전체 공간)")
    for d1, d2 in ((8, 2), (16, 14), (112, 2)):
        g = einstein_metrics(d1, d2)
        T.check(f"({d1},{d2}) Kähler 항등식", bordered_hessian_poly(d1, d2, g.t, g.kaehler) == closed_form_eq11(d1, d2))

    for ts in collect_spaces(8):
        metrics = solve_einstein(ts)
        T.check(
            f"{ts.subject} Kähler",
            bordered_hessian_poly(ts.d1, ts.d2, metrics.t, metrics.kaehler) == closed_form_eq11(ts.d1, ts.d2),
        )
        T.check(
            f"{ts.subject} non-Kähler",
            bordered_hessian_poly(ts.d1, ts.d2, metrics.t, metrics.non_kaehler) == closed_form_eq12(ts.d1, ts.d2),
        )


def test_s4_constrained_second_derivative():
    T.scenario("S4. D²")
    T.check("E6 (1,2) → D² = −50", constrained_second_derivative(40, 10, 5, KAEHLER) == -50)
    T.check("E6 (1,2/3) → D² = +50", constrained_second_derivative(40, 10, 5, NON_KAEHLER) == 50)

    with pytest.raises(NotCritical):
        constrained_second_derivative(40, 10, 5, InvariantMetric(1, 1))
    T.check("비임계점 → NotCritical", True)

    for ts in collect_spaces(8):
        T.check(f"{ts.subject} S1 + S2·x2′ = 0", not criticality_violations(ts))


def test_s5_classify():
    T.scenario("S5. classify")
    ts = _space("E", 6, 2)
    kaehler = classify(ts, KAEHLER)
    T.check("Kähler kind", kaehler.kind == MetricKind.KAEHLER)
    T.check("Kähler |H| = 1310720000", kaehler.hessian_value == 1310720000)
    T.check("Kähler 판정 LocalMax / LocalMax", (kaehler.bordered_verdict, kaehler.oracle_verdict) == (BorderedVerdict.LOCAL_MAX, OracleVerdict.LOCAL_MAX))
    T.check("Kähler hessian_value = poly(c)", kaehler.hessian_value == kaehler.hessian_poly.evaluate(kaehler.multiplier_c))

    non_kaehler = classify(ts, NON_KAEHLER)
    T.check("non-Kähler kind", non_kaehler.kind == MetricKind.NON_KAEHLER)
    T.check("non-Kähler |H| < 0", non_kaehler.hessian_value < 0, str(float(non_kaehler.hessian_value)))
    T.check("non-Kähler |H| ≈ −3.38", abs(float(non_kaehler.hessian_value) + 3.38) < 0.01)
    T.check("non-Kähler D² = 50 → LocalMin", non_kaehler.oracle_d2 == 50 and non_kaehler.oracle_verdict == OracleVerdict.LOCAL_MIN)
    T.check("non-Kähler 판정 일치", non_kaehler.methods_agree and non_kaehler.bordered_verdict == BorderedVerdict.LOCAL_MIN)

    supplied = classify(ts, KAEHLER, c=F(1, 8192))
    T.check("지정 승수 c > 0 → LocalMin", supplied.bordered_verdict == BorderedVerdict.LOCAL_MIN)
    T.check("지정 승수 기록", supplied.multiplier_source == "supplied" and supplied.derived_c == F(-3, 8192))

    T.check("|H| = 0 → Saddle", bordered_verdict(F(0)) == BorderedVerdict.SADDLE)
    T.check("D² = 0 → Degenerate", oracle_verdict(F(0)) == OracleVerdict.DEGENERATE)

    g2 = classify(_space("G", 2, 1), InvariantMetric(1, F(2, 3)))
    T.check("G2 non-Kähler LocalMin", g2.oracle_verdict == OracleVerdict.LOCAL_MIN)

    for space in collect_spaces(8):
        T.check(f"{space.subject} sign|H| = −sign D²", not sign_duality_violations(space))


def test_s6_ray_invariance():
    T.scenario("S6. ray 재조정 불변성")
    rng = random.Random(20240101)
    scales = [F(rng.randint(1, 60), rng.randint(1, 60)) for _ in range(20)]
    for family, rank, node in (("G", 2, 1), ("F", 4, 4), ("E", 6, 2), ("C", 5, 2), ("B", 4, 3), ("D", 6, 3), ("E", 8, 1)):
        ts = _space(family, rank, node)
        violations = ray_invariance_violations(ts, scales)
        T.check(f"{ts.subject} 판정 불변", not violations, str(violations[:2]))


def test_s7_symbolic_determinant():
    T.scenario("S7. 직접 전개 vs sympy 행렬식")
    for family, rank, node in (("G", 2, 1), ("F", 4, 1), ("E", 6, 2), ("E", 7, 5), ("B", 5, 3), ("C", 4, 2), ("D", 5, 3)):
        ts = _space(family, rank, node)
        violations = symbolic_determinant_violations(ts)
        T.check(f"{ts.subject} 일치", not violations, str(violations[:2]))


# ==================== 메인 ====================

if __name__ == "__main__":
    test_s1_lagrange_multiplier()
    test_s2_e6_determinant()
    test_s3_closed_form_identities()
    test_s4_constrained_second_derivative()
    test_s5_classify()
    test_s6_ray_invariance()
    test_s7_symbolic_determinant()
    sys.exit(T.summary())
