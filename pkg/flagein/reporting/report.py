"""
analyze / list 보고서 조립과 직렬화.

정확한 유리수는 항상 "p/q" 문자열로 직렬화하고, float 은 ``*_approx`` 필드에만
넣습니다. ``to_payload`` 결과를 ``json.dumps(sort_keys=True, indent=2)`` 로
출력하면 결정적인 바이트열을 얻습니다.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields, is_dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional

from ..core.einstein import (
    solve_einstein,
    t_closed_form,
    t_oracle,
    unit_volume_point,
    volume_and_constant,
)
from ..core.dynkin import automorphism_orbits
from ..core.flagspace import PaintedDiagram, TwoSummandSpace, enumerate_spaces, validate
from ..core.hessian import classify, closed_form_eq12
from ..core.rootsys import build_root_system
from ..core.schema import AffinePoly, CriticalPointReport, LieType, Rational
from ..core.weights import highest_weight, to_weight_basis, weyl_dim

# 비교용으로 기록하는 non-Kähler c 계수의 참고값 (E6, d = (40, 10))
_E6_REFERENCE_C_COEFFICIENT = Fraction(-53687091200000, 22876792454961)


@dataclass
class MetricAnalysis:
    """Einstein 계량 하나의 분석 결과."""
    critical_point: CriticalPointReport
    n: int
    kappa_approx: float
    x1_unit_approx: float
    x2_unit_approx: float
    supplied: Optional[CriticalPointReport] = None


@dataclass
class AnalysisReport:
    """analyze 명령의 전체 보고서."""
    space: Dict[str, Any]
    d1: int
    d2: int
    t_closed_form: Fraction
    t_oracle: Fraction
    highest_weights: Dict[str, Dict[str, Any]]
    weyl_dimensions: Dict[str, int]
    metrics: List[MetricAnalysis]
    notes: List[str] = field(default_factory=list)


def _to_serializable(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, AffinePoly):
        return {"a0": str(value.a0), "a1": str(value.a1), "factored": value.factored()}
    if is_dataclass(value):
        return {f.name: _to_serializable(getattr(value, f.name)) for f in fields(value)}
    if isinstance(value, dict):
        return {str(key): _to_serializable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, set)):
        return [_to_serializable(item) for item in value]
    if isinstance(value, (str, int, float)):
        return value
    return str(value)


def to_payload(value: Any) -> Any:
    return _to_serializable(value)


def describe_space(ts: TwoSummandSpace) -> Dict[str, Any]:
    return {
        "family": ts.lie_type.family,
        "rank": ts.lie_type.rank,
        "node": ts.node,
        "k_description": ts.k_description,
        "family_label": ts.family_label,
        "orbit": list(ts.orbit),
    }


def list_rows(lie_type: LieType, dedup: bool = False) -> List[Dict[str, Any]]:
    """list 명령의 행: painted node, K 라벨, d1, d2, t, non-Kähler x2."""
    rows = []
    for ts in enumerate_spaces(lie_type, dedup=dedup):
        solutions = solve_einstein(ts)
        rows.append(
            {
                "node": ts.node,
                "k_description": ts.k_description,
                "family_label": ts.family_label,
                "orbit": list(ts.orbit),
                "d1": ts.d1,
                "d2": ts.d2,
                "t": str(solutions.t),
                "non_kaehler_x2": str(solutions.non_kaehler.x2),
            }
        )
    return rows


def list_payload(lie_type: LieType, dedup: bool = False) -> Dict[str, Any]:
    rows = list_rows(lie_type, dedup)
    return {"lie_type": str(lie_type), "dedup": dedup, "count": len(rows), "spaces": rows}


def _notes(ts: TwoSummandSpace, metrics: List[MetricAnalysis]) -> List[str]:
    notes = []
    derived = [m.critical_point.derived_c for m in metrics]
    if all(c is not None and c < 0 for c in derived):
        notes.append(
            "derived multiplier c = -S/(nV) is negative at both metrics; "
            "a classification that assumes c > 0 does not apply, computed verdicts are reported"
        )
    if ts.lie_type.family == "G":
        notes.append("G2 weight basis: alpha2 = -L1+2L2 (a printed value -L1+3L2 contradicts the Cartan matrix)")
    if (ts.d1, ts.d2) == (40, 10):
        eq12 = closed_form_eq12(ts.d1, ts.d2)
        notes.append(
            f"non-Kaehler c-coefficient: determinant {eq12.a1}, "
            f"reference value {_E6_REFERENCE_C_COEFFICIENT} differs by a factor of "
            f"{_E6_REFERENCE_C_COEFFICIENT / eq12.a1}"
        )
    return notes


def build_analysis_report(lie_type: LieType, node: int, c: Optional[Rational] = None) -> AnalysisReport:
    """analyze 파이프라인: 검증 → t → 최고 무게 → Einstein 계량 → 임계점 판정."""
    rs = build_root_system(lie_type)
    ts = validate(PaintedDiagram(rs, node))
    ts.orbit = tuple(sorted(automorphism_orbits(rs)[node]))
    solutions = solve_einstein(ts)

    highest_weights = {}
    weyl_dimensions = {}
    for n in (1, 2):
        lam = highest_weight(ts, n)
        highest_weights[str(n)] = {"root_basis": list(lam), "weight_basis": list(to_weight_basis(rs, lam))}
        weyl_dimensions[str(n)] = weyl_dim(rs, ts.grading[0], lam)

    metrics = []
    for g in (solutions.kaehler, solutions.non_kaehler):
        report = classify(ts, g)
        _, n, kappa = volume_and_constant(ts.d1, ts.d2, g, report.S)
        x1_unit, x2_unit = unit_volume_point(ts.d1, ts.d2, g)
        metrics.append(
            MetricAnalysis(
                critical_point=report,
                n=n,
                kappa_approx=kappa,
                x1_unit_approx=x1_unit,
                x2_unit_approx=x2_unit,
                supplied=classify(ts, g, c) if c is not None else None,
            )
        )

    return AnalysisReport(
        space=describe_space(ts),
        d1=ts.d1,
        d2=ts.d2,
        t_closed_form=t_closed_form(ts.d1, ts.d2),
        t_oracle=t_oracle(ts),
        highest_weights=highest_weights,
        weyl_dimensions=weyl_dimensions,
        metrics=metrics,
        notes=_notes(ts, metrics),
    )
