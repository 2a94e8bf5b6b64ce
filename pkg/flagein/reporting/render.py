"""list / analyze / verify 결과를 text, json, csv 로 렌더링합니다."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any, Dict, List

from ..core.schema import VerificationSummary

_LIST_COLUMNS = ["node", "k_description", "family_label", "d1", "d2", "t", "non_kaehler_x2"]


def render_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)


def render_list_text(payload: Dict[str, Any]) -> str:
    lines = [f"🧭 {payload['lie_type']}: two-summand flag manifolds {payload['count']}개"]
    if not payload["spaces"]:
        lines.append("  (mark 2 인 노드 없음)")
    for row in payload["spaces"]:
        orbit = ",".join(str(n) for n in row["orbit"])
        lines.append(
            f"  α{row['node']}  K={row['k_description']}  d1={row['d1']}  d2={row['d2']}  "
            f"t={row['t']}  non-Kähler x2={row['non_kaehler_x2']}  [{row['family_label']}; orbit {orbit}]"
        )
    return "\n".join(lines)


def render_list_csv(payload: Dict[str, Any]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=_LIST_COLUMNS, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for row in payload["spaces"]:
        writer.writerow(row)
    return buffer.getvalue().rstrip("\n")


def _linear_combination(coords, symbol: str) -> str:
    """["1", "-1", "0", "2"] → "Λ1 - Λ2 + 2Λ4"."""
    terms = []
    for index, raw in enumerate(coords, start=1):
        value = Fraction(raw)
        if value == 0:
            continue
        magnitude = "" if abs(value) == 1 else str(abs(value))
        sign = "-" if value < 0 else "+"
        terms.append((sign, f"{magnitude}{symbol}{index}"))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, term in terms[1:]:
        text += f" {sign} {term}"
    return text


def _render_critical_point(cp: Dict[str, Any], indent: str = "    ") -> List[str]:
    poly = cp["hessian_poly"]
    return [
        f"{indent}S = {cp['S']}, V = {cp['V']}",
        f"{indent}c ({cp['multiplier_source']}) = {cp['multiplier_c']}  (derived c = {cp['derived_c']})",
        f"{indent}|H| = {poly['factored']}  [a0 = {poly['a0']}, a1 = {poly['a1']}]",
        f"{indent}|H|(c) = {cp['hessian_value']} → {cp['bordered_verdict']}",
        f"{indent}D² = {cp['oracle_d2']} → {cp['oracle_verdict']}",
    ]


def render_analysis_text(payload: Dict[str, Any]) -> str:
    space = payload["space"]
    lines = [
        f"🧭 {space['family']}{space['rank']} painted α{space['node']}: "
        f"K = {space['k_description']}  ({space['family_label']}; orbit {space['orbit']})",
        f"  d1 = {payload['d1']}, d2 = {payload['d2']}",
    ]
    t_ok = payload["t_closed_form"] == payload["t_oracle"]
    lines.append(
        f"  {'✅' if t_ok else '❌'} t = {payload['t_closed_form']} (closed form), {payload['t_oracle']} (oracle)"
    )
    for n in ("1", "2"):
        hw = payload["highest_weights"][n]
        lines.append(
            f"  λ{n} = {_linear_combination(hw['root_basis'], 'α')} = {_linear_combination(hw['weight_basis'], 'Λ')}, "
            f"dim_C m{n} = {payload['weyl_dimensions'][n]}"
        )
    for metric in payload["metrics"]:
        cp = metric["critical_point"]
        agree = cp["bordered_verdict"] == cp["oracle_verdict"]
        lines.append(
            f"  {'✅' if agree else '❌'} {cp['kind']} g = ({cp['metric']['x1']}, {cp['metric']['x2']}), "
            f"n = {metric['n']}, κ ≈ {metric['kappa_approx']:.6g}, "
            f"unit volume ≈ ({metric['x1_unit_approx']:.6g}, {metric['x2_unit_approx']:.6g})"
        )
        lines.extend(_render_critical_point(cp))
        if metric.get("supplied"):
            lines.append("    supplied multiplier:")
            lines.extend(_render_critical_point(metric["supplied"], indent="      "))
    for note in payload["notes"]:
        lines.append(f"  📝 {note}")
    return "\n".join(lines)


def verify_payload(summary: VerificationSummary) -> Dict[str, Any]:
    failures = [
        {"check": o.name, "subject": o.subject, "witnesses": o.witnesses}
        for o in summary.outcomes
        if not o.passed
    ]
    return {
        "max_rank": summary.max_rank,
        "ok": summary.ok,
        "passed": summary.passed,
        "failed": summary.failed,
        "spaces_covered": summary.spaces_covered,
        "lie_types_covered": summary.lie_types_covered,
        "checks": summary.counts_by_check(),
        "failures": failures,
    }


def render_verify_text(summary: VerificationSummary) -> str:
    lines = [
        f"🔎 verify {summary.max_rank}: Lie 타입 {len(summary.lie_types_covered)}개, "
        f"공간 {len(summary.spaces_covered)}개"
    ]
    for name, counts in summary.counts_by_check().items():
        icon = "✅" if counts["fail"] == 0 else "❌"
        lines.append(f"  {icon} {name}: {counts['pass']}/{counts['pass'] + counts['fail']}")
    for outcome in summary.outcomes:
        if not outcome.passed:
            lines.append(f"  ❌ {outcome.name} @ {outcome.subject}")
            lines.extend(f"      - {w}" for w in outcome.witnesses)
    lines.append(f"{'✅' if summary.ok else '❌'} 통과 {summary.passed}, 실패 {summary.failed}")
    return "\n".join(lines)
