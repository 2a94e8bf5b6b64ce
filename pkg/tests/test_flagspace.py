#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
painted diagram / two-summand 공간 테스트

시나리오 목록:
  S1. 예외형 차원표 (G2, F4, E6, E7, E8 의 10개 diagram)
  S2. 고전형 닫힌 형태 B(ℓ,m), C(ℓ,m), D(ℓ,m), ℓ ≤ 8
  S3. grading class 와 분할
  S4. mark ≠ 2 진단 (HeightNotTwo, Hermitian symmetric space 이름)
  S5. K 라벨과 family 라벨
  S6. 열거 개수와 automorphism dedup
  S7. bracket grading 전수 검사
  S8. 성분 유도 K 라벨: dim K = dim G − d1 − d2
"""

import os
import re
import sys

import pytest

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, PROJECT_ROOT)

from flagein.core.dynkin import automorphism_orbits, dynkin_graph, identify_component
from flagein.core.errors import BadLevel, HeightNotTwo, InvalidNode
from flagein.core.flagspace import (
    PaintedDiagram,
    bracket_grading_violations,
    closed_form_dims,
    enumerate_spaces,
    grading_class,
    hermitian_symmetric_name,
    k_label,
    partition_violations,
    validate,
)
from flagein.core.rootsys import build_root_system
from flagein.core.schema import LieType
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
        print(f"\n📊 flag space 테스트: {len(cls._results) - failed}/{len(cls._results)} 통과")
        return 1 if failed else 0


T = _T


def _space(family: str, rank: int, node: int):
    return validate(PaintedDiagram(build_root_system(LieType(family, rank)), node))


EXCEPTIONAL_ROWS = [
    ("G", 2, 1, (8, 2)),
    ("F", 4, 4, (16, 14)),
    ("F", 4, 1, (28, 2)),
    ("E", 6, 2, (40, 10)),
    ("E", 6, 6, (40, 2)),
    ("E", 7, 5, (64, 20)),
    ("E", 7, 1, (64, 2)),
    ("E", 7, 7, (70, 14)),
    ("E", 8, 7, (112, 2)),
    ("E", 8, 1, (128, 28)),
]


def test_s1_exceptional_dimensions():
    T.scenario("S1. 예외형 차원표")
    for family, rank, node, dims in EXCEPTIONAL_ROWS:
        ts = _space(family, rank, node)
        T.check(f"{family}{rank} α{node} → {dims}", (ts.d1, ts.d2) == dims, f"({ts.d1}, {ts.d2})")
        T.check(f"{family}{rank} α{node} 차원표 항목", closed_form_dims(ts.lie_type, node) == dims)


def test_s2_classical_closed_forms():
    T.scenario("S2. 고전형 닫힌 형태")
    formulas = {
        "B": lambda ell, p: (2 * p * (2 * (ell - p) + 1), p * (p - 1)),
        "C": lambda ell, p: (4 * p * (ell - p), p * (p + 1)),
        "D": lambda ell, p: (4 * p * (ell - p), p * (p - 1)),
    }
    min_rank = {"B": 2, "C": 2, "D": 4}
    total = 0
    for family, formula in formulas.items():
        for ell in range(min_rank[family], 9):
            for ts in enumerate_spaces(LieType(family, ell)):
                total += 1
                expected = formula(ell, ts.node)
                T.check(f"{family}{ell} p={ts.node} → {expected}", (ts.d1, ts.d2) == expected, f"({ts.d1}, {ts.d2})")
    T.check("고전형 공간 수 (B 28 + C 28 + D 15)", total == 71, str(total))

    # mark 2 노드 범위: B 2..ℓ, C 1..ℓ−1, D 2..ℓ−2
    T.check("B5 노드", [ts.node for ts in enumerate_spaces(LieType("B", 5))] == [2, 3, 4, 5])
    T.check("C5 노드", [ts.node for ts in enumerate_spaces(LieType("C", 5))] == [1, 2, 3, 4])
    T.check("D7 노드", [ts.node for ts in enumerate_spaces(LieType("D", 7))] == [2, 3, 4, 5])


def test_s3_grading_classes():
    T.scenario("S3. grading class")
    ts = _space("G", 2, 1)
    T.check("G2 level 2 = {2α1+3α2}", grading_class(ts, 2) == ((2, 3),))
    T.check(
        "G2 level 1 = 4 roots",
        set(grading_class(ts, 1)) == {(1, 0), (1, 1), (1, 2), (1, 3)},
        str(grading_class(ts, 1)),
    )
    T.check("G2 level 0 = R_K⁺ = {α2}", grading_class(ts, 0) == ((0, 1),))

    with pytest.raises(BadLevel):
        grading_class(ts, 3)
    with pytest.raises(BadLevel):
        grading_class(ts, -1)
    T.check("level ∉ {0,1,2} → BadLevel", True)

    with pytest.raises(InvalidNode):
        PaintedDiagram(build_root_system(LieType("G", 2)), 3)
    T.check("범위 밖 노드 → InvalidNode", True)

    for ts in collect_spaces(8):
        T.check(f"{ts.subject} 분할", not partition_violations(ts))


def test_s4_height_not_two():
    T.scenario("S4. mark ≠ 2 진단")
    with pytest.raises(HeightNotTwo) as excinfo:
        _space("C", 6, 6)
    T.check("C6 α6: mark 1", excinfo.value.mark == 1)
    T.check("C6 α6: Sp(6)/U(6) 안내", "Sp(6)/U(6)" in str(excinfo.value), str(excinfo.value))

    for ell in range(1, 9):
        for node in range(1, ell + 1):
            with pytest.raises(HeightNotTwo):
                _space("A", ell, node)
    T.check("A_ℓ 모든 노드 거부", True)

    with pytest.raises(HeightNotTwo) as excinfo:
        _space("E", 8, 4)
    T.check("E8 α4: mark 5", excinfo.value.mark == 5 and excinfo.value.symmetric_space is None)

    T.check("E7 α6 → E7/E6×U(1)", hermitian_symmetric_name(LieType("E", 7), 6) == "E7/E6×U(1)")
    T.check("E6 α1 → E6/SO(10)×U(1)", hermitian_symmetric_name(LieType("E", 6), 1) == "E6/SO(10)×U(1)")
    T.check("D5 α5 → SO(10)/U(5)", hermitian_symmetric_name(LieType("D", 5), 5) == "SO(10)/U(5)")
    T.check("B3 α1 → SO(7)/SO(2)×SO(5)", hermitian_symmetric_name(LieType("B", 3), 1) == "SO(7)/SO(2)×SO(5)")
    T.check("A3 α2 → SU(4)/S(U(2)×U(2))", hermitian_symmetric_name(LieType("A", 3), 2) == "SU(4)/S(U(2)×U(2))")


def test_s5_labels():
    T.scenario("S5. K 라벨과 family 라벨")
    labels = {
        ("G", 2, 1): "U(2)",
        ("F", 4, 4): "SO(7)×U(1)",
        ("F", 4, 1): "Sp(3)×U(1)",
        ("E", 6, 2): "SU(2)×SU(5)×U(1)",
        ("E", 6, 4): "SU(5)×SU(2)×U(1)",
        ("E", 6, 6): "SU(6)×U(1)",
        ("E", 7, 1): "SO(12)×U(1)",
        ("E", 7, 5): "SO(10)×SU(2)×U(1)",
        ("E", 7, 7): "SU(7)×U(1)",
        ("E", 8, 1): "SO(14)×U(1)",
        ("E", 8, 7): "E7×U(1)",
        ("C", 3, 1): "U(1)×Sp(2)",
        ("B", 4, 4): "U(4)",
        ("B", 5, 2): "U(2)×SO(7)",
        ("D", 6, 3): "U(3)×SO(6)",
        ("D", 4, 2): "U(2)×SO(4)",
    }
    for (family, rank, node), label in labels.items():
        ts = _space(family, rank, node)
        T.check(f"{family}{rank} α{node} K = {label}", ts.k_description == label, ts.k_description)

    T.check("C3 α1 → C(3,2)", _space("C", 3, 1).family_label == "C(3,2)")
    T.check("B5 α2 → B(5,3)", _space("B", 5, 2).family_label == "B(5,3)")
    T.check("E6 α2 → E6/SU(2)×SU(5)×U(1)", _space("E", 6, 2).family_label == "E6/SU(2)×SU(5)×U(1)")

    for family, rank in (("E", 8), ("E", 7), ("E", 6), ("F", 4), ("G", 2), ("D", 5), ("B", 3), ("C", 3), ("A", 4)):
        rs = build_root_system(LieType(family, rank))
        found = identify_component(dynkin_graph(rs), range(1, rank + 1))
        T.check(f"전체 diagram 식별 {family}{rank}", found == (family, rank), str(found))


def test_s6_enumeration_counts():
    T.scenario("S6. 열거 개수 / dedup")
    expected = {("E", 6): 2, ("E", 7): 3, ("E", 8): 2, ("F", 4): 2, ("G", 2): 1}
    for (family, rank), count in expected.items():
        spaces = enumerate_spaces(LieType(family, rank), dedup=True)
        T.check(f"{family}{rank} dedup → {count}", len(spaces) == count, str(len(spaces)))
    for ell in range(1, 9):
        T.check(f"A{ell} → 0", enumerate_spaces(LieType("A", ell)) == [])

    e6 = enumerate_spaces(LieType("E", 6))
    T.check("E6 dedup 없이 → 노드 2, 4, 6", [ts.node for ts in e6] == [2, 4, 6])
    T.check("E6 α2 궤도 {2, 4}", e6[0].orbit == (2, 4))

    e8 = enumerate_spaces(LieType("E", 8))
    T.check(
        "E8 K 라벨",
        [ts.k_description for ts in e8] == ["SO(14)×U(1)", "E7×U(1)"],
        str([ts.k_description for ts in e8]),
    )

    orbits = automorphism_orbits(build_root_system(LieType("D", 4)))
    T.check("D4 triality 궤도 {1, 3, 4}", orbits[1] == frozenset({1, 3, 4}) and orbits[2] == frozenset({2}))
    orbits = automorphism_orbits(build_root_system(LieType("F", 4)))
    T.check("F4 automorphism 없음 (루트 길이 보존)", all(len(o) == 1 for o in orbits.values()))


def test_s7_bracket_grading():
    T.scenario("S7. bracket grading")
    spaces = collect_spaces(8)
    T.check("검사 공간 82개", len(spaces) == 82, str(len(spaces)))
    for ts in spaces:
        violations = bracket_grading_violations(ts)
        T.check(f"{ts.subject} 위반 0", not violations, str(violations[:2]))


_EXCEPTIONAL_GROUP_DIMS = {"G2": 14, "F4": 52, "E6": 78, "E7": 133, "E8": 248}


def _group_dim(name: str) -> int:
    match = re.fullmatch(r"(U|SU|SO|Sp)\((\d+)\)", name)
    if match is None:
        return _EXCEPTIONAL_GROUP_DIMS[name]
    kind, n = match.group(1), int(match.group(2))
    return {"U": n * n, "SU": n * n - 1, "SO": n * (n - 1) // 2, "Sp": n * (2 * n + 1)}[kind]


def test_s8_labels_from_components():
    T.scenario("S8. 부분 diagram 성분에서 유도한 K 라벨")
    for ts in collect_spaces(8):
        rs = ts.root_system
        dim_g = rs.rank + 2 * len(rs.positive_roots)
        dim_k = sum(_group_dim(factor) for factor in ts.k_description.split("×"))
        T.check(f"{ts.subject} dim {ts.k_description} = dim G − d1 − d2", dim_k == dim_g - ts.d1 - ts.d2, str(dim_k))

    # mark 1 노드도 같은 규칙으로 라벨이 정해짐
    for (family, rank, node), label in {
        ("A", 4, 2): "U(2)×SU(3)",
        ("A", 4, 1): "U(1)×SU(4)",
        ("D", 5, 5): "U(5)",
        ("D", 5, 4): "U(5)",
        ("D", 4, 1): "U(1)×SO(6)",
        ("C", 4, 4): "U(4)",
        ("E", 6, 1): "SO(10)×U(1)",
    }.items():
        got = k_label(build_root_system(LieType(family, rank)), node)
        T.check(f"{family}{rank} α{node} → {label}", got == label, got)


# ==================== 메인 ====================

if __name__ == "__main__":
    test_s1_exceptional_dimensions()
    test_s2_classical_closed_forms()
    test_s3_grading_classes()
    test_s4_height_not_two()
    test_s5_labels()
    test_s6_enumeration_counts()
    test_s7_bracket_grading()
    test_s8_labels_from_components()
    sys.exit(T.summary())
