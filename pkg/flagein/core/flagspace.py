"""
Painted Dynkin diagram → two-summand flag manifold G/K.

painted node α_{i0} 의 mark 가 2 인지 확인하고, 양의 루트를 α_{i0} 계수로
분할한 grading R⁺(α_{i0}, n) (n = 0, 1, 2), 부분 공간 차원 d_n = 2|R⁺(α_{i0}, n)|,
K 의 구조 (반단순 부분 × U(1)) 를 계산합니다.

Usage:
    rs = build_root_system(LieType("G", 2))
    ts = validate(PaintedDiagram(rs, 1))
    ts.d1, ts.d2, ts.k_description    # 8, 2, "U(2)"
    enumerate_spaces(LieType("E", 7))  # 3 spaces
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .dynkin import automorphism_orbits, dynkin_graph, group_name, identify_component, unpainted_components
from .errors import BadLevel, HeightNotTwo, InvalidNode
from .rootsys import RootSystem, build_root_system
from .schema import LieType, RootVec

logger = logging.getLogger(__name__)

# (family, rank, node) → (d1, d2): 예외형 Lie 타입의 차원표
EXCEPTIONAL_DIMS: Dict[Tuple[str, int, int], Tuple[int, int]] = {
    ("G", 2, 1): (8, 2),
    ("F", 4, 4): (16, 14),
    ("F", 4, 1): (28, 2),
    ("E", 6, 2): (40, 10),
    ("E", 6, 4): (40, 10),
    ("E", 6, 6): (40, 2),
    ("E", 7, 5): (64, 20),
    ("E", 7, 1): (64, 2),
    ("E", 7, 7): (70, 14),
    ("E", 8, 7): (112, 2),
    ("E", 8, 1): (128, 28),
}


@dataclass(frozen=True)
class PaintedDiagram:
    """하나의 단순근 α_{i0} 를 검게 칠한 Dynkin diagram."""
    root_system: RootSystem
    painted_index: int

    def __post_init__(self):
        rank = self.root_system.rank
        if not isinstance(self.painted_index, int) or not 1 <= self.painted_index <= rank:
            raise InvalidNode(self.painted_index, rank)

    @property
    def mark(self) -> int:
        return self.root_system.marks[self.painted_index - 1]


@dataclass
class TwoSummandSpace:
    """isotropy 표현이 m = m1 ⊕ m2 로 분해되는 flag manifold.

    Attributes:
        diagram: painted diagram.
        grading: n ↦ α_{i0} 계수가 n 인 양의 루트 (n = 0 은 R_K⁺).
        d1, d2: 실차원 dim m1, dim m2.
        k_description: K 의 구조 라벨 (예: "SU(2)×SU(5)×U(1)").
        orbit: painted node 의 diagram automorphism 궤도.
    """
    diagram: PaintedDiagram
    grading: Dict[int, Tuple[RootVec, ...]]
    d1: int
    d2: int
    k_description: str
    orbit: Tuple[int, ...] = field(default_factory=tuple)

    @property
    def root_system(self) -> RootSystem:
        return self.diagram.root_system

    @property
    def lie_type(self) -> LieType:
        return self.diagram.root_system.lie_type

    @property
    def node(self) -> int:
        return self.diagram.painted_index

    @property
    def subject(self) -> str:
        """검증/보고용 식별자 (예: 'E6:2')."""
        return f"{self.lie_type}:{self.node}"

    @property
    def family_label(self) -> str:
        return family_label(self)


def validate(pd: PaintedDiagram) -> TwoSummandSpace:
    """mark = 2 인지 확인하고 grading, 차원, K 라벨을 계산합니다."""
    rs = pd.root_system
    node = pd.painted_index
    if pd.mark != 2:
        raise HeightNotTwo(pd.mark, node, hermitian_symmetric_name(rs.lie_type, node))

    grading: Dict[int, List[RootVec]] = {0: [], 1: [], 2: []}
    for root in rs.positive_roots:
        grading[root[node - 1]].append(root)

    space = TwoSummandSpace(
        diagram=pd,
        grading={n: tuple(roots) for n, roots in grading.items()},
        d1=2 * len(grading[1]),
        d2=2 * len(grading[2]),
        k_description=k_label(rs, node),
    )
    logger.debug("validated %s: d1=%d, d2=%d, K=%s", space.subject, space.d1, space.d2, space.k_description)
    return space


def grading_class(ts: TwoSummandSpace, n: int) -> Tuple[RootVec, ...]:
    if n not in (0, 1, 2):
        raise BadLevel(n)
    return ts.grading[n]


def enumerate_spaces(t: LieType, dedup: bool = False) -> List[TwoSummandSpace]:
    """mark 2 인 노드마다 하나의 공간. dedup 이면 automorphism 궤도당 최소 노드만."""
    rs = build_root_system(t)
    orbits = automorphism_orbits(rs)
    spaces = []
    for node in range(1, rs.rank + 1):
        if rs.marks[node - 1] != 2:
            continue
        orbit = tuple(sorted(orbits[node]))
        if dedup and node != orbit[0]:
            continue
        space = validate(PaintedDiagram(rs, node))
        space.orbit = orbit
        spaces.append(space)
    return spaces


def k_label(rs: RootSystem, node: int) -> str:
    """painted node 를 제거한 부분 diagram 의 연결 성분으로부터 K 의 라벨을 만듭니다.

    예외형 F, E 는 성분별 군 이름 × U(1). 고전형과 G2 는 노드 1 쪽 A 사슬
    (G2 는 남은 A1 성분) 이 U(1) 과 합쳐져 U(p) 가 되고, 나머지 꼬리 성분들은
    원래 family 의 rank m 군 하나 (B: SO(2m+1), C: Sp(m), D: SO(2m), A: SU(m+1)) 로 묶입니다.
    """
    family = rs.lie_type.family
    graph = dynkin_graph(rs)
    components = unpainted_components(rs, node)
    if family in ("E", "F"):
        factors = [group_name(*identify_component(graph, nodes)) for nodes in components]
        return "×".join(factors + ["U(1)"])

    head = [nodes for nodes in components if family == "G" or 1 in nodes]
    for nodes in head:
        component_family, _ = identify_component(graph, nodes)
        if component_family != "A":
            raise ValueError(f"U(1) 와 합쳐질 성분이 A 타입이 아닙니다: {rs.lie_type} 노드 {nodes}")
    factors = [f"U({sum(len(nodes) for nodes in head) + 1})"]
    tail_rank = sum(len(nodes) for nodes in components if nodes not in head)
    if tail_rank:
        factors.append(group_name(family, tail_rank))
    return "×".join(factors)


def family_label(ts: TwoSummandSpace) -> str:
    """Table 형식 이름: 고전형 'C(3,2)', 예외형 'E6/SU(2)×SU(5)×U(1)'."""
    lie_type = ts.lie_type
    if lie_type.is_classical:
        return f"{lie_type.family}({lie_type.rank},{lie_type.rank - ts.node})"
    return f"{lie_type}/{ts.k_description}"


def hermitian_symmetric_name(lie_type: LieType, node: int) -> Optional[str]:
    """mark 1 노드가 결정하는 Hermitian symmetric space 이름 (알려진 경우)."""
    family, ell = lie_type.family, lie_type.rank
    if family == "A" and 1 <= node <= ell:
        return f"SU({ell + 1})/S(U({node})×U({ell + 1 - node}))"
    if family == "B" and node == 1:
        return f"SO({2 * ell + 1})/SO(2)×SO({2 * ell - 1})"
    if family == "C" and node == ell:
        return f"Sp({ell})/U({ell})"
    if family == "D":
        if node == 1:
            return f"SO({2 * ell})/SO(2)×SO({2 * ell - 2})"
        if node in (ell - 1, ell):
            return f"SO({2 * ell})/U({ell})"
    if family == "E" and ell == 6 and node in (1, 5):
        return "E6/SO(10)×U(1)"
    if family == "E" and ell == 7 and node == 6:
        return "E7/E6×U(1)"
    return None


def closed_form_dims(lie_type: LieType, node: int) -> Optional[Tuple[int, int]]:
    """차원표의 닫힌 형태 (d1, d2). 항목이 없으면 None."""
    family, ell, p = lie_type.family, lie_type.rank, node
    if family == "B" and 2 <= p <= ell:
        return (2 * p * (2 * (ell - p) + 1), p * (p - 1))
    if family == "C" and 1 <= p <= ell - 1:
        return (4 * p * (ell - p), p * (p + 1))
    if family == "D" and 2 <= p <= ell - 2:
        return (4 * p * (ell - p), p * (p - 1))
    return EXCEPTIONAL_DIMS.get((family, ell, p))


def partition_violations(ts: TwoSummandSpace) -> List[str]:
    """grading 이 양의 루트의 분할인지, 각 class 가 α_{i0} 계수로 결정되는지 확인."""
    witnesses = []
    rs = ts.root_system
    i0 = ts.node - 1
    total = sum(len(roots) for roots in ts.grading.values())
    if total != len(rs.positive_roots):
        witnesses.append(f"Σ|grading[n]| = {total} ≠ |R⁺| = {len(rs.positive_roots)}")
    for n, roots in ts.grading.items():
        for root in roots:
            if root[i0] != n:
                witnesses.append(f"{root} 가 level {n} 에 있으나 계수는 {root[i0]}")
    if set(ts.grading) - {0, 1, 2}:
        witnesses.append(f"level ≥ 3 class 존재: {sorted(ts.grading)}")
    if ts.d1 != 2 * len(ts.grading[1]) or ts.d2 != 2 * len(ts.grading[2]):
        witnesses.append(f"d = ({ts.d1}, {ts.d2}) ≠ 2·|grading|")
    if ts.d1 <= 0 or ts.d2 <= 0:
        witnesses.append(f"d = ({ts.d1}, {ts.d2}) 가 양수가 아님")
    return witnesses


def bracket_grading_violations(ts: TwoSummandSpace) -> List[str]:
    """[m_n, m_m] 의 grading 규칙: α+β 는 level n+m (n+m ≥ 3 이면 루트가 아님), α−β 는 level |n−m|."""
    rs = ts.root_system
    i0 = ts.node - 1
    witnesses = []
    for n in (1, 2):
        for m in (1, 2):
            for alpha in ts.grading[n]:
                for beta in ts.grading[m]:
                    total = tuple(a + b for a, b in zip(alpha, beta))
                    if rs.is_root(total):
                        if n + m >= 3 or total[i0] != n + m:
                            witnesses.append(f"{alpha}+{beta} ∈ R (level {n}+{m})")
                    if alpha == beta:
                        continue
                    diff = tuple(a - b for a, b in zip(alpha, beta))
                    if rs.is_root(diff) and abs(diff[i0]) != abs(n - m):
                        witnesses.append(f"{alpha}−{beta} 의 level {diff[i0]} ≠ ±{abs(n - m)}")
    return witnesses
