"""
Dynkin diagram 그래프 유틸리티 (networkx 기반).

- 노드: 1-based 단순근 번호, 속성 ``length`` = ⟨α_i, α_i⟩
- 간선: a_ij ≠ 0 인 쌍, 속성 ``bond`` = a_ij·a_ji (1, 2, 3)

연결 성분 분해, 성분의 Cartan 타입 식별(사슬/분기/화살표 위치),
diagram automorphism 궤도 계산에 사용됩니다.
"""

from __future__ import annotations

import logging
from typing import Dict, FrozenSet, Iterable, List, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .rootsys import RootSystem

logger = logging.getLogger(__name__)

# 분기 노드의 팔 길이 (오름차순) → 단순 끈 타입
_BRANCH_TYPES = {(1, 2, 2): ("E", 6), (1, 2, 3): ("E", 7), (1, 2, 4): ("E", 8)}


def dynkin_graph(rs: RootSystem) -> nx.Graph:
    graph = nx.Graph()
    for i in range(1, rs.rank + 1):
        graph.add_node(i, length=rs.root_length_sq(i))
    for i in range(rs.rank):
        for j in range(i + 1, rs.rank):
            if rs.cartan[i][j] != 0:
                graph.add_edge(i + 1, j + 1, bond=rs.cartan[i][j] * rs.cartan[j][i])
    return graph


def unpainted_components(rs: RootSystem, painted: int) -> List[Tuple[int, ...]]:
    """painted node 를 제거한 부분 diagram 의 연결 성분 (최소 노드 순)."""
    graph = dynkin_graph(rs)
    graph.remove_node(painted)
    components = [tuple(sorted(c)) for c in nx.connected_components(graph)]
    return sorted(components, key=lambda c: c[0])


def identify_component(graph: nx.Graph, nodes: Iterable[int]) -> Tuple[str, int]:
    """연결된 부분 diagram 의 Cartan 타입 (family, rank) 를 판정합니다."""
    sub = graph.subgraph(nodes)
    n = sub.number_of_nodes()
    if n == 1:
        return ("A", 1)

    bonds = {(u, v): data["bond"] for u, v, data in sub.edges(data=True)}
    top_bond = max(bonds.values())
    if top_bond == 3:
        return ("G", 2)

    if top_bond == 2:
        (u, v), = [edge for edge, bond in bonds.items() if bond == 2]
        leaves = [w for w in (u, v) if sub.degree(w) == 1]
        if not leaves:
            return ("F", 4)
        if len(leaves) == 2:
            return ("B", 2)
        leaf, other = leaves[0], (v if leaves[0] == u else u)
        # 끝 노드가 짧은 루트면 B, 긴 루트면 C
        if sub.nodes[leaf]["length"] < sub.nodes[other]["length"]:
            return ("B", n)
        return ("C", n)

    degrees = dict(sub.degree())
    branch = [w for w, deg in degrees.items() if deg == 3]
    if not branch:
        return ("A", n)
    center = branch[0]
    rest = sub.copy()
    rest.remove_node(center)
    arms = tuple(sorted(len(c) for c in nx.connected_components(rest)))
    if arms[0] == 1 and arms[1] == 1:
        return ("D", n)
    if arms in _BRANCH_TYPES:
        return _BRANCH_TYPES[arms]
    raise ValueError(f"식별할 수 없는 diagram 성분: 노드 {sorted(nodes)}, 팔 {arms}")


def group_name(family: str, n: int) -> str:
    """컴팩트 단순 Lie 군 이름 (A_n → SU(n+1) 등)."""
    if family == "A":
        return f"SU({n + 1})"
    if family == "B":
        return f"SO({2 * n + 1})"
    if family == "C":
        return f"Sp({n})"
    if family == "D":
        return f"SO({2 * n})"
    return f"{family}{n}"


def automorphism_orbits(rs: RootSystem) -> Dict[int, FrozenSet[int]]:
    """diagram automorphism (루트 길이와 bond 보존) 에 대한 노드 궤도."""
    graph = dynkin_graph(rs)
    matcher = GraphMatcher(
        graph,
        graph,
        node_match=lambda a, b: a["length"] == b["length"],
        edge_match=lambda a, b: a["bond"] == b["bond"],
    )
    orbits: Dict[int, set] = {node: {node} for node in graph.nodes}
    for mapping in matcher.isomorphisms_iter():
        for src, dst in mapping.items():
            orbits[src].add(dst)
    logger.debug("%s automorphism orbits: %s", rs.lie_type, orbits)
    return {node: frozenset(orbit) for node, orbit in orbits.items()}
