"""Recognition of Dynkin shapes A_m, D_m and their extended forms"""

from typing import Any, Dict, List, NamedTuple, Optional

import networkx as nx

from .errors import Disconnected, EmptyGraph

A = "A"
D = "D"
A_TILDE = "ATilde"
D_TILDE = "DTilde"
OTHER = "Other"


class DynkinShape(NamedTuple):
    """Shape of a connected graph.

    A(m) and D(m) have m vertices; ATilde(m) and DTilde(m) have m + 1.
    """

    kind: str
    index: Optional[int] = None

    @property
    def label(self) -> str:
        return self.kind if self.index is None else f"{self.kind}({self.index})"

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "index": self.index}


def _arm_lengths(g: nx.Graph, center: Any) -> List[int]:
    """Vertex counts of the paths hanging off ``center`` in a tree"""
    lengths = []
    for start in g.neighbors(center):
        previous, current, length = center, start, 1
        while g.degree(current) == 2:
            previous, current = current, next(v for v in g.neighbors(current) if v != previous)
            length += 1
        if g.degree(current) != 1:
            return []
        lengths.append(length)
    return sorted(lengths)


def recognize_shape(g: nx.Graph) -> DynkinShape:
    n = g.number_of_nodes()
    if n == 0:
        raise EmptyGraph("the graph has no vertices")
    if not nx.is_connected(g):
        raise Disconnected("the graph is not connected")
    if n == 1:
        return DynkinShape(A, 1)

    degrees = dict(g.degree())
    top = max(degrees.values())
    if not nx.is_tree(g):
        if top == 2 and g.number_of_edges() == n:
            return DynkinShape(A_TILDE, n - 1)
        return DynkinShape(OTHER)
    if top <= 2:
        return DynkinShape(A, n)
    if top == 4:
        return DynkinShape(D_TILDE, 4) if n == 5 else DynkinShape(OTHER)
    if top > 4:
        return DynkinShape(OTHER)

    branch = [v for v, d in degrees.items() if d == 3]
    if len(branch) == 1:
        arms = _arm_lengths(g, branch[0])
        if len(arms) == 3 and arms[0] == arms[1] == 1:
            return DynkinShape(D, n)
        return DynkinShape(OTHER)
    if len(branch) == 2:
        leaves = [sum(1 for u in g.neighbors(v) if degrees[u] == 1) for v in branch]
        if leaves == [2, 2]:
            return DynkinShape(D_TILDE, n - 1)
    return DynkinShape(OTHER)
