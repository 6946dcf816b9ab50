"""Special graphs, sums and indecomposable components"""

from itertools import combinations
from typing import Any, Dict, FrozenSet, Iterable, List, NamedTuple, Sequence, Set, Tuple

import networkx as nx

from .errors import NoSlimVertex, NotAPartition, NotASum
from .graph import Edge, HoffmanGraph, induced_closure

SignedEdge = Tuple[int, int]


class SpecialGraphs(NamedTuple):
    """Signed graph on the slim vertices.

    ``minus_edges``/``plus_edges`` hold index pairs (i < j) whose reduced inner
    product is negative/positive.
    """

    vertices: Tuple[str, ...]
    minus_edges: FrozenSet[SignedEdge]
    plus_edges: FrozenSet[SignedEdge]

    def _graph(self, edges: Iterable[SignedEdge]) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from((self.vertices[i], self.vertices[j]) for i, j in edges)
        return g

    def minus_graph(self) -> nx.Graph:
        return self._graph(self.minus_edges)

    def plus_graph(self) -> nx.Graph:
        return self._graph(self.plus_edges)

    def graph(self) -> nx.Graph:
        return self._graph(self.minus_edges | self.plus_edges)

    def named(self, edges: Iterable[SignedEdge]) -> List[Edge]:
        return [(self.vertices[i], self.vertices[j]) for i, j in sorted(edges)]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vertices": list(self.vertices),
            "minus": sorted([list(sorted(e)) for e in self.named(self.minus_edges)]),
            "plus": sorted([list(sorted(e)) for e in self.named(self.plus_edges)]),
        }


def special_graphs(H: HoffmanGraph) -> SpecialGraphs:
    minus: Set[SignedEdge] = set()
    plus: Set[SignedEdge] = set()
    for i, j in combinations(range(H.slim_count), 2):
        value = int(j in H.slim_adj[i]) - H.common_fat_count(i, j)
        if value < 0:
            minus.add((i, j))
        elif value > 0:
            plus.add((i, j))
    return SpecialGraphs(H.slim_names, frozenset(minus), frozenset(plus))


def is_sum(H: HoffmanGraph, part1: Iterable[str], part2: Iterable[str]) -> bool:
    """Whether H is the sum of the closures of two parts of its slim vertices"""
    a, b = set(part1), set(part2)
    if not a or not b or a & b or a | b != set(H.slim_names):
        raise NotAPartition("the two parts must be nonempty, disjoint and cover all slim vertices")
    special = special_graphs(H)
    index_a = {H.slim_index(name) for name in a}
    return not any(
        (i in index_a) != (j in index_a) for i, j in special.minus_edges | special.plus_edges
    )


def indecomposable_components(H: HoffmanGraph) -> List[HoffmanGraph]:
    """Closures of the connected components of the special graph, by least slim index"""
    if H.slim_count == 0:
        raise NoSlimVertex("the graph has no slim vertex")
    g = special_graphs(H).graph()
    position = {name: i for i, name in enumerate(H.slim_names)}
    parts = sorted(
        (sorted(c, key=position.__getitem__) for c in nx.connected_components(g)),
        key=lambda c: position[c[0]],
    )
    return [induced_closure(H, part) for part in parts]


def hoffman_sum(parts: Sequence[HoffmanGraph]) -> HoffmanGraph:
    """Glue graphs into their sum.

    Slim names must be disjoint; fat vertices with equal names are identified.
    Two slim vertices from different parts are joined exactly when they share
    a fat vertex, which makes every cross inner product vanish.
    """
    slim: List[str] = []
    fat: List[str] = []
    fat_pos: Dict[str, int] = {}
    owner: List[int] = []
    slim_adj: List[Set[int]] = []
    slim_fat: List[Set[int]] = []

    for k, part in enumerate(parts):
        offset = len(slim)
        for name in part.fat_names:
            if name not in fat_pos:
                fat_pos[name] = len(fat)
                fat.append(name)
        for i, name in enumerate(part.slim_names):
            if name in slim or name in fat_pos:
                raise NotASum(f"slim vertex '{name}' occurs twice", [name])
            slim.append(name)
            owner.append(k)
            slim_adj.append({offset + j for j in part.slim_adj[i]})
            slim_fat.append({fat_pos[part.fat_names[f]] for f in part.slim_fat[i]})
    clash = set(slim) & set(fat)
    if clash:
        raise NotASum(f"names used for both slim and fat vertices: {sorted(clash)}", clash)

    for i, j in combinations(range(len(slim)), 2):
        if owner[i] == owner[j]:
            continue
        shared = len(slim_fat[i] & slim_fat[j])
        if shared > 1:
            raise NotASum(
                f"'{slim[i]}' and '{slim[j]}' would share {shared} fat vertices",
                [slim[i], slim[j]],
            )
        if shared == 1:
            slim_adj[i].add(j)
            slim_adj[j].add(i)

    return HoffmanGraph(
        tuple(slim),
        tuple(fat),
        tuple(frozenset(s) for s in slim_adj),
        tuple(frozenset(s) for s in slim_fat),
    )
