"""Hoffman graph data model, validation, subgraphs, isomorphism and .hg I/O"""

import logging
import re
from collections import Counter
from pathlib import Path
from typing import (
    Any,
    Dict,
    FrozenSet,
    Iterable,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Set,
    Tuple,
    Union,
)

import networkx as nx
import numpy as np
from typing_extensions import TypeAlias

from .errors import (
    DuplicateVertexName,
    EmptyAttachment,
    FatFatEdge,
    FatWithoutSlimNeighbor,
    FileNotFound,
    HgSyntaxError,
    SelfLoop,
    UnknownVertex,
)

logger = logging.getLogger(__name__)

NAME_PATTERN = re.compile(r"^[A-Za-z0-9_.-]+$")
BLOCK_SEPARATOR = "---"

Edge: TypeAlias = Tuple[str, str]
Neighborhoods: TypeAlias = Tuple[FrozenSet[int], ...]


class GraphDescription(NamedTuple):
    """Raw, unvalidated graph description"""

    slim: Tuple[str, ...]
    fat: Tuple[str, ...]
    edges: Tuple[Edge, ...]


class HoffmanGraph(NamedTuple):
    """Immutable Hoffman graph.

    Vertices are indexed by their position in ``slim_names`` and ``fat_names``.
    ``slim_adj[i]`` holds the slim neighbors of slim vertex ``i`` and
    ``slim_fat[i]`` its fat neighbors. Fat vertices only ever meet slim
    vertices, so there is nowhere to store a fat-fat edge.
    """

    slim_names: Tuple[str, ...]
    fat_names: Tuple[str, ...]
    slim_adj: Neighborhoods
    slim_fat: Neighborhoods

    @property
    def slim_count(self) -> int:
        return len(self.slim_names)

    @property
    def fat_count(self) -> int:
        return len(self.fat_names)

    def slim_index(self, name: str) -> int:
        try:
            return self.slim_names.index(name)
        except ValueError:
            raise UnknownVertex(f"'{name}' is not a slim vertex", [name]) from None

    def fat_index(self, name: str) -> int:
        return self.fat_names.index(name)

    def fat_neighborhood(self, f: int) -> FrozenSet[int]:
        """Slim neighbors of fat vertex ``f``"""
        return frozenset(i for i, fats in enumerate(self.slim_fat) if f in fats)

    def fat_neighborhoods(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(self.fat_neighborhood(f) for f in range(self.fat_count))

    def common_fat_count(self, i: int, j: int) -> int:
        """|N^f(x, y)| for slim indices ``i`` and ``j``"""
        return len(self.slim_fat[i] & self.slim_fat[j])

    def slim_adjacency_matrix(self) -> np.ndarray:
        n = self.slim_count
        a = np.zeros((n, n), dtype=np.int64)
        for i, neighbors in enumerate(self.slim_adj):
            for j in neighbors:
                a[i, j] = 1
        return a

    def incidence_matrix(self) -> np.ndarray:
        """Slim by fat 0/1 incidence matrix C"""
        c = np.zeros((self.slim_count, self.fat_count), dtype=np.int64)
        for i, fats in enumerate(self.slim_fat):
            for f in fats:
                c[i, f] = 1
        return c

    def edges(self) -> List[Edge]:
        """All edges as name pairs, slim-slim first, in index order"""
        result: List[Edge] = []
        for i, neighbors in enumerate(self.slim_adj):
            for j in sorted(neighbors):
                if i < j:
                    result.append((self.slim_names[i], self.slim_names[j]))
        for i, fats in enumerate(self.slim_fat):
            for f in sorted(fats):
                result.append((self.slim_names[i], self.fat_names[f]))
        return result

    def describe(self) -> GraphDescription:
        return GraphDescription(self.slim_names, self.fat_names, tuple(self.edges()))


class GraphPredicateReport(NamedTuple):
    """Basic labels of a Hoffman graph"""

    is_fat: bool
    is_slim: bool
    slim_count: int
    fat_count: int

    def to_dict(self) -> Dict[str, Any]:
        return dict(self._asdict())


RawGraph: TypeAlias = Union[GraphDescription, Mapping[str, Any]]


def _from_parts(
    slim: Sequence[str],
    fat: Sequence[str],
    slim_adj: Iterable[Iterable[int]],
    slim_fat: Iterable[Iterable[int]],
) -> HoffmanGraph:
    return HoffmanGraph(
        tuple(slim),
        tuple(fat),
        tuple(frozenset(s) for s in slim_adj),
        tuple(frozenset(s) for s in slim_fat),
    )


def validate(raw: RawGraph) -> HoffmanGraph:
    """Check a raw description and build the graph, keeping input order"""
    if isinstance(raw, GraphDescription):
        slim, fat, edges = list(raw.slim), list(raw.fat), list(raw.edges)
    else:
        slim = list(raw.get("slim", ()))
        fat = list(raw.get("fat", ()))
        edges = [tuple(e) for e in raw.get("edges", ())]

    seen: Set[str] = set()
    for name in slim + fat:
        if name in seen:
            raise DuplicateVertexName(f"vertex '{name}' declared twice", [name])
        seen.add(name)

    slim_pos = {name: i for i, name in enumerate(slim)}
    fat_pos = {name: i for i, name in enumerate(fat)}
    slim_adj: List[Set[int]] = [set() for _ in slim]
    slim_fat: List[Set[int]] = [set() for _ in slim]

    for edge in edges:
        if len(edge) != 2:
            raise UnknownVertex(f"edge {edge!r} does not have two endpoints", edge)
        a, b = edge
        if a == b:
            raise SelfLoop(f"self-loop at '{a}'", [a])
        for name in (a, b):
            if name not in seen:
                raise UnknownVertex(f"edge names undeclared vertex '{name}'", [name])
        if a in fat_pos and b in fat_pos:
            raise FatFatEdge(f"fat vertices '{a}' and '{b}' are adjacent", [a, b])
        if a in slim_pos and b in slim_pos:
            i, j = slim_pos[a], slim_pos[b]
            slim_adj[i].add(j)
            slim_adj[j].add(i)
        elif a in slim_pos:
            slim_fat[slim_pos[a]].add(fat_pos[b])
        else:
            slim_fat[slim_pos[b]].add(fat_pos[a])

    covered = set().union(*slim_fat) if slim_fat else set()
    lonely = [fat[f] for f in range(len(fat)) if f not in covered]
    if lonely:
        raise FatWithoutSlimNeighbor(
            f"fat vertex '{lonely[0]}' has no slim neighbor", lonely
        )
    return _from_parts(slim, fat, slim_adj, slim_fat)


def _slim_indices(H: HoffmanGraph, names: Iterable[str]) -> List[int]:
    return sorted({H.slim_index(name) for name in names})


def induced_closure(H: HoffmanGraph, names: Iterable[str]) -> HoffmanGraph:
    """Subgraph induced on the given slim vertices and all their fat neighbors"""
    keep = _slim_indices(H, names)
    fats = sorted(set().union(*(H.slim_fat[i] for i in keep))) if keep else []
    slim_map = {old: new for new, old in enumerate(keep)}
    fat_map = {old: new for new, old in enumerate(fats)}
    return _from_parts(
        [H.slim_names[i] for i in keep],
        [H.fat_names[f] for f in fats],
        ([slim_map[j] for j in H.slim_adj[i] if j in slim_map] for i in keep),
        ([fat_map[f] for f in H.slim_fat[i]] for i in keep),
    )


def delete_slim(H: HoffmanGraph, names: Iterable[str]) -> HoffmanGraph:
    """Remove slim vertices; fat vertices left without neighbors go too"""
    drop = set(_slim_indices(H, names))
    return induced_closure(H, [n for i, n in enumerate(H.slim_names) if i not in drop])


def fresh_fat_name(H: HoffmanGraph) -> str:
    """First unused name f<k> with k starting at the fat count"""
    used = set(H.slim_names) | set(H.fat_names)
    k = H.fat_count
    while f"f{k}" in used:
        k += 1
    return f"f{k}"


def attach_fat(H: HoffmanGraph, names: Iterable[str]) -> HoffmanGraph:
    """Return H with one new fat vertex adjacent exactly to ``names``"""
    return attach_fat_indices(H, frozenset(_slim_indices(H, names)))


def attach_fat_indices(H: HoffmanGraph, targets: FrozenSet[int]) -> HoffmanGraph:
    """attach_fat by slim indices, for inner loops"""
    if not targets:
        raise EmptyAttachment("a new fat vertex needs at least one slim neighbor")
    new = H.fat_count
    slim_fat = [fats | {new} if i in targets else fats for i, fats in enumerate(H.slim_fat)]
    return _from_parts(H.slim_names, H.fat_names + (fresh_fat_name(H),), H.slim_adj, slim_fat)


def relabel(H: HoffmanGraph, mapping: Mapping[str, str]) -> HoffmanGraph:
    """Rename vertices; names missing from ``mapping`` are kept"""
    slim = [mapping.get(n, n) for n in H.slim_names]
    fat = [mapping.get(n, n) for n in H.fat_names]
    if len(set(slim) | set(fat)) != len(slim) + len(fat):
        clash = [n for n, c in Counter(slim + fat).items() if c > 1]
        raise DuplicateVertexName(f"renaming produces duplicate names {clash}", clash)
    return HoffmanGraph(tuple(slim), tuple(fat), H.slim_adj, H.slim_fat)


def predicates(H: HoffmanGraph) -> GraphPredicateReport:
    return GraphPredicateReport(
        is_fat=all(H.slim_fat),
        is_slim=H.fat_count == 0,
        slim_count=H.slim_count,
        fat_count=H.fat_count,
    )


# Isomorphism


def _slim_invariants(H: HoffmanGraph) -> List[Tuple[int, int, Tuple[int, ...]]]:
    fat_sizes = [len(n) for n in H.fat_neighborhoods()]
    return [
        (len(H.slim_adj[i]), len(H.slim_fat[i]), tuple(sorted(fat_sizes[f] for f in H.slim_fat[i])))
        for i in range(H.slim_count)
    ]


def find_isomorphism(H1: HoffmanGraph, H2: HoffmanGraph) -> Optional[Dict[str, str]]:
    """Label-preserving isomorphism from H1 to H2 as a name mapping, or None"""
    if H1.slim_count != H2.slim_count or H1.fat_count != H2.fat_count:
        return None
    inv1, inv2 = _slim_invariants(H1), _slim_invariants(H2)
    if sorted(inv1) != sorted(inv2):
        return None
    fats1 = H1.fat_neighborhoods()
    fats2 = H2.fat_neighborhoods()
    if sorted(len(n) for n in fats1) != sorted(len(n) for n in fats2):
        return None

    n = H1.slim_count
    order = sorted(range(n), key=lambda i: (-len(H1.slim_adj[i]), i))
    image: Dict[int, int] = {}
    used: Set[int] = set()
    target_count = Counter(fats2)

    def consistent(x: int, y: int) -> bool:
        for a, b in image.items():
            if (a in H1.slim_adj[x]) != (b in H2.slim_adj[y]):
                return False
            if H1.common_fat_count(a, x) != H2.common_fat_count(b, y):
                return False
        return True

    def fats_match() -> bool:
        mapped = Counter(frozenset(image[i] for i in nbhd) for nbhd in fats1)
        return mapped == target_count

    def extend(depth: int) -> bool:
        if depth == n:
            return fats_match()
        x = order[depth]
        for y in range(n):
            if y in used or inv1[x] != inv2[y] or not consistent(x, y):
                continue
            image[x] = y
            used.add(y)
            if extend(depth + 1):
                return True
            del image[x]
            used.discard(y)
        return False

    if not extend(0):
        return None

    mapping = {H1.slim_names[a]: H2.slim_names[b] for a, b in image.items()}
    pool: Dict[FrozenSet[int], List[int]] = {}
    for f, nbhd in enumerate(fats2):
        pool.setdefault(nbhd, []).append(f)
    for f, nbhd in enumerate(fats1):
        g = pool[frozenset(image[i] for i in nbhd)].pop(0)
        mapping[H1.fat_names[f]] = H2.fat_names[g]
    return mapping


def are_isomorphic(H1: HoffmanGraph, H2: HoffmanGraph) -> bool:
    return find_isomorphism(H1, H2) is not None


def to_networkx(H: HoffmanGraph) -> nx.Graph:
    """Plain graph with a ``label`` attribute of 's' or 'f' on every node"""
    g = nx.Graph()
    g.add_nodes_from(H.slim_names, label="s")
    g.add_nodes_from(H.fat_names, label="f")
    g.add_edges_from(H.edges())
    return g


# .hg format


def parse_hg(text: str, first_line: int = 1) -> HoffmanGraph:
    """Parse one graph in .hg format"""
    slim: List[str] = []
    fat: List[str] = []
    edges: List[Edge] = []
    for number, raw_line in enumerate(text.splitlines(), start=first_line):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        keyword, args = parts[0], parts[1:]
        expected = {"slim": 1, "fat": 1, "edge": 2}.get(keyword)
        if expected is None:
            raise HgSyntaxError(f"unknown keyword '{keyword}'", number)
        if len(args) != expected:
            raise HgSyntaxError(f"'{keyword}' takes {expected} name(s)", number)
        for name in args:
            if not NAME_PATTERN.match(name):
                raise HgSyntaxError(f"invalid vertex name '{name}'", number)
        if keyword == "slim":
            slim.append(args[0])
        elif keyword == "fat":
            fat.append(args[0])
        else:
            edges.append((args[0], args[1]))
    return validate(GraphDescription(tuple(slim), tuple(fat), tuple(edges)))


def parse_hg_stream(text: str) -> List[HoffmanGraph]:
    """Parse graphs separated by '---' lines; empty blocks are skipped"""
    graphs: List[HoffmanGraph] = []
    block: List[str] = []
    start = 1
    for number, line in enumerate(text.splitlines(), start=1):
        if line.strip() == BLOCK_SEPARATOR:
            if any(b.split("#", 1)[0].strip() for b in block):
                graphs.append(parse_hg("\n".join(block), start))
            block = []
            start = number + 1
        else:
            block.append(line)
    if any(b.split("#", 1)[0].strip() for b in block):
        graphs.append(parse_hg("\n".join(block), start))
    return graphs


def format_hg(H: HoffmanGraph) -> str:
    """Serialize as .hg: slim lines, fat lines, then sorted edges"""
    lines = [f"slim {name}" for name in H.slim_names]
    lines += [f"fat {name}" for name in H.fat_names]
    pairs = sorted(tuple(sorted(e)) for e in H.edges())
    lines += [f"edge {a} {b}" for a, b in pairs]
    return "\n".join(lines) + "\n"


def format_hg_stream(graphs: Iterable[HoffmanGraph]) -> str:
    return f"{BLOCK_SEPARATOR}\n".join(format_hg(H) for H in graphs)


def decode_hg(data: bytes) -> str:
    """UTF-8 text of raw .hg input; undecodable bytes are a syntax error"""
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as error:
        line_number = data[: error.start].count(b"\n") + 1
        raise HgSyntaxError(
            f"invalid UTF-8 byte 0x{data[error.start]:02x}", line_number
        ) from error


def load_hg(path: Union[str, Path]) -> List[HoffmanGraph]:
    """Read every graph of a .hg file"""
    path = Path(path)
    if not path.is_file():
        raise FileNotFound(f"no such file: '{path}'")
    logger.debug("reading %s", path)
    return parse_hg_stream(decode_hg(path.read_bytes()))
