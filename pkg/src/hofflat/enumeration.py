"""Exhaustive enumeration of small fat Hoffman graphs and corpus verification"""

import logging
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations, permutations
from typing import (
    Any,
    Dict,
    FrozenSet,
    Iterable,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Set,
    Tuple,
)

import networkx as nx
from typing_extensions import TypeAlias

from .config import (
    DEFAULT_ENUMERATION_BOUND,
    HARD_ENUMERATION_CAP,
    thread_count,
)
from .decomposition import indecomposable_components, special_graphs
from .dynkin import A, A_TILDE, D, D_TILDE, recognize_shape
from .errors import BadParameters, BoundsTooLarge
from .exact import rational_ldlt
from .graph import HoffmanGraph, are_isomorphic, format_hg, induced_closure
from .lattice import classify_reduced_lattice
from .representation import find_standard_embedding, reduced_gram
from .saturation import is_saturated

logger = logging.getLogger(__name__)

FILTERS = ("fat", "indecomposable", "saturated")
NORM = 3
MAX_FAT_DEGREE = 3

Pair: TypeAlias = Tuple[int, int]
Key: TypeAlias = Tuple[int, int, Tuple[int, ...], Tuple[int, ...]]


class Skeleton(NamedTuple):
    """Canonically labeled slim graph with its automorphisms"""

    size: int
    edges: FrozenSet[Pair]
    bits: Tuple[int, ...]
    automorphisms: Tuple[Tuple[int, ...], ...]


def _pairs(n: int) -> List[Pair]:
    return list(combinations(range(n), 2))


def _edge_bits(n: int, edges: FrozenSet[Pair], perm: Sequence[int]) -> Tuple[int, ...]:
    image = {tuple(sorted((perm[a], perm[b]))) for a, b in edges}
    return tuple(int(p in image) for p in _pairs(n))


def slim_skeletons(n: int) -> List[Skeleton]:
    """All slim graphs on n vertices up to isomorphism, in canonical order"""
    pairs = _pairs(n)
    perms = list(permutations(range(n)))
    seen: Dict[Tuple[int, ...], FrozenSet[Pair]] = {}
    for mask in range(1 << len(pairs)):
        edges = frozenset(p for bit, p in enumerate(pairs) if mask >> bit & 1)
        bits = min(_edge_bits(n, edges, perm) for perm in perms)
        if bits not in seen:
            seen[bits] = frozenset(p for p, b in zip(pairs, bits) if b)
    skeletons = []
    for bits in sorted(seen):
        edges = seen[bits]
        autos = tuple(perm for perm in perms if _edge_bits(n, edges, perm) == bits)
        skeletons.append(Skeleton(n, edges, bits, autos))
    return skeletons


def _shifted_gram(skeleton: Skeleton, fats: Sequence[int]) -> List[List[int]]:
    n = skeleton.size
    g = [[NORM if i == j else 0 for j in range(n)] for i in range(n)]
    for a, b in skeleton.edges:
        g[a][b] = g[b][a] = 1
    for mask in fats:
        members = [i for i in range(n) if mask >> i & 1]
        for i in members:
            for j in members:
                g[i][j] -= 1
    return g


def _canonical(skeleton: Skeleton, fats: Sequence[int]) -> Tuple[int, ...]:
    """Least sorted fat encoding over the skeleton's automorphisms"""
    n = skeleton.size
    return min(
        tuple(sorted(sum(1 << perm[i] for i in range(n) if mask >> i & 1) for mask in fats))
        for perm in skeleton.automorphisms
    )


def _build(skeleton: Skeleton, fats: Tuple[int, ...]) -> HoffmanGraph:
    n = skeleton.size
    adj: List[Set[int]] = [set() for _ in range(n)]
    for a, b in skeleton.edges:
        adj[a].add(b)
        adj[b].add(a)
    slim_fat = [{f for f, mask in enumerate(fats) if mask >> i & 1} for i in range(n)]
    return HoffmanGraph(
        tuple(f"s{i}" for i in range(n)),
        tuple(f"f{j}" for j in range(len(fats))),
        tuple(frozenset(s) for s in adj),
        tuple(frozenset(s) for s in slim_fat),
    )


def _graphs_on(skeleton: Skeleton, max_fat: int) -> Dict[Key, HoffmanGraph]:
    """Graphs with smallest eigenvalue at least -3 over one skeleton, keyed canonically"""
    n = skeleton.size
    subsets = list(range(1, 1 << n))
    found: Dict[Key, HoffmanGraph] = {}

    def visit(fats: Tuple[int, ...], start: int, degree: List[int]) -> None:
        encoding = _canonical(skeleton, fats)
        key = (n, len(fats), skeleton.bits, encoding)
        if key not in found:
            found[key] = _build(skeleton, encoding)
        if len(fats) == max_fat:
            return
        for pos in range(start, len(subsets)):
            mask = subsets[pos]
            members = [i for i in range(n) if mask >> i & 1]
            if any(degree[i] == MAX_FAT_DEGREE for i in members):
                continue
            extended = fats + (mask,)
            if not rational_ldlt(_shifted_gram(skeleton, extended)).is_psd:
                continue
            for i in members:
                degree[i] += 1
            visit(extended, pos, degree)
            for i in members:
                degree[i] -= 1

    if rational_ldlt(_shifted_gram(skeleton, ())).is_psd:
        visit((), 0, [0] * n)
    logger.debug("skeleton %s: %d classes", skeleton.bits, len(found))
    return found


def _passes(H: HoffmanGraph, filters: FrozenSet[str]) -> bool:
    if "fat" in filters and not all(H.slim_fat):
        return False
    if "indecomposable" in filters and len(indecomposable_components(H)) != 1:
        return False
    if "saturated" in filters:
        return is_saturated(H, NORM).saturated
    return True


def enumerate_graphs(
    max_slim: int, max_fat: int, filters: Iterable[str] = ()
) -> List[HoffmanGraph]:
    """Isomorphism classes of Hoffman graphs with smallest eigenvalue at least -3.

    Slim counts run from 1 to ``max_slim`` and fat counts from 0 to
    ``max_fat``. Graphs use names s0, s1, ... and f0, f1, ... in canonical
    order and come out sorted by (slim count, fat count, encoding).
    """
    if max_slim > HARD_ENUMERATION_CAP or max_fat > HARD_ENUMERATION_CAP:
        raise BoundsTooLarge(
            f"bounds {max_slim}x{max_fat} exceed the cap of "
            f"{HARD_ENUMERATION_CAP}x{HARD_ENUMERATION_CAP}"
        )
    if max_slim < 1 or max_fat < 0:
        raise BadParameters("max_slim must be positive and max_fat nonnegative")
    if max(max_slim, max_fat) > DEFAULT_ENUMERATION_BOUND:
        logger.warning(
            "bounds %dx%d exceed the default of %d and may take long",
            max_slim,
            max_fat,
            DEFAULT_ENUMERATION_BOUND,
        )
    wanted = frozenset(filters)
    unknown = wanted - set(FILTERS)
    if unknown:
        raise BadParameters(f"unknown filter(s) {sorted(unknown)}, expected {FILTERS}")

    skeletons = [s for n in range(1, max_slim + 1) for s in slim_skeletons(n)]
    with ThreadPoolExecutor(max_workers=thread_count()) as pool:
        parts = list(pool.map(lambda s: _graphs_on(s, max_fat), skeletons))
    merged: Dict[Key, HoffmanGraph] = {}
    for part in parts:
        merged.update(part)
    logger.info("enumerated %d classes up to %dx%d", len(merged), max_slim, max_fat)
    return [merged[key] for key in sorted(merged) if _passes(merged[key], wanted)]


# Corpus verification


class Violation(NamedTuple):
    check: str
    graph: str
    detail: str

    def to_dict(self) -> Dict[str, Any]:
        return dict(self._asdict())


class CorpusReport(NamedTuple):
    """Number of graphs each check ran on, and every failure found"""

    graphs: int
    tallies: Dict[str, int]
    violations: Tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict[str, Any]:
        return {
            "graphs": self.graphs,
            "tallies": dict(self.tallies),
            "violations": [v.to_dict() for v in self.violations],
            "ok": self.ok,
        }


CHECKS = (
    "entry_bounds",
    "h3_isolated",
    "trichotomy",
    "mixed_norm",
    "column_sign",
    "minus_connected",
    "injective",
    "degree_bounds",
    "shape",
)


def _a3tilde_closures() -> List[HoffmanGraph]:
    from .families import family_a3tilde

    H = family_a3tilde()
    names = H.slim_names
    return [
        induced_closure(H, subset)
        for r in range(1, len(names) + 1)
        for subset in combinations(names, r)
    ]


def _degree_bounds(minus: nx.Graph) -> Optional[str]:
    degrees = dict(minus.degree())
    d_tilde_4 = nx.is_connected(minus) and recognize_shape(minus).label == "DTilde(4)"
    for v, d in degrees.items():
        if d > 4:
            return f"vertex {v} has degree {d}"
        if d == 4 and not d_tilde_4:
            return f"vertex {v} has degree 4 outside DTilde(4)"
        if d == 3 and sum(1 for u in minus.neighbors(v) if degrees[u] == 1) < 2:
            return f"vertex {v} has degree 3 with fewer than two leaf neighbors"
    return None


def verify_corpus(graphs: Iterable[HoffmanGraph]) -> CorpusReport:
    """Check the structure theorems for fat graphs with smallest eigenvalue >= -3"""
    tallies = dict.fromkeys(CHECKS, 0)
    violations: List[Violation] = []
    closures: Optional[List[HoffmanGraph]] = None
    count = 0

    for H in graphs:
        count += 1
        text = format_hg(H)

        def record(check: str, failure: Optional[str]) -> None:
            tallies[check] += 1
            if failure:
                violations.append(Violation(check, text, failure))

        fat = all(H.slim_fat)
        g = reduced_gram(H, NORM)
        if not fat or not rational_ldlt(g.entries).is_psd:
            continue
        n = H.slim_count
        bad = [(i, j) for i in range(n) for j in range(n) if i != j and abs(g.entries[i][j]) > 1]
        record("entry_bounds", f"entry {bad[0]} out of range" if bad else None)

        special = special_graphs(H).graph()
        isolated = [
            H.slim_names[i] for i in range(n)
            if len(H.slim_fat[i]) == 3 and special.degree(H.slim_names[i]) > 0
        ]
        record("h3_isolated", f"{isolated} not isolated" if isolated else None)

        if len(indecomposable_components(H)) != 1:
            continue
        lattice = classify_reduced_lattice(H)
        record("trichotomy", "unknown lattice" if lattice.kind == "unknown" else None)

        rep = find_standard_embedding(g)
        if rep is not None:
            has_unit = any(sum(x * x for x in v) == 1 for v in rep.vectors)
            mixed = has_unit and lattice.kind != "standard"
            record("mixed_norm", f"norm-1 vector but lattice {lattice.label}" if mixed else None)

        if rep is None or not is_saturated(H, NORM).saturated:
            continue

        width = len(rep.vectors[0]) if rep.vectors else 0
        one_sided = [
            c for c in range(width)
            if not ({v[c] for v in rep.vectors} >= {1, -1})
        ]
        record("column_sign", f"coordinates {one_sided} take one sign" if one_sided else None)

        minus = special_graphs(H).minus_graph()
        record("minus_connected", None if nx.is_connected(minus) else "minus graph disconnected")

        if len(set(rep.vectors)) != len(rep.vectors):
            if closures is None:
                closures = _a3tilde_closures()
            exempt = any(are_isomorphic(H, c) for c in closures)
            record("injective", None if exempt else "representation is not injective")
        else:
            record("injective", None)

        record("degree_bounds", _degree_bounds(minus))
        if nx.is_connected(minus):
            shape = recognize_shape(minus)
            ok = shape.kind in (A, D, A_TILDE, D_TILDE)
            record("shape", None if ok else "minus graph is not a Dynkin shape")

    logger.info("verified %d graphs, %d violations", count, len(violations))
    return CorpusReport(count, tallies, tuple(violations))
