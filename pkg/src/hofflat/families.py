"""Constructors for the named example graphs and the properties claimed for them"""

import logging
from typing import Any, Dict, List, NamedTuple, Sequence, Tuple

from .decomposition import indecomposable_components, special_graphs
from .dynkin import recognize_shape
from .errors import BadParameters, UnsupportedT
from .exact import rational_ldlt
from .graph import GraphDescription, HoffmanGraph, validate
from .lattice import E8RootSystem, classify_reduced_lattice, e8_root_system
from .representation import E8_DOUBLED, STANDARD, VectorRep, reduced_gram
from .saturation import is_saturated

logger = logging.getLogger(__name__)

FAMILIES = ("ht", "a3tilde", "an", "a5", "me8")


def family_ht(t: int) -> HoffmanGraph:
    """One slim vertex with t fat neighbors"""
    if t not in (1, 2, 3):
        raise UnsupportedT(f"t must be 1, 2 or 3, got {t}")
    fats = tuple(f"f{i}" for i in range(1, t + 1))
    return validate(GraphDescription(("x",), fats, tuple(("x", f) for f in fats)))


def family_a3tilde() -> HoffmanGraph:
    """Four slim vertices on a cycle of fat vertices, opposite vertices adjacent"""
    slim = ("0", "1", "2", "3")
    fat = ("f0", "f1", "f2", "f3")
    edges: List[Tuple[str, str]] = [("0", "2"), ("1", "3")]
    for j in range(4):
        edges += [(str(j), f"f{j}"), (str((j + 1) % 4), f"f{j}")]
    return validate(GraphDescription(slim, fat, tuple(edges)))


def _check_an_parameters(ns: Sequence[int]) -> None:
    if not ns:
        raise BadParameters("at least one block size is required")
    for i, n in enumerate(ns, start=1):
        if n < 1:
            raise BadParameters(f"n{i} = {n} must be positive")
        if 1 < i < len(ns) and n < 2:
            raise BadParameters(f"n{i} = {n} must be at least 2 for an inner block")


def family_an(ns: Sequence[int]) -> Tuple[HoffmanGraph, VectorRep]:
    """Chain of k blocks of slim vertices whose minus graph is a path.

    Block j holds v_i for m_{j-1} <= i <= m_j, where m_j = n_1 + ... + n_j; the
    endpoints v_{m_j} are shared by consecutive blocks. Returns the graph and
    an explicit reduced representation of norm 3.
    """
    _check_an_parameters(ns)
    k = len(ns)
    marks = [0]
    for n in ns:
        marks.append(marks[-1] + n)
    last = marks[k]

    slim = tuple(f"v{i}" for i in range(last + 1))
    fat = tuple(f"f{j}" for j in range(k + 2))
    edges = set()
    for j in range(1, k + 1):
        for i in range(marks[j - 1], marks[j] + 1):
            edges.add((f"v{i}", f"f{j}"))
            for i2 in range(i + 2, marks[j] + 1):
                edges.add((f"v{i}", f"v{i2}"))
    for j in range(1, k):
        edges.add((f"v{marks[j] - 1}", f"v{marks[j] + 1}"))
    edges.add(("v0", "f0"))
    edges.add((f"v{last}", f"f{k + 1}"))
    graph = validate(GraphDescription(slim, fat, tuple(sorted(edges))))

    width = marks[k] - k + 1
    vectors = []
    for i in range(last + 1):
        v = [0] * width
        if i in marks:
            j = marks.index(i)
            v[marks[j] - j] = (-1) ** j
        else:
            j = max(b for b in range(k) if marks[b] < i)
            v[i - j] = (-1) ** j
            v[i - j - 1] = -((-1) ** j)
        vectors.append(tuple(v))
    return graph, VectorRep(STANDARD, 1, slim, tuple(vectors))


def an_plus_edges(ns: Sequence[int]) -> List[Tuple[str, str]]:
    """Edges of the plus graph of family_an(ns)"""
    marks = [0]
    for n in ns:
        marks.append(marks[-1] + n)
    return [(f"v{marks[j] - 1}", f"v{marks[j] + 1}") for j in range(1, len(ns))]


def _identify_fat(H: HoffmanGraph, drop: str, keep: str) -> HoffmanGraph:
    """Merge fat vertex ``drop`` into ``keep`` and join the slim pairs that now
    share it, so the reduced Gram is unchanged"""
    description = H.describe()
    merged = [(a, keep if b == drop else b) for a, b in description.edges]
    before = {a for a, b in description.edges if b == keep}
    moved = {a for a, b in description.edges if b == drop}
    joins = [(x, y) for x in sorted(before) for y in sorted(moved) if x != y]
    edges = tuple(dict.fromkeys(merged + joins))
    fat = tuple(f for f in H.fat_names if f != drop)
    return validate(GraphDescription(H.slim_names, fat, edges))


def family_a5() -> Tuple[HoffmanGraph, HoffmanGraph]:
    """Two non-isomorphic graphs sharing the special graphs of family_an((1, 2, 1))"""
    base, _ = family_an((1, 2, 1))
    return _identify_fat(base, "f4", "f0"), _identify_fat(base, "f4", "f1")


def family_me8() -> Tuple[HoffmanGraph, VectorRep]:
    """The 57 roots alpha, beta_i, alpha - beta_i with 29 fat vertices"""
    roots = e8_root_system().roots
    dot = E8RootSystem.dot
    alpha = roots[0]
    paired = set()
    pairs = []
    for beta in roots:
        if dot(alpha, beta) != 1 or beta in paired:
            continue
        partner = tuple(a - b for a, b in zip(alpha, beta))
        paired.update((beta, partner))
        pairs.append(min(beta, partner))
    pairs.sort()

    names: List[str] = ["a"]
    vectors: List[Tuple[int, ...]] = [alpha]
    edges: List[Tuple[str, str]] = [("a", "f0")]
    for i, beta in enumerate(pairs, start=1):
        partner = tuple(a - b for a, b in zip(alpha, beta))
        names += [f"b{i}", f"c{i}"]
        vectors += [beta, partner]
        edges += [(f"b{i}", f"f{i}"), (f"c{i}", f"f{i}")]
    for x in range(len(vectors)):
        for y in range(x + 1, len(vectors)):
            if dot(vectors[x], vectors[y]) == 1:
                edges.append((names[x], names[y]))
    fat = tuple(f"f{i}" for i in range(len(pairs) + 1))
    graph = validate(GraphDescription(tuple(names), fat, tuple(edges)))
    return graph, VectorRep(E8_DOUBLED, 4, tuple(names), tuple(vectors))


class FamilyInstance(NamedTuple):
    """Graphs of a family together with the properties claimed for them"""

    name: str
    graphs: Tuple[HoffmanGraph, ...]
    claims: Dict[str, Any]


def build_family(name: str, params: Sequence[int] = ()) -> FamilyInstance:
    if name == "ht":
        if len(params) != 1:
            raise BadParameters("ht takes exactly one parameter t")
        t = params[0]
        return FamilyInstance(name, (family_ht(t),), {"lambda_min": -t})
    if name == "a3tilde":
        return FamilyInstance(
            name,
            (family_a3tilde(),),
            {
                "lambda_min": -3,
                "minus_shape": "ATilde(3)",
                "plus": [["0", "2"], ["1", "3"]],
                "lattice": "Standard(1)",
                "saturated": True,
                "indecomposable": True,
            },
        )
    if name == "an":
        graph, psi = family_an(params)
        return FamilyInstance(
            name,
            (graph,),
            {
                "psi": psi.to_dict(),
                "minus_shape": f"A({sum(params) + 1})",
                "plus": sorted(sorted(e) for e in an_plus_edges(params)),
                "saturated": True,
                "indecomposable": True,
            },
        )
    if name == "a5":
        return FamilyInstance(
            name,
            family_a5(),
            {
                "minus_shape": "A(5)",
                "plus": [["v0", "v2"], ["v2", "v4"]],
                "saturated": True,
                "indecomposable": True,
            },
        )
    if name == "me8":
        graph, rep = family_me8()
        return FamilyInstance(
            name,
            (graph,),
            {
                "slim_count": 57,
                "fat_count": 29,
                "indecomposable": True,
                "lattice": "E(8)",
                "embedding": rep.to_dict(),
            },
        )
    raise BadParameters(f"unknown family '{name}', expected one of {', '.join(FAMILIES)}")


def _exact_lambda_min(H: HoffmanGraph, value: int) -> bool:
    """lambda_min(H) == value, decided exactly"""
    factor = rational_ldlt(reduced_gram(H, -value).entries)
    return factor.is_psd and factor.rank < H.slim_count


def _represents(H: HoffmanGraph, claimed: Dict[str, Any]) -> bool:
    """Whether claimed vectors have the reduced Gram of norm 3 of H"""
    vectors = claimed["vectors"]
    rep = VectorRep(
        claimed["kind"],
        claimed["scale"],
        H.slim_names,
        tuple(tuple(vectors[name]) for name in H.slim_names),
    )
    return [list(row) for row in reduced_gram(H, 3).entries] == rep.gram()


def check_claims(instance: FamilyInstance) -> Dict[str, bool]:
    """Re-derive every claim for every graph of the instance"""
    results: Dict[str, bool] = {}
    for key, claimed in instance.claims.items():
        outcomes = []
        for H in instance.graphs:
            if key == "lambda_min":
                outcomes.append(_exact_lambda_min(H, claimed))
            elif key == "minus_shape":
                outcomes.append(recognize_shape(special_graphs(H).minus_graph()).label == claimed)
            elif key == "plus":
                outcomes.append(special_graphs(H).to_dict()["plus"] == claimed)
            elif key == "lattice":
                outcomes.append(classify_reduced_lattice(H).label == claimed)
            elif key == "saturated":
                outcomes.append(is_saturated(H, 3).saturated == claimed)
            elif key in ("psi", "embedding"):
                outcomes.append(_represents(H, claimed))
            elif key == "indecomposable":
                outcomes.append((len(indecomposable_components(H)) == 1) == claimed)
            elif key == "slim_count":
                outcomes.append(H.slim_count == claimed)
            elif key == "fat_count":
                outcomes.append(H.fat_count == claimed)
        results[key] = all(outcomes)
    logger.debug("claims for %s: %s", instance.name, results)
    return results
