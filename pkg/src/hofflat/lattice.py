"""Lattice invariants, the E8 root system and classification of reduced lattices"""

import logging
import math
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple

from .decomposition import indecomposable_components
from .errors import EigenvalueTooSmall, EmptyRepresentation, NotFat, NotIndecomposable
from .exact import MatrixLike, determinant, gram, hermite_basis, inverse, rational_ldlt
from .graph import HoffmanGraph
from .representation import (
    E8_DOUBLED,
    STANDARD,
    VectorRep,
    find_e8_embedding,
    find_standard_embedding,
    reduced_gram,
)

logger = logging.getLogger(__name__)

Root = Tuple[int, ...]


class E8RootSystem(NamedTuple):
    """The 240 roots of E8 in doubled coordinates (inner products divided by 4)"""

    roots: Tuple[Root, ...]

    @staticmethod
    def dot(u: Sequence[int], v: Sequence[int]) -> int:
        """Real inner product of two doubled vectors"""
        return sum(a * b for a, b in zip(u, v)) // 4


@lru_cache(maxsize=None)
def e8_root_system() -> E8RootSystem:
    roots = set()
    for i, j in combinations(range(8), 2):
        for si, sj in product((2, -2), repeat=2):
            v = [0] * 8
            v[i], v[j] = si, sj
            roots.add(tuple(v))
    for signs in product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.add(signs)
    return E8RootSystem(tuple(sorted(roots)))


class LatticeInvariants(NamedTuple):
    rank: int
    discriminant: int
    min_norm: int


def _as_int(value: Fraction) -> int:
    if value.denominator != 1:
        raise ValueError(f"expected an integer, got {value}")
    return value.numerator


def shortest_vector_norm(matrix: MatrixLike) -> Fraction:
    """Minimal nonzero norm of the lattice with positive definite Gram ``matrix``.

    Fincke-Pohst enumeration over the exact LDL^T factorization; the radius
    starts at the smallest diagonal entry and shrinks whenever a shorter
    vector turns up.
    """
    n = len(matrix)
    if n == 0:
        return Fraction(0)
    factor = rational_ldlt(matrix, pivoting=False)
    if factor.rank != n:
        raise ValueError("Gram matrix is not positive definite")
    d = factor.pivots
    mu = factor.lower
    best = min(Fraction(matrix[i][i]) for i in range(n))
    x = [0] * n

    def search(k: int, partial: Fraction, nonzero: bool) -> None:
        nonlocal best
        if k < 0:
            if nonzero and partial < best:
                best = partial
            return
        center = -sum((mu[i][k] * x[i] for i in range(k + 1, n)), Fraction(0))
        room = best - partial
        if room < 0:
            return
        spread = math.sqrt(room / d[k])
        low = math.floor(center - spread) - 1
        high = math.ceil(center + spread) + 1
        for value in range(low, high + 1):
            term = d[k] * (value - center) ** 2
            if partial + term > best:
                continue
            x[k] = value
            search(k - 1, partial + term, nonzero or value != 0)
        x[k] = 0

    search(n - 1, Fraction(0), False)
    return best


def _basis_gram(rep: VectorRep) -> List[List[int]]:
    basis = hermite_basis(rep.vectors)
    return [[_as_int(Fraction(v, rep.scale)) for v in row] for row in gram(basis)]


def lattice_invariants(rep: VectorRep) -> LatticeInvariants:
    """Rank, discriminant and minimal norm of the lattice the vectors generate"""
    if not rep.vectors:
        raise EmptyRepresentation("the representation has no vectors")
    g = _basis_gram(rep)
    if not g:
        return LatticeInvariants(0, 1, 0)
    return LatticeInvariants(
        len(g), _as_int(determinant(g)), _as_int(shortest_vector_norm(g))
    )


def dual_min_norm(rep: VectorRep) -> Fraction:
    """Minimal nonzero norm of the dual of the generated lattice"""
    g = _basis_gram(rep)
    if not g:
        raise EmptyRepresentation("the lattice is zero")
    return shortest_vector_norm(inverse(g))


def standard_root_basis(kind: str, n: int) -> VectorRep:
    """Simple roots of A_n, D_n (n >= 4), E6, E7 or E8"""
    names: Tuple[str, ...] = tuple(f"a{i}" for i in range(1, n + 1))
    if kind == "A" and n >= 1:
        vectors = []
        for i in range(n):
            v = [0] * (n + 1)
            v[i], v[i + 1] = 1, -1
            vectors.append(tuple(v))
        return VectorRep(STANDARD, 1, names, tuple(vectors))
    if kind == "D" and n >= 4:
        vectors = []
        for i in range(n - 1):
            v = [0] * n
            v[i], v[i + 1] = 1, -1
            vectors.append(tuple(v))
        v = [0] * n
        v[n - 2], v[n - 1] = 1, 1
        vectors.append(tuple(v))
        return VectorRep(STANDARD, 1, names, tuple(vectors))
    if kind == "E" and n in (6, 7, 8):
        simple = [(1, -1, -1, -1, -1, -1, -1, 1), (2, 2, 0, 0, 0, 0, 0, 0)]
        for i in range(6):
            v = [0] * 8
            v[i], v[i + 1] = -2, 2
            simple.append(tuple(v))
        return VectorRep(E8_DOUBLED, 4, names, tuple(simple[:n]))
    raise ValueError(f"no root system {kind}{n}")


class LatticeClass(NamedTuple):
    """Isometry type of the reduced lattice of a fat indecomposable graph"""

    kind: str
    n: int
    rank: int
    discriminant: int
    min_norm: int
    embedding: Optional[VectorRep] = None

    @property
    def label(self) -> str:
        if self.kind == "h3":
            return "H3"
        if self.kind == "standard":
            return f"Standard({self.n})"
        if self.kind == "unknown":
            return "Unknown"
        return f"{self.kind}({self.n})"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "n": self.n,
            "rank": self.rank,
            "discriminant": self.discriminant,
            "min_norm": self.min_norm,
        }


EXCEPTIONAL = {(6, 3): 6, (7, 2): 7, (8, 1): 8}


def _standard_class(rep: VectorRep) -> LatticeClass:
    inv = lattice_invariants(rep)
    if inv.min_norm == 1:
        return LatticeClass("standard", inv.rank, *inv, embedding=rep)
    if inv.min_norm == 2 and inv.discriminant == inv.rank + 1:
        return LatticeClass("A", inv.rank, *inv, embedding=rep)
    if inv.min_norm == 2 and inv.discriminant == 4 and inv.rank >= 4:
        return LatticeClass("D", inv.rank, *inv, embedding=rep)
    return LatticeClass("unknown", inv.rank, *inv, embedding=rep)


def classify_reduced_lattice(H: HoffmanGraph) -> LatticeClass:
    """Recognize the reduced lattice of norm 3 of a fat indecomposable graph"""
    lonely = [H.slim_names[i] for i, fats in enumerate(H.slim_fat) if not fats]
    if lonely:
        raise NotFat(f"slim vertex '{lonely[0]}' has no fat neighbor", lonely)
    g = reduced_gram(H, 3)
    factor = rational_ldlt(g.entries)
    if not factor.is_psd:
        raise EigenvalueTooSmall(3)
    if len(indecomposable_components(H)) > 1:
        raise NotIndecomposable("the special graph is disconnected")

    if any(len(fats) >= 3 for fats in H.slim_fat):
        return LatticeClass("h3", 0, 0, 1, 0)

    # E6, E7 and E8 have no standard embedding
    e8_rep = None
    if all(g.entries[i][i] == 2 for i in range(g.size)):
        e8_rep = find_e8_embedding(g)
        if e8_rep is not None:
            inv = lattice_invariants(e8_rep)
            key = (inv.rank, inv.discriminant)
            if key in EXCEPTIONAL and inv.min_norm == 2:
                return LatticeClass("E", EXCEPTIONAL[key], *inv, embedding=e8_rep)

    rep = find_standard_embedding(g)
    if rep is not None:
        return _standard_class(rep)
    if e8_rep is not None:
        inv = lattice_invariants(e8_rep)
        return LatticeClass("unknown", inv.rank, *inv, embedding=e8_rep)
    logger.info("no integral embedding found for %d slim vertices", H.slim_count)
    return LatticeClass("unknown", factor.rank, factor.rank, 0, 0)
