"""Representations and reduced representations of Hoffman graphs.

A representation of norm m sends every vertex to a real vector with prescribed
inner products; its reduced form keeps only slim vertices and has Gram matrix
B(H) + mI. The embedding searches look for integral reduced representations
in the standard lattice and in the E8 root lattice.
"""

import logging
import math
from functools import lru_cache
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .config import FLOAT_TOLERANCE
from .errors import (
    EigenvalueTooSmall,
    NotARepresentation,
    UnsupportedDiagonal,
    UnsupportedOffDiagonal,
    WrongVectorCount,
)
from .exact import rational_ldlt
from .graph import HoffmanGraph

logger = logging.getLogger(__name__)

STANDARD = "standard"
E8_DOUBLED = "e8_doubled"


class ReducedGram(NamedTuple):
    """Gram matrix of a reduced representation of norm ``m``"""

    m: int
    names: Tuple[str, ...]
    entries: Tuple[Tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.names)

    def matrix(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.size, self.size)

    def to_dict(self) -> Dict[str, Any]:
        return {"m": self.m, "names": list(self.names), "entries": [list(r) for r in self.entries]}


def reduced_gram(H: HoffmanGraph, m: int) -> ReducedGram:
    n = H.slim_count
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(m - len(H.slim_fat[i]))
            else:
                row.append(int(j in H.slim_adj[i]) - H.common_fat_count(i, j))
        entries.append(tuple(row))
    return ReducedGram(m, H.slim_names, tuple(entries))


def representation_gram(H: HoffmanGraph, m: float) -> np.ndarray:
    """Target Gram of a representation of norm m, slim vertices first"""
    n, k = H.slim_count, H.fat_count
    g = np.zeros((n + k, n + k))
    g[:n, :n] = H.slim_adjacency_matrix()
    c = H.incidence_matrix()
    g[:n, n:] = c
    g[n:, :n] = c.T
    g[np.arange(n), np.arange(n)] = m
    g[np.arange(n, n + k), np.arange(n, n + k)] = 1.0
    return g


class Representation(NamedTuple):
    """Real vectors for all vertices, rows in slim-then-fat order"""

    m: int
    names: Tuple[str, ...]
    vectors: np.ndarray

    def to_dict(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "vectors": {
                name: [float(f"{x:.12g}") for x in row]
                for name, row in zip(self.names, self.vectors)
            },
        }


def build_representation(H: HoffmanGraph, m: int) -> Representation:
    """Representation of norm m from an exact factorization of B(H) + mI"""
    factor = rational_ldlt(reduced_gram(H, m).entries)
    if not factor.is_psd:
        raise EigenvalueTooSmall(m)
    n, k, r = H.slim_count, H.fat_count, factor.rank
    roots = [math.sqrt(d) for d in factor.pivots]
    vectors = np.zeros((n + k, r + k))
    for i in range(n):
        for col in range(r):
            vectors[i, col] = float(factor.lower[i][col]) * roots[col]
        for f in H.slim_fat[i]:
            vectors[i, r + f] = 1.0
    for f in range(k):
        vectors[n + f, r + f] = 1.0
    return Representation(m, H.slim_names + H.fat_names, vectors)


def _coordinate_columns(fat_rows: np.ndarray) -> Optional[List[int]]:
    """Columns of fat rows that are distinct coordinate vectors, or None"""
    columns: List[int] = []
    for row in fat_rows:
        support = np.flatnonzero(row)
        if len(support) != 1 or row[support[0]] != 1.0:
            return None
        columns.append(int(support[0]))
    return columns if len(set(columns)) == len(columns) else None


def reduce_representation(H: HoffmanGraph, vectors: np.ndarray, m: int) -> np.ndarray:
    """Project slim vectors onto the orthogonal complement of the fat vectors"""
    vectors = np.asarray(vectors, dtype=float)
    n, k = H.slim_count, H.fat_count
    names = H.slim_names + H.fat_names
    if vectors.shape[0] != n + k:
        raise WrongVectorCount(n + k, vectors.shape[0])
    actual = vectors @ vectors.T
    target = representation_gram(H, m)
    bad = np.argwhere(np.abs(actual - target) > FLOAT_TOLERANCE)
    if len(bad):
        i, j = (int(x) for x in bad[0])
        raise NotARepresentation((names[i], names[j]), target[i, j], actual[i, j])

    slim, fat = vectors[:n], vectors[n:]
    if k == 0:
        return slim.copy()
    columns = _coordinate_columns(fat)
    if columns is not None:
        keep = [c for c in range(vectors.shape[1]) if c not in set(columns)]
        return slim[:, keep]
    projector = np.eye(vectors.shape[1]) - np.linalg.pinv(fat) @ fat
    return slim @ projector


class VectorRep(NamedTuple):
    """Integral reduced representation.

    ``scale`` divides every inner product: 1 for the standard lattice, 4 for
    E8 roots written in doubled coordinates.
    """

    kind: str
    scale: int
    names: Tuple[str, ...]
    vectors: Tuple[Tuple[int, ...], ...]

    def gram(self) -> List[List[int]]:
        return [
            [sum(a * b for a, b in zip(u, v)) // self.scale for v in self.vectors]
            for u in self.vectors
        ]

    def vector(self, name: str) -> Tuple[int, ...]:
        return self.vectors[self.names.index(name)]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "scale": self.scale,
            "vectors": {n: list(v) for n, v in zip(self.names, self.vectors)},
        }


def _special_degree_order(entries: Sequence[Sequence[int]]) -> List[int]:
    n = len(entries)
    degree = [sum(1 for j in range(n) if j != i and entries[i][j] != 0) for i in range(n)]
    return sorted(range(n), key=lambda i: (-degree[i], i))


Sparse = Tuple[Tuple[int, int], ...]


def _sparse_dot(u: Sparse, v: Sparse) -> int:
    total = 0
    for cu, su in u:
        for cv, sv in v:
            if cu == cv:
                total += su * sv
    return total


def _standard_candidates(norm: int, used: int) -> List[Tuple[Sparse, int]]:
    """Sparse candidate vectors of a norm and the coordinate count after placing each.

    Unused coordinates enter in increasing order with sign +1.
    """
    if norm == 0:
        return [((), used)]
    if norm == 1:
        old = [(((i, s),), used) for i in range(used) for s in (1, -1)]
        return old + [(((used, 1),), used + 1)]
    result: List[Tuple[Sparse, int]] = []
    for i in range(used):
        for j in range(i + 1, used):
            for si in (1, -1):
                for sj in (1, -1):
                    result.append((((i, si), (j, sj)), used))
    for i in range(used):
        for si in (1, -1):
            result.append((((i, si), (used, 1)), used + 1))
    result.append((((used, 1), (used + 1, 1)), used + 2))
    return result


def _check_standard_entries(G: ReducedGram) -> None:
    for i, row in enumerate(G.entries):
        for j, value in enumerate(row):
            if i == j and value not in (0, 1, 2):
                raise UnsupportedDiagonal(
                    f"diagonal entry of '{G.names[i]}' is {value}, expected 0, 1 or 2"
                )
            if i != j and value not in (-1, 0, 1):
                raise UnsupportedOffDiagonal(
                    f"entry ({G.names[i]}, {G.names[j]}) is {value}, expected -1, 0 or 1"
                )


def find_standard_embedding(G: ReducedGram) -> Optional[VectorRep]:
    """Embed a norm-3 reduced Gram of a fat graph into Z^N with N = 2n.

    Every vector has entries in {-1, 0, 1} with as many nonzero entries as
    its norm. Returns None when no embedding exists.
    """
    _check_standard_entries(G)
    n = G.size
    order = _special_degree_order(G.entries)
    placed: Dict[int, Sparse] = {}
    limit = 2 * n

    def extend(depth: int, used: int) -> Optional[int]:
        if depth == n:
            return used
        x = order[depth]
        for vector, after in _standard_candidates(G.entries[x][x], used):
            if after > limit:
                continue
            if all(_sparse_dot(vector, placed[y]) == G.entries[x][y] for y in placed):
                placed[x] = vector
                found = extend(depth + 1, after)
                if found is not None:
                    return found
                del placed[x]
        return None

    width = extend(0, 0)
    if width is None:
        logger.debug("no standard embedding for %d vertices", n)
        return None
    vectors = []
    for i in range(n):
        dense = [0] * width
        for coordinate, sign in placed[i]:
            dense[coordinate] = sign
        vectors.append(tuple(dense))
    return VectorRep(STANDARD, 1, G.names, tuple(vectors))


@lru_cache(maxsize=None)
def _e8_tables() -> Tuple[np.ndarray, np.ndarray]:
    from .lattice import e8_root_system

    roots = np.array(e8_root_system().roots, dtype=np.int64)
    return roots, roots @ roots.T


def find_e8_embedding(G: ReducedGram) -> Optional[VectorRep]:
    """Embed a reduced Gram with all diagonal entries 2 into the E8 roots"""
    for i, row in enumerate(G.entries):
        if row[i] != 2:
            raise UnsupportedDiagonal(
                f"diagonal entry of '{G.names[i]}' is {row[i]}, expected 2"
            )
    n = G.size
    if n == 0:
        return VectorRep(E8_DOUBLED, 4, (), ())
    factor = rational_ldlt(G.entries)
    if not factor.is_psd or factor.rank > 8:
        logger.debug("gram is not PSD of rank <= 8, no E8 embedding")
        return None

    roots, dots = _e8_tables()
    order = _special_degree_order(G.entries)
    target = 4 * np.array(G.entries, dtype=np.int64)
    chosen: Dict[int, int] = {order[0]: 0}

    def candidates(x: int) -> np.ndarray:
        mask = np.ones(len(roots), dtype=bool)
        for y, r in chosen.items():
            mask &= dots[r] == target[x, y]
        return np.flatnonzero(mask)

    def extend(depth: int) -> bool:
        if depth == n:
            return True
        x = order[depth]
        options = candidates(x)
        if depth == 1:
            # the stabilizer of the first root is transitive on each inner-product class
            options = options[:1]
        for r in options:
            chosen[x] = int(r)
            if extend(depth + 1):
                return True
            del chosen[x]
        return False

    if not extend(1):
        logger.debug("no E8 embedding for %d vertices", n)
        return None
    vectors = tuple(tuple(int(v) for v in roots[chosen[i]]) for i in range(n))
    return VectorRep(E8_DOUBLED, 4, G.names, vectors)
