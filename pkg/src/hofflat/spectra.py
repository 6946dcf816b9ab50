"""Eigenvalues of Hoffman graphs and Hoffman's clique-expansion limit"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, NamedTuple, Sequence, Set, Tuple

import numpy as np
from typing_extensions import TypeAlias

from .config import JACOBI_MAX_SWEEPS, JACOBI_TOLERANCE, thread_count
from .errors import (
    DuplicateVertexName,
    HypothesisViolated,
    NoFatVertex,
    NonPositiveCliqueSize,
    NoSlimVertex,
    UnknownFatVertex,
)
from .exact import rational_ldlt
from .graph import HoffmanGraph

logger = logging.getLogger(__name__)

BMatrix: TypeAlias = np.ndarray

REPORT_DIGITS = 12


def b_matrix(H: HoffmanGraph) -> BMatrix:
    """B(H) = A_s - C C^T as an integer matrix"""
    c = H.incidence_matrix()
    return H.slim_adjacency_matrix() - c @ c.T


def jacobi_eigenvalues(
    matrix: np.ndarray,
    tol: float = JACOBI_TOLERANCE,
    max_sweeps: int = JACOBI_MAX_SWEEPS,
) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi sweeps, ascending"""
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    if n == 0:
        return np.zeros(0)
    bound = tol * max(1.0, float(np.linalg.norm(a)))

    for sweep in range(max_sweeps):
        off = math.sqrt(max(0.0, float(np.sum(a * a) - np.sum(np.diag(a) ** 2))))
        if off < bound:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = float(a[p, q])
                app, aqq = float(a[p, p]), float(a[q, q])
                g = 100.0 * abs(apq)
                # negligible against both diagonal entries
                if abs(app) + g == abs(app) and abs(aqq) + g == abs(aqq):
                    a[p, q] = a[q, p] = 0.0
                    continue
                h = aqq - app
                if abs(h) + g == abs(h):
                    t = apq / h
                else:
                    theta = h / (2.0 * apq)
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
    else:
        logger.debug("jacobi: no convergence after %d sweeps (n=%d)", max_sweeps, n)
    return np.sort(np.diag(a))


def lambda_min(H: HoffmanGraph) -> float:
    """Smallest eigenvalue of H"""
    if H.slim_count == 0:
        raise NoSlimVertex("the graph has no slim vertex")
    return float(jacobi_eigenvalues(b_matrix(H))[0])


def min_eig_at_least(H: HoffmanGraph, m: int) -> bool:
    """Exact test of lambda_min(H) >= -m"""
    shifted = b_matrix(H) + m * np.eye(H.slim_count, dtype=np.int64)
    return rational_ldlt(shifted.tolist()).is_psd


def expand_fat_to_cliques(H: HoffmanGraph, fats: Sequence[Tuple[str, int]]) -> HoffmanGraph:
    """Replace each listed fat vertex by a slim n-clique joined to its neighbors"""
    seen: Set[str] = set()
    for name, size in fats:
        if name not in H.fat_names:
            raise UnknownFatVertex(f"'{name}' is not a fat vertex", [name])
        if name in seen:
            raise DuplicateVertexName(f"fat vertex '{name}' listed twice", [name])
        if size < 1:
            raise NonPositiveCliqueSize(f"clique size for '{name}' must be positive, got {size}")
        seen.add(name)
    if not fats:
        return H

    used = set(H.slim_names) | set(H.fat_names)
    slim = list(H.slim_names)
    adj: List[Set[int]] = [set(n) for n in H.slim_adj]
    removed = {H.fat_index(name) for name, _ in fats}

    for name, size in fats:
        f = H.fat_index(name)
        neighbors = sorted(H.fat_neighborhood(f))
        clique: List[int] = []
        for i in range(1, size + 1):
            label = f"{name}.{i}"
            while label in used:
                label += "'"
            used.add(label)
            slim.append(label)
            adj.append(set())
            clique.append(len(slim) - 1)
        for a in clique:
            for b in clique:
                if a != b:
                    adj[a].add(b)
            for x in neighbors:
                adj[a].add(x)
                adj[x].add(a)

    kept = [f for f in range(H.fat_count) if f not in removed]
    renumber = {old: new for new, old in enumerate(kept)}
    slim_fat = [{renumber[f] for f in fs if f in renumber} for fs in H.slim_fat]
    slim_fat += [set() for _ in range(len(slim) - H.slim_count)]
    return HoffmanGraph(
        tuple(slim),
        tuple(H.fat_names[f] for f in kept),
        tuple(frozenset(s) for s in adj),
        tuple(frozenset(s) for s in slim_fat),
    )


class ConvergenceRow(NamedTuple):
    """One row of a clique-expansion convergence table"""

    n: int
    lambda_min_gamma_n: float
    gap: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "lambda_min": significant(self.lambda_min_gamma_n),
            "gap": significant(self.gap),
        }


def significant(x: float) -> float:
    return float(f"{x:.{REPORT_DIGITS}g}")


def limit_table(H: HoffmanGraph, n_max: int) -> List[ConvergenceRow]:
    """lambda_min of the slim graph obtained by replacing every fat vertex by an n-clique"""
    if H.fat_count == 0:
        raise NoFatVertex("the graph has no fat vertex")
    if n_max < 1:
        raise NonPositiveCliqueSize(f"n_max must be positive, got {n_max}")
    target = lambda_min(H)

    def row(n: int) -> ConvergenceRow:
        gamma = expand_fat_to_cliques(H, [(f, n) for f in H.fat_names])
        value = lambda_min(gamma)
        logger.debug("limit_table: n=%d lambda_min=%.12g", n, value)
        return ConvergenceRow(n, value, value - target)

    with ThreadPoolExecutor(max_workers=thread_count()) as pool:
        return list(pool.map(row, range(1, n_max + 1)))


# Collapsing a clique back into a fat vertex


def collapsed_norm(m: float, v2: int, v3: int) -> float:
    """Norm of the representation obtained by collapsing a clique"""
    return m + (m - 1) * v2 / (v3 + m - 1)


def _check(condition: bool, name: str) -> None:
    if not condition:
        raise HypothesisViolated(name)


def _stacked_gram(
    P1: np.ndarray, P2: np.ndarray, P3: np.ndarray, m: float
) -> Tuple[np.ndarray, int, int, int]:
    blocks = [np.atleast_2d(np.asarray(P, dtype=float)) for P in (P1, P2, P3)]
    width = max(b.shape[1] for b in blocks)
    blocks = [b.reshape(0, width) if b.size == 0 else b for b in blocks]
    _check(len({b.shape[1] for b in blocks}) == 1, "all rows have the same dimension")
    k1, k2, k3 = (b.shape[0] for b in blocks)
    _check(m > 1, "m > 1")
    _check(k3 > 0, "V3 is nonempty")
    P = np.vstack(blocks)
    G = P @ P.T
    tol = 1e-7

    def near(x: np.ndarray, value: float) -> bool:
        return bool(np.all(np.abs(x - value) < tol))

    diag = np.diag(G)
    off = G - np.diag(diag)
    _check(
        bool(np.all((np.abs(diag - m) < tol) | (np.abs(diag - 1) < tol))),
        "every vector has norm m (slim) or 1 (fat)",
    )
    _check(
        bool(np.all((np.abs(off) < tol) | (np.abs(off - 1) < tol))),
        "inner products of distinct vertices are 0 or 1",
    )
    s2, s3 = slice(k1, k1 + k2), slice(k1 + k2, k1 + k2 + k3)
    _check(near(diag[k1:], m), "V2 and V3 are slim")
    _check(near(G[:k1, s3], 0.0), "no edges between V1 and V3")
    _check(near(G[s2, s3], 1.0), "every vertex of V2 is adjacent to every vertex of V3")
    _check(near(G[s3, s3] + (1 - m) * np.eye(k3), 1.0), "V3 is a clique")
    return G, k1, k2, k3


def collapse_clique_representation(
    P1: np.ndarray, P2: np.ndarray, P3: np.ndarray, m: float
) -> np.ndarray:
    """Representation of the graph with the clique V3 collapsed into one fat vertex.

    Rows of ``P1``, ``P2``, ``P3`` are a representation of norm ``m`` of a graph
    on V1, V2, V3 where V2 and V3 are slim, V3 is a clique joined to every
    vertex of V2 and nothing in V1 touches V3. The rows of the result
    represent V1, V2 and then the new fat vertex (adjacent to all of V2);
    slim vectors get norm ``collapsed_norm(m, |V2|, |V3|)``.
    """
    G, k1, k2, k3 = _stacked_gram(P1, P2, P3, m)
    p1 = np.asarray(P1, dtype=float).reshape(k1, -1) if k1 else None
    p2 = np.asarray(P2, dtype=float).reshape(k2, -1) if k2 else None
    p3 = np.asarray(P3, dtype=float).reshape(k3, -1)
    d = p3.shape[1]

    u = p3.sum(axis=0) / math.sqrt(k3 * (k3 + m - 1))
    eps1 = 1.0 - math.sqrt(k3 / (k3 + m - 1))
    eps2 = math.sqrt((m - 1) / (k3 + m - 1))

    slim_v1 = [i for i in range(k1) if abs(G[i, i] - m) < 1e-7]
    pairs = [(i, j) for i in range(k2) for j in range(i + 1, k2)]
    width = d + len(slim_v1) + len(pairs)
    D = np.zeros((k1 + k2 + 1, width))

    if p1 is not None:
        D[:k1, :d] = p1
        for col, i in enumerate(slim_v1):
            D[i, d + col] = eps2 * math.sqrt(k2)
    if p2 is not None:
        D[k1 : k1 + k2, :d] = p2 + eps1 * np.outer(np.ones(k2), u)
        orientation = np.zeros((k2, len(pairs)))
        for col, (i, j) in enumerate(pairs):
            orientation[i, col] = 1.0
            orientation[j, col] = -1.0
        D[k1 : k1 + k2, d + len(slim_v1) :] = eps2 * orientation
    D[k1 + k2, :d] = u
    return D


def collapsed_gram(P1: np.ndarray, P2: np.ndarray, P3: np.ndarray, m: float) -> np.ndarray:
    """Gram matrix the collapsed representation must have"""
    G, k1, k2, k3 = _stacked_gram(P1, P2, P3, m)
    k = k1 + k2
    new_norm = collapsed_norm(m, k2, k3)
    result = np.zeros((k + 1, k + 1))
    result[:k, :k] = np.round(G[:k, :k])
    for i in range(k):
        if abs(G[i, i] - m) < 1e-7:
            result[i, i] = new_norm
    result[k1:k, k] = result[k, k1:k] = 1.0
    result[k, k] = 1.0
    return result
