"""Saturation under fat-vertex attachment and maximality of the E8 example"""

import logging
from fractions import Fraction
from typing import Any, Dict, Iterator, List, NamedTuple, Optional, Tuple

from .config import DEFAULT_SATURATION_CAP
from .errors import EigenvalueTooSmall, NotME8Graph, TooManySlimVertices
from .exact import rational_ldlt
from .graph import HoffmanGraph
from .lattice import E8RootSystem, dual_min_norm, e8_root_system, lattice_invariants
from .representation import E8_DOUBLED, VectorRep, reduced_gram

logger = logging.getLogger(__name__)


class SaturationResult(NamedTuple):
    """Verdict plus the least attachable slim subset when not saturated"""

    saturated: bool
    witness: Optional[Tuple[str, ...]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "saturated": self.saturated,
            "witness": None if self.witness is None else list(self.witness),
        }


def _attachable(H: HoffmanGraph, m: int) -> Iterator[Tuple[int, ...]]:
    """Slim index subsets S, in lexicographic order, such that attaching a fat
    vertex to S keeps the smallest eigenvalue at least -m"""
    g = reduced_gram(H, m).entries
    n = H.slim_count
    allowed = [i for i in range(n) if g[i][i] >= 1]

    def pair_ok(i: int, j: int) -> bool:
        return (g[i][i] - 1) * (g[j][j] - 1) >= (g[i][j] - 1) ** 2

    def passes(subset: Tuple[int, ...]) -> bool:
        members = set(subset)
        shifted = [
            [g[i][j] - (1 if i in members and j in members else 0) for j in range(n)]
            for i in range(n)
        ]
        return rational_ldlt(shifted).is_psd

    def walk(prefix: Tuple[int, ...], start: int) -> Iterator[Tuple[int, ...]]:
        for pos in range(start, len(allowed)):
            x = allowed[pos]
            if not all(pair_ok(x, y) for y in prefix):
                continue
            subset = prefix + (x,)
            if passes(subset):
                yield subset
            yield from walk(subset, pos + 1)

    yield from walk((), 0)


def attachable_subsets(H: HoffmanGraph, m: int = 3) -> List[Tuple[str, ...]]:
    """Every slim subset a new fat vertex could be attached to"""
    if not rational_ldlt(reduced_gram(H, m).entries).is_psd:
        raise EigenvalueTooSmall(m)
    return [tuple(H.slim_names[i] for i in s) for s in _attachable(H, m)]


def is_saturated(
    H: HoffmanGraph, m: int = 3, max_slim: int = DEFAULT_SATURATION_CAP
) -> SaturationResult:
    """Whether no fat vertex can be attached keeping the smallest eigenvalue >= -m"""
    if not rational_ldlt(reduced_gram(H, m).entries).is_psd:
        raise EigenvalueTooSmall(m)
    if H.slim_count > max_slim:
        raise TooManySlimVertices(
            f"{H.slim_count} slim vertices exceed the saturation cap of {max_slim}"
        )
    for subset in _attachable(H, m):
        witness = tuple(H.slim_names[i] for i in subset)
        logger.debug("fat vertex attachable to %s", witness)
        return SaturationResult(False, witness)
    return SaturationResult(True)


# Maximality of the E8 example


class SublatticeCheck(NamedTuple):
    """Lattice generated by all vertices except one"""

    vertex: str
    rank: int
    discriminant: int


class MaximalityReport(NamedTuple):
    alpha: str
    sublattices: Tuple[SublatticeCheck, ...]
    dual_min_norm: Fraction
    fat_attachment_impossible: bool
    orthogonal_roots: int
    refuted_roots: int
    adjacent_roots: int
    paired_roots: int
    slim_attachment_impossible: bool

    @property
    def confirmed(self) -> bool:
        return self.fat_attachment_impossible and self.slim_attachment_impossible

    def to_dict(self) -> Dict[str, Any]:
        return {
            "alpha": self.alpha,
            "fat_attachment": {
                "confirmed": self.fat_attachment_impossible,
                "dual_min_norm": str(self.dual_min_norm),
                "sublattices": [s._asdict() for s in self.sublattices],
            },
            "slim_attachment": {
                "confirmed": self.slim_attachment_impossible,
                "orthogonal_roots": self.orthogonal_roots,
                "refuted_roots": self.refuted_roots,
                "adjacent_roots": self.adjacent_roots,
                "paired_roots": self.paired_roots,
            },
            "confirmed": self.confirmed,
        }


def _check_me8_input(H: HoffmanGraph, rep: VectorRep) -> int:
    """Validate the input and return the index of alpha"""
    if rep.kind != E8_DOUBLED or rep.names != H.slim_names:
        raise NotME8Graph("expected an E8 embedding of the slim vertices")
    if any(len(fats) != 1 for fats in H.slim_fat):
        raise NotME8Graph("every slim vertex must have exactly one fat neighbor")
    if [list(r) for r in reduced_gram(H, 3).entries] != rep.gram():
        raise NotME8Graph("the vectors are not a reduced representation of norm 3")
    gram = rep.gram()
    n = H.slim_count
    for a in range(n):
        if all(gram[a][j] == 1 for j in range(n) if j != a):
            return a
    raise NotME8Graph("no vertex has inner product 1 with every other vertex")


def _pairs(H: HoffmanGraph, rep: VectorRep, alpha: int) -> List[Tuple[int, int]]:
    """Slim pairs {beta, alpha - beta} sharing a fat vertex"""
    a = rep.vectors[alpha]
    result = []
    for nbhd in H.fat_neighborhoods():
        if len(nbhd) != 2:
            continue
        b, c = sorted(nbhd)
        vb, vc = rep.vectors[b], rep.vectors[c]
        if all(x + y == z for x, y, z in zip(vb, vc, a)):
            result.append((b, c))
    return result


def verify_me8_maximality(H: HoffmanGraph, rep: VectorRep) -> MaximalityReport:
    """Check that neither a fat nor a slim vertex can be attached to the E8 example"""
    alpha = _check_me8_input(H, rep)
    n = H.slim_count

    sublattices = []
    for gamma in range(n):
        rest = [v for i, v in enumerate(rep.vectors) if i != gamma]
        if rest:
            inv = lattice_invariants(VectorRep(rep.kind, rep.scale, (), tuple(rest)))
            sublattices.append(SublatticeCheck(H.slim_names[gamma], inv.rank, inv.discriminant))
        else:
            sublattices.append(SublatticeCheck(H.slim_names[gamma], 0, 1))
    dual = dual_min_norm(rep)
    fat_ok = all(s.rank == 8 and s.discriminant == 1 for s in sublattices) and dual > 1
    logger.info("fat attachment: dual minimal norm %s, confirmed=%s", dual, fat_ok)

    dot = E8RootSystem.dot
    a = rep.vectors[alpha]
    pairs = _pairs(H, rep, alpha)
    roots = e8_root_system().roots
    # every root at inner product 1 with alpha must occur in a fat-shared pair
    adjacent = {d for d in roots if dot(a, d) == 1}
    covered = {rep.vectors[i] for pair in pairs for i in pair} & adjacent
    orthogonal = [d for d in roots if dot(a, d) == 0]
    refuted = 0
    for delta in orthogonal:
        for b, c in pairs:
            value = dot(rep.vectors[b], delta)
            if value not in (1, -1):
                continue
            if value == 1:
                b, c = c, b
            shares_fat = H.slim_fat[b] == H.slim_fat[c] and len(H.slim_fat[b]) == 1
            if dot(delta, rep.vectors[c]) == 1 and shares_fat:
                refuted += 1
            break
    slim_ok = bool(orthogonal) and refuted == len(orthogonal) and covered == adjacent
    logger.info(
        "slim attachment: %d of %d roots refuted, %d of %d roots paired",
        refuted,
        len(orthogonal),
        len(covered),
        len(adjacent),
    )

    return MaximalityReport(
        alpha=H.slim_names[alpha],
        sublattices=tuple(sublattices),
        dual_min_norm=dual,
        fat_attachment_impossible=fat_ok,
        orthogonal_roots=len(orthogonal),
        refuted_roots=refuted,
        adjacent_roots=len(adjacent),
        paired_roots=len(covered),
        slim_attachment_impossible=slim_ok,
    )
