"""Tests for special graphs, sums and indecomposable components."""

import random
from typing import List

import pytest

from hofflat.decomposition import hoffman_sum, indecomposable_components, is_sum, special_graphs
from hofflat.errors import NoSlimVertex, NotAPartition, NotASum
from hofflat.families import family_a3tilde, family_ht
from hofflat.graph import HoffmanGraph, are_isomorphic, parse_hg, relabel, validate
from hofflat.spectra import min_eig_at_least


def _random_part(rng: random.Random, prefix: str) -> HoffmanGraph:
    """Random graph whose private fat vertices carry the prefix; 'g' may be shared"""
    slim = [f"{prefix}{i}" for i in range(rng.randint(1, 3))]
    fat = [f"{prefix}f{i}" for i in range(rng.randint(0, 2))] + ["g"]
    edges = [
        (a, b)
        for i, a in enumerate(slim)
        for b in slim[i + 1 :]
        if rng.random() < 0.5
    ]
    edges += [(s, f) for s in slim for f in fat if rng.random() < 0.4]
    used = {f for _, f in edges if f in fat}
    return validate({"slim": slim, "fat": [f for f in fat if f in used], "edges": edges})


def _match_up_to_isomorphism(found: List[HoffmanGraph], expected: List[HoffmanGraph]) -> bool:
    pool = list(expected)
    for H in found:
        match = next((i for i, E in enumerate(pool) if are_isomorphic(H, E)), None)
        if match is None:
            return False
        pool.pop(match)
    return not pool


class TestSpecialGraphs:
    """Tests for special_graphs."""

    def test_cycle_example(self, a3tilde: HoffmanGraph) -> None:
        """Test the minus 4-cycle and the plus diagonals."""
        special = special_graphs(a3tilde)

        assert special.to_dict() == {
            "vertices": ["0", "1", "2", "3"],
            "minus": [["0", "1"], ["0", "3"], ["1", "2"], ["2", "3"]],
            "plus": [["0", "2"], ["1", "3"]],
        }
        assert special.graph().number_of_edges() == 6

    def test_plain_edge_is_plus(self) -> None:
        """Test that adjacent vertices without common fat neighbors are plus."""
        H = parse_hg("slim x\nslim y\nedge x y\n")

        assert special_graphs(H).named(special_graphs(H).plus_edges) == [("x", "y")]

    def test_shared_fat_cancels_edge(self) -> None:
        """Test that adjacency plus one common fat neighbor gives no special edge."""
        H = parse_hg("slim x\nslim y\nfat f\nedge x y\nedge x f\nedge y f\n")
        special = special_graphs(H)

        assert not special.minus_edges
        assert not special.plus_edges


class TestSums:
    """Tests for is_sum, hoffman_sum and indecomposable_components."""

    def test_glue_adds_cross_edges(self) -> None:
        """Test that slim vertices sharing a glued fat vertex become adjacent."""
        one = parse_hg("slim x\nfat g\nedge x g\n")
        two = parse_hg("slim y\nfat g\nedge y g\n")

        H = hoffman_sum([one, two])

        assert H.fat_names == ("g",)
        assert H.slim_adj == (frozenset({1}), frozenset({0}))
        assert is_sum(H, ["x"], ["y"])
        assert len(indecomposable_components(H)) == 2

    def test_duplicate_slim_name(self) -> None:
        """Test that parts must use distinct slim names."""
        with pytest.raises(NotASum):
            hoffman_sum([family_ht(1), family_ht(2)])

    def test_two_shared_fat_vertices(self) -> None:
        """Test that two common fat neighbors across parts are rejected."""
        one = parse_hg("slim x\nfat f\nfat g\nedge x f\nedge x g\n")
        two = parse_hg("slim y\nfat f\nfat g\nedge y f\nedge y g\n")

        with pytest.raises(NotASum):
            hoffman_sum([one, two])

    def test_slim_fat_name_clash(self) -> None:
        """Test that a slim name of one part may not be a fat name of another."""
        one = parse_hg("slim g\nfat f\nedge g f\n")
        two = parse_hg("slim y\nfat g\nedge y g\n")

        with pytest.raises(NotASum):
            hoffman_sum([one, two])

    def test_not_a_partition(self, a3tilde: HoffmanGraph) -> None:
        """Test that the parts must partition the slim vertices."""
        with pytest.raises(NotAPartition):
            is_sum(a3tilde, ["0", "1"], ["1", "2", "3"])
        with pytest.raises(NotAPartition):
            is_sum(a3tilde, ["0"], ["1", "2"])

    def test_indecomposable(self, a3tilde: HoffmanGraph) -> None:
        """Test that the 4-cycle example is a single component."""
        assert not is_sum(a3tilde, ["0", "2"], ["1", "3"])
        assert indecomposable_components(a3tilde) == [a3tilde]

    def test_isolated_vertex_splits_off(self) -> None:
        """Test that a slim vertex with three fat neighbors is a component of its own."""
        h3 = relabel(family_ht(3), {"f1": "f0", "f2": "g2", "f3": "g3"})
        H = hoffman_sum([h3, family_a3tilde()])

        parts = indecomposable_components(H)

        assert [P.slim_names for P in parts] == [("x",), ("0", "1", "2", "3")]
        assert H.slim_adj[0] == frozenset({1, 2})

    def test_no_slim_vertex(self) -> None:
        """Test that the empty graph has no components."""
        with pytest.raises(NoSlimVertex):
            indecomposable_components(validate({}))

    def test_randomized_sums(self) -> None:
        """Test detection, recovery and the eigenvalue bound on random sums."""
        rng = random.Random(8)
        for _ in range(100):
            one, two = _random_part(rng, "a"), _random_part(rng, "b")
            H = hoffman_sum([one, two])

            assert is_sum(H, one.slim_names, two.slim_names)
            expected = indecomposable_components(one) + indecomposable_components(two)
            assert _match_up_to_isomorphism(indecomposable_components(H), expected)
            for m in (1, 2, 3):
                both = min_eig_at_least(one, m) and min_eig_at_least(two, m)
                assert min_eig_at_least(H, m) == both
