"""Tests for the named example families and their claimed properties."""

from itertools import product
from typing import List, Tuple

import pytest

from hofflat.errors import BadParameters, UnsupportedT
from hofflat.families import (
    FAMILIES,
    an_plus_edges,
    build_family,
    check_claims,
    family_a3tilde,
    family_a5,
    family_an,
    family_ht,
    family_me8,
)
from hofflat.graph import are_isomorphic
from hofflat.representation import find_standard_embedding, reduced_gram
from hofflat.spectra import lambda_min


def _chain_parameters(max_total: int = 6) -> List[Tuple[int, ...]]:
    """Block sizes with at most three blocks and total at most max_total"""
    result = []
    for k in (1, 2, 3):
        for ns in product(range(1, max_total + 1), repeat=k):
            inner_ok = all(n >= 2 for n in ns[1:-1])
            if inner_ok and sum(ns) <= max_total:
                result.append(ns)
    return result


class TestHt:
    """Tests for family_ht."""

    @pytest.mark.parametrize("t", [1, 2, 3])
    def test_eigenvalue(self, t: int) -> None:
        """Test that h_t has smallest eigenvalue -t."""
        H = family_ht(t)

        assert H.fat_count == t
        assert lambda_min(H) == pytest.approx(-t)
        assert check_claims(build_family("ht", [t])) == {"lambda_min": True}

    @pytest.mark.parametrize("t", [0, 4])
    def test_unsupported(self, t: int) -> None:
        """Test that t is limited to 1, 2 and 3."""
        with pytest.raises(UnsupportedT):
            family_ht(t)


class TestA3Tilde:
    """Tests for family_a3tilde."""

    def test_claims(self) -> None:
        """Test that every claimed property holds."""
        results = check_claims(build_family("a3tilde"))

        assert set(results) == {
            "lambda_min",
            "minus_shape",
            "plus",
            "lattice",
            "saturated",
            "indecomposable",
        }
        assert all(results.values())

    def test_shape(self) -> None:
        """Test the vertex counts."""
        H = family_a3tilde()

        assert (H.slim_count, H.fat_count) == (4, 4)
        assert all(len(fats) == 2 for fats in H.slim_fat)


class TestAn:
    """Tests for family_an."""

    @pytest.mark.parametrize("ns", _chain_parameters())
    def test_claims(self, ns: Tuple[int, ...]) -> None:
        """Test the claimed properties of every small chain."""
        results = check_claims(build_family("an", ns))

        assert all(results.values()), results

    @pytest.mark.slow
    @pytest.mark.parametrize("ns", [ns for ns in _chain_parameters(8) if sum(ns) > 6])
    def test_claims_longer_chains(self, ns: Tuple[int, ...]) -> None:
        """Test the claimed properties of chains whose block sizes sum to seven or eight."""
        results = check_claims(build_family("an", ns))

        assert all(results.values()), results

    def test_sizes(self) -> None:
        """Test slim and fat counts of a three-block chain."""
        graph, psi = family_an((1, 2, 3))

        assert graph.slim_count == 7
        assert graph.fat_count == 5
        assert psi.names == graph.slim_names
        assert len(psi.vectors[0]) == 4

    def test_plus_edges(self) -> None:
        """Test that block boundaries produce plus edges."""
        assert an_plus_edges((2,)) == []
        assert an_plus_edges((2, 3)) == [("v1", "v3")]

    @pytest.mark.parametrize("ns", [(), (0,), (2, 1, 2), (3, -1)])
    def test_bad_parameters(self, ns: Tuple[int, ...]) -> None:
        """Test that block sizes are validated."""
        with pytest.raises(BadParameters):
            family_an(ns)


class TestA5:
    """Tests for family_a5."""

    def test_not_isomorphic(self) -> None:
        """Test that the two graphs differ."""
        first, second = family_a5()

        assert not are_isomorphic(first, second)

    def test_claims(self) -> None:
        """Test that both graphs share the claimed special graphs."""
        assert all(check_claims(build_family("a5")).values())


class TestME8:
    """Tests for family_me8."""

    def test_counts(self) -> None:
        """Test the vertex counts and the single fat neighbor per slim vertex."""
        graph, rep = family_me8()

        assert graph.slim_count == 57
        assert graph.fat_count == 29
        assert all(len(fats) == 1 for fats in graph.slim_fat)
        assert rep.scale == 4
        assert rep.vector("a") == rep.vectors[0]

    @pytest.mark.slow
    def test_claims(self) -> None:
        """Test that every claimed property holds."""
        assert all(check_claims(build_family("me8")).values())

    @pytest.mark.slow
    def test_no_standard_embedding(self) -> None:
        """Test that the E8 roots admit no embedding as vectors e_i +- e_j."""
        graph, _ = family_me8()

        assert find_standard_embedding(reduced_gram(graph, 3)) is None


class TestBuildFamily:
    """Tests for build_family."""

    def test_names(self) -> None:
        """Test the list of family names."""
        assert FAMILIES == ("ht", "a3tilde", "an", "a5", "me8")

    def test_unknown(self) -> None:
        """Test that an unknown family is rejected."""
        with pytest.raises(BadParameters):
            build_family("petersen")

    def test_ht_arity(self) -> None:
        """Test that ht takes exactly one parameter."""
        with pytest.raises(BadParameters):
            build_family("ht", [1, 2])
