"""Tests for lattice invariants and the classification of reduced lattices."""

from fractions import Fraction

import pytest

from hofflat.errors import EigenvalueTooSmall, EmptyRepresentation, NotFat, NotIndecomposable
from hofflat.families import family_an, family_ht
from hofflat.graph import HoffmanGraph, parse_hg
from hofflat.lattice import (
    E8RootSystem,
    classify_reduced_lattice,
    dual_min_norm,
    e8_root_system,
    lattice_invariants,
    shortest_vector_norm,
    standard_root_basis,
)
from hofflat.representation import STANDARD, VectorRep


class TestE8RootSystem:
    """Tests for the E8 roots in doubled coordinates."""

    def test_roots(self) -> None:
        """Test that there are 240 distinct roots of norm 2."""
        roots = e8_root_system().roots

        assert len(roots) == 240
        assert len(set(roots)) == 240
        assert all(E8RootSystem.dot(r, r) == 2 for r in roots)

    def test_inner_products(self) -> None:
        """Test that roots meet with inner products in {-2, -1, 0, 1, 2}."""
        roots = e8_root_system().roots
        first = roots[0]

        values = {E8RootSystem.dot(first, r) for r in roots}

        assert values == {-2, -1, 0, 1, 2}
        assert sum(1 for r in roots if E8RootSystem.dot(first, r) == 0) == 126


class TestShortestVector:
    """Tests for shortest_vector_norm."""

    def test_reduced_form(self) -> None:
        """Test a basis whose shortest vector is not a basis vector."""
        assert shortest_vector_norm([[2, 3], [3, 5]]) == 1

    def test_diagonal(self) -> None:
        """Test the smallest diagonal entry of an orthogonal basis."""
        assert shortest_vector_norm([[3, 0], [0, 2]]) == 2

    def test_fractional(self) -> None:
        """Test a Gram matrix with rational entries."""
        assert shortest_vector_norm([[Fraction(1, 2)]]) == Fraction(1, 2)

    def test_not_definite(self) -> None:
        """Test that a singular Gram matrix is rejected."""
        with pytest.raises(ValueError):
            shortest_vector_norm([[1, 1], [1, 1]])


class TestInvariants:
    """Tests for lattice_invariants and dual_min_norm."""

    @pytest.mark.parametrize(
        "kind,n,expected",
        [
            ("A", 1, (1, 2, 2)),
            ("A", 4, (4, 5, 2)),
            ("D", 4, (4, 4, 2)),
            ("D", 6, (6, 4, 2)),
            ("E", 6, (6, 3, 2)),
            ("E", 7, (7, 2, 2)),
            ("E", 8, (8, 1, 2)),
        ],
    )
    def test_root_lattices(self, kind: str, n: int, expected: tuple) -> None:
        """Test rank, discriminant and minimal norm of the root lattices."""
        assert tuple(lattice_invariants(standard_root_basis(kind, n))) == expected

    def test_redundant_generators(self) -> None:
        """Test that dependent generators span the same lattice."""
        rep = VectorRep(STANDARD, 1, ("a", "b", "c"), ((1, 0), (0, 1), (1, 1)))

        assert tuple(lattice_invariants(rep)) == (2, 1, 1)

    def test_empty(self) -> None:
        """Test that an empty representation has no invariants."""
        with pytest.raises(EmptyRepresentation):
            lattice_invariants(VectorRep(STANDARD, 1, (), ()))

    def test_dual_min_norm(self) -> None:
        """Test the dual minimal norms of A1 and E8."""
        assert dual_min_norm(standard_root_basis("A", 1)) == Fraction(1, 2)
        assert dual_min_norm(standard_root_basis("E", 8)) == 2

    def test_unknown_root_system(self) -> None:
        """Test that only A, D and E6-E8 have a basis."""
        with pytest.raises(ValueError):
            standard_root_basis("E", 9)
        with pytest.raises(ValueError):
            standard_root_basis("D", 3)


class TestClassification:
    """Tests for classify_reduced_lattice."""

    def test_cycle_example(self, a3tilde: HoffmanGraph) -> None:
        """Test that the 4-cycle example has the standard lattice Z."""
        result = classify_reduced_lattice(a3tilde)

        assert result.label == "Standard(1)"
        assert result.to_dict() == {
            "kind": "standard",
            "n": 1,
            "rank": 1,
            "discriminant": 1,
            "min_norm": 1,
        }

    def test_three_fat_neighbors(self) -> None:
        """Test the zero lattice of a vertex with three fat neighbors."""
        result = classify_reduced_lattice(family_ht(3))

        assert result.label == "H3"
        assert result.embedding is None

    def test_one_fat_neighbor(self) -> None:
        """Test that a vertex with one fat neighbor gives A1."""
        result = classify_reduced_lattice(family_ht(1))

        assert result.label == "A(1)"
        assert result.embedding is not None

    def test_chain_family(self) -> None:
        """Test that a chain graph has a standard lattice."""
        graph, _ = family_an((2, 2))

        assert classify_reduced_lattice(graph).kind == "standard"

    def test_not_fat(self) -> None:
        """Test that every slim vertex needs a fat neighbor."""
        with pytest.raises(NotFat):
            classify_reduced_lattice(parse_hg("slim x\n"))

    def test_eigenvalue_too_small(self) -> None:
        """Test that four fat neighbors push the eigenvalue below -3."""
        H = parse_hg(
            "slim x\nfat a\nfat b\nfat c\nfat d\n"
            "edge x a\nedge x b\nedge x c\nedge x d\n"
        )

        with pytest.raises(EigenvalueTooSmall):
            classify_reduced_lattice(H)

    def test_not_indecomposable(self) -> None:
        """Test that a sum is rejected."""
        H = parse_hg("slim x\nslim y\nfat f\nfat g\nedge x f\nedge y g\n")

        with pytest.raises(NotIndecomposable):
            classify_reduced_lattice(H)
