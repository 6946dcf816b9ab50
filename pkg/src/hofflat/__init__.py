"""Fat Hoffman graphs with smallest eigenvalue at least -3.

Exact spectral tests, reduced representations and their lattices,
decomposition into indecomposable parts, saturation, the standard
example families and small exhaustive enumerations.
"""

import sys

from .cli import HofflatApplication
from .decomposition import (
    SpecialGraphs,
    hoffman_sum,
    indecomposable_components,
    is_sum,
    special_graphs,
)
from .dynkin import DynkinShape, recognize_shape
from .enumeration import CorpusReport, Violation, enumerate_graphs, verify_corpus
from .errors import HoffmanError
from .families import (
    FamilyInstance,
    build_family,
    check_claims,
    family_a3tilde,
    family_a5,
    family_an,
    family_ht,
    family_me8,
)
from .graph import (
    GraphDescription,
    HoffmanGraph,
    are_isomorphic,
    attach_fat,
    find_isomorphism,
    format_hg,
    induced_closure,
    load_hg,
    parse_hg,
    parse_hg_stream,
    predicates,
    validate,
)
from .lattice import LatticeClass, classify_reduced_lattice, lattice_invariants
from .representation import (
    ReducedGram,
    VectorRep,
    build_representation,
    find_e8_embedding,
    find_standard_embedding,
    reduce_representation,
    reduced_gram,
)
from .saturation import MaximalityReport, SaturationResult, is_saturated, verify_me8_maximality
from .spectra import (
    b_matrix,
    collapse_clique_representation,
    expand_fat_to_cliques,
    lambda_min,
    limit_table,
    min_eig_at_least,
)

__version__ = "26.10.0"

__all__ = [
    "CorpusReport",
    "DynkinShape",
    "FamilyInstance",
    "GraphDescription",
    "HofflatApplication",
    "HoffmanError",
    "HoffmanGraph",
    "LatticeClass",
    "MaximalityReport",
    "ReducedGram",
    "SaturationResult",
    "SpecialGraphs",
    "VectorRep",
    "Violation",
    "are_isomorphic",
    "attach_fat",
    "b_matrix",
    "build_family",
    "build_representation",
    "check_claims",
    "classify_reduced_lattice",
    "collapse_clique_representation",
    "enumerate_graphs",
    "expand_fat_to_cliques",
    "family_a3tilde",
    "family_a5",
    "family_an",
    "family_ht",
    "family_me8",
    "find_e8_embedding",
    "find_isomorphism",
    "find_standard_embedding",
    "format_hg",
    "hoffman_sum",
    "indecomposable_components",
    "induced_closure",
    "is_saturated",
    "is_sum",
    "lambda_min",
    "lattice_invariants",
    "limit_table",
    "load_hg",
    "main",
    "min_eig_at_least",
    "parse_hg",
    "parse_hg_stream",
    "predicates",
    "reduce_representation",
    "reduced_gram",
    "special_graphs",
    "validate",
    "verify_corpus",
    "verify_me8_maximality",
]


def main() -> None:
    """Main entry point for the command-line tool"""
    app = HofflatApplication()
    code = app.run()
    if code:
        sys.exit(code)


if __name__ == "__main__":
    main()
