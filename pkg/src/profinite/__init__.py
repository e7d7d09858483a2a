"""Finite truncations of profinite spaces built from recognisers, and the
equational description of lattices of recognisable languages."""

from .equations import (
    Equation, EquationSet, LanguageFamily, boolean_closure, check_definable,
    defined_family, derive_equations, lattice_closure, satisfies_equation,
    subset_satisfies, verify_boolean_corollary, verify_lattice_theorem,
)
from .framework import (
    Framework, Language, Recogniser, Report, TableFramework, check_axiom_a, check_axiom_b,
    complement_language, contains, intersect_languages, union_languages,
)
from .space import (
    ApproximationSpace, approximation_space, check_duality, check_isolated,
    permutation_invariance, realize, truncate,
)
from .words import (
    Dfa, WordFramework, contains_symbol_dfa, even_length_dfa, product_dfa,
    reachable_value_tuples, run_dfa, singleton_dfa, word_enumerator,
)

__all__ = [
    "Equation", "EquationSet", "LanguageFamily", "boolean_closure", "check_definable",
    "defined_family", "derive_equations", "lattice_closure", "satisfies_equation",
    "subset_satisfies", "verify_boolean_corollary", "verify_lattice_theorem", "Framework",
    "Language", "Recogniser", "Report", "TableFramework", "check_axiom_a", "check_axiom_b",
    "complement_language", "contains", "intersect_languages", "union_languages",
    "ApproximationSpace", "approximation_space", "check_duality", "check_isolated",
    "permutation_invariance", "realize", "truncate", "Dfa", "WordFramework",
    "contains_symbol_dfa", "even_length_dfa", "product_dfa", "reachable_value_tuples",
    "run_dfa", "singleton_dfa", "word_enumerator",
]

__version__ = "0.1.0"
