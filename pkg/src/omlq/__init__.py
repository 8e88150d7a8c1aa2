"""Finite orthomodular lattices, quantum-logic connectives and
lattice-valued automata, regular expressions and languages."""

from .automata import (
    EPS,
    LAutomaton,
    complement_det,
    concat_aut,
    decompose_by_range,
    determinize,
    eps_reduce,
    equiv_degree_exact,
    fold_aut,
    hom_preimage_aut,
    inverse_aut,
    is_deterministic,
    product_aut,
    table_automaton,
    union_aut,
)
from .builtins import builtin, resolve_lattice
from .errors import OmlqError
from .language import (
    AutomatonLanguage,
    FiniteTable,
    Language,
    RegexLanguage,
    equiv_degree_bounded,
    reg_witness,
)
from .lattice import OrthoLattice, product_lattice, validate_lattice
from .logic import DEFAULT_IMPL, ImplKind, biimplies, check_bvn, implies, sasaki_residual
from .regex import Regex, kleene_representation, parse_regex, regex_eval, to_text

__version__ = "0.1.0"

__all__ = [
    "EPS", "LAutomaton", "complement_det", "concat_aut", "decompose_by_range", "determinize",
    "eps_reduce", "equiv_degree_exact", "fold_aut", "hom_preimage_aut", "inverse_aut",
    "is_deterministic", "product_aut", "table_automaton", "union_aut", "builtin",
    "resolve_lattice", "OmlqError", "AutomatonLanguage", "FiniteTable", "Language",
    "RegexLanguage", "equiv_degree_bounded", "reg_witness", "OrthoLattice", "product_lattice",
    "validate_lattice", "DEFAULT_IMPL", "ImplKind", "biimplies", "check_bvn", "implies",
    "sasaki_residual", "Regex", "kleene_representation", "parse_regex", "regex_eval", "to_text",
]
