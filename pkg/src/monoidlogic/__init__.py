"""Logics over finite words with monoid multiplication quantifiers.

Evaluation, arity-collapsing rewrites, for-program enumerators, syntactic
(typed) monoids, and typed block products, all checkable against a
brute-force oracle.
"""

from .errors import MonoidLogicError
from .evaluate import evaluate, is_linear_order, language_of
from .forprog import ForProgram, genlex_program, matches_order, run, validate_enumerator
from .logic import PredicateProfile, check_fragment, parse, render
from .monoids import FiniteMonoid, builtin_monoids, cyclic, reversed_monoid, symmetric, u1
from .regular import Dfa, minimize, syntactic_monoid
from .rewrite import apply_enumerator, collapse_lex, equivalent_upto, one_hot_normalize, unarize
from .typed import (
    TypedMonoid,
    block_product,
    divides,
    is_syntactic_shape,
    minimal_reduced,
    recognizes,
    symbolic_recognizes_upto,
    syntactic_typed_monoid,
)
from .words import WordStructure, word

__version__ = "0.1.0"
