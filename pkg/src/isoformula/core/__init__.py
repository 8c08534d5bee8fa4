"""
isoformula.core
---------------
Parsing, semantics, normal forms, linkings and the isomorphism constructions.
"""

from .canon import ac_canonical, canonicalization_trace, derive, is_theorem_av, is_theorem_nav, nnf, render
from .construct import (
    decide_iso_boolean,
    decide_iso_generality,
    lemma4_extract,
    lemma5_implant,
    lemma6_arrow,
    lemma7_iso,
)
from .linking import (
    compose,
    converse,
    eq_closure,
    gen_compose,
    generalize,
    identity_arrow,
    is_bijective,
    is_perfect,
    union,
    zero_arrow,
)
from .oracle import bounded_closure, oracle_theorem, oracle_witness_search
from .parser import parse, to_text
from .semantics import are_equivalent, evaluate, is_tautology

__all__ = [
    "ac_canonical",
    "are_equivalent",
    "bounded_closure",
    "canonicalization_trace",
    "compose",
    "converse",
    "decide_iso_boolean",
    "decide_iso_generality",
    "derive",
    "eq_closure",
    "evaluate",
    "gen_compose",
    "generalize",
    "identity_arrow",
    "is_bijective",
    "is_perfect",
    "is_tautology",
    "is_theorem_av",
    "is_theorem_nav",
    "lemma4_extract",
    "lemma5_implant",
    "lemma6_arrow",
    "lemma7_iso",
    "nnf",
    "oracle_theorem",
    "oracle_witness_search",
    "parse",
    "render",
    "to_text",
    "union",
    "zero_arrow",
]
