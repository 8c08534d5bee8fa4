"""
isoformula: deciding when two propositional formulas are isomorphic
=====================================================================

Truth tables, negation normal form, AC-canonical forms with replayable
derivations, occurrence linkings and verified isomorphism witnesses.
"""

from importlib.metadata import PackageNotFoundError
from importlib.metadata import version as _pkg_version

from .cli.main import main as cli_main
from .core.canon import (
    ac_canonical,
    canonicalization_trace,
    derive,
    is_theorem_av,
    is_theorem_nav,
    nnf,
    render,
    system_name,
)
from .core.construct import (
    canonical_bijection,
    decide_iso_boolean,
    decide_iso_generality,
    lemma4_extract,
    lemma5_implant,
    lemma6_arrow,
    lemma7_iso,
)
from .core.formulas import (
    LabeledFormula,
    is_and_or,
    is_const_and_or,
    is_diversified,
    is_neg_and_or,
    is_neg_reduced,
    join_kind,
    letters,
    occurrences,
    signed_counts,
    size,
    substitute,
    substitute_many,
    uniform_instance,
    uniform_pair_instance,
)
from .core.linking import (
    compose,
    converse,
    diversified_generalization,
    eq_closure,
    format_links,
    gen_compose,
    generalize,
    identity_arrow,
    is_bijective,
    is_perfect,
    parse_links,
    union,
    zero_arrow,
)
from .core.oracle import OracleAnswer, RewriteClosure, bounded_closure, oracle_theorem, oracle_witness_search
from .core.parser import parse, to_text
from .core.rewriting import apply_step, replay, trace_bijection
from .core.semantics import are_equivalent, evaluate, implies, is_tautology, lemma1_assignment, lemma1_substituted
from .models.arrows import LinkEquivalence, TypedRelArrow
from .models.canonical import Axiom, Direction, RewriteStep, RewriteTrace
from .models.config import config
from .models.formula import BOT, TOP, And, Bot, Formula, Letter, Not, Or, Polarity, Top
from .models.results import GeneralizedPair, IsoVerdict, IsoWitness

try:
    __version__: str = _pkg_version("isoformula")
except PackageNotFoundError:
    __version__ = "0.0.0"  # fallback for editable / uninstalled

__all__ = [
    # Formulas
    "BOT",
    "TOP",
    "And",
    "Bot",
    "Formula",
    "LabeledFormula",
    "Letter",
    "Not",
    "Or",
    "Polarity",
    "Top",
    "is_and_or",
    "is_const_and_or",
    "is_diversified",
    "is_neg_and_or",
    "is_neg_reduced",
    "join_kind",
    "letters",
    "occurrences",
    "parse",
    "signed_counts",
    "size",
    "substitute",
    "substitute_many",
    "to_text",
    "uniform_instance",
    "uniform_pair_instance",
    # Semantics
    "are_equivalent",
    "evaluate",
    "implies",
    "is_tautology",
    "lemma1_assignment",
    "lemma1_substituted",
    # Canonical forms and derivations
    "Axiom",
    "Direction",
    "RewriteStep",
    "RewriteTrace",
    "ac_canonical",
    "apply_step",
    "canonicalization_trace",
    "derive",
    "is_theorem_av",
    "is_theorem_nav",
    "nnf",
    "render",
    "replay",
    "system_name",
    "trace_bijection",
    # Linkings
    "LinkEquivalence",
    "TypedRelArrow",
    "compose",
    "converse",
    "diversified_generalization",
    "eq_closure",
    "format_links",
    "gen_compose",
    "generalize",
    "identity_arrow",
    "is_bijective",
    "is_perfect",
    "parse_links",
    "union",
    "zero_arrow",
    # Constructions
    "GeneralizedPair",
    "IsoVerdict",
    "IsoWitness",
    "canonical_bijection",
    "decide_iso_boolean",
    "decide_iso_generality",
    "lemma4_extract",
    "lemma5_implant",
    "lemma6_arrow",
    "lemma7_iso",
    # Oracle
    "OracleAnswer",
    "RewriteClosure",
    "bounded_closure",
    "oracle_theorem",
    "oracle_witness_search",
    # CLI
    "cli_main",
    # Configuration
    "config",
]
