"""
isoformula.models
-----------------
Formula trees, canonical forms, occurrence relations, results and
configuration.
"""

from .arrows import LinkEquivalence, TypedRelArrow
from .canonical import Axiom, CanonicalForm, Direction, RewriteStep, RewriteTrace
from .config import IsoFormulaConfig, config
from .formula import (
    BOT,
    TOP,
    And,
    Bot,
    Formula,
    Letter,
    Not,
    Occurrence,
    Or,
    Polarity,
    Side,
    SignedLetterMultiset,
    Top,
)
from .results import CliResult, GeneralizedPair, IsoVerdict, IsoWitness, WitnessPayload

__all__ = [
    "BOT",
    "TOP",
    "And",
    "Axiom",
    "Bot",
    "CanonicalForm",
    "CliResult",
    "Direction",
    "Formula",
    "GeneralizedPair",
    "IsoFormulaConfig",
    "IsoVerdict",
    "IsoWitness",
    "Letter",
    "LinkEquivalence",
    "Not",
    "Occurrence",
    "Or",
    "Polarity",
    "RewriteStep",
    "RewriteTrace",
    "Side",
    "SignedLetterMultiset",
    "Top",
    "TypedRelArrow",
    "WitnessPayload",
    "config",
]
