"""
isoformula.utils
----------------
Utility functions and classes.
"""

from .exceptions import (
    ConstructionError,
    EvaluationError,
    FormulaSyntaxError,
    GuardExceeded,
    IsoFormulaError,
    LanguageError,
    LetterCapExceeded,
    LinkingError,
    NotATheoremError,
    PositionError,
    RewriteError,
)
from .logging_config import configure_logging, get_logger

__all__ = [
    "ConstructionError",
    "EvaluationError",
    "FormulaSyntaxError",
    "GuardExceeded",
    "IsoFormulaError",
    "LanguageError",
    "LetterCapExceeded",
    "LinkingError",
    "NotATheoremError",
    "PositionError",
    "RewriteError",
    "configure_logging",
    "get_logger",
]
