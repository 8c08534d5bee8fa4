"""
isoformula.utils.exceptions
---------------------------
Custom exceptions for isoformula operations.
"""

from typing import Optional


class IsoFormulaError(Exception):
    """Base exception for all isoformula operations."""

    pass


class FormulaSyntaxError(IsoFormulaError):
    """Raised when formula text does not conform to the grammar."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


class LanguageError(IsoFormulaError):
    """Raised when a formula lies outside the sublanguage an operation requires."""

    pass


class EvaluationError(IsoFormulaError):
    """Raised when a valuation does not assign every letter of a formula."""

    pass


class LetterCapExceeded(IsoFormulaError):
    """Raised when a truth-table check would exceed the configured letter cap."""

    pass


class GuardExceeded(IsoFormulaError):
    """Raised when an oracle search would exceed its size or depth guard."""

    pass


class PositionError(IsoFormulaError):
    """Raised when a subformula path or occurrence index is invalid."""

    pass


class RewriteError(IsoFormulaError):
    """Raised when a rewrite step does not match its redex."""

    def __init__(self, message: str, step_index: Optional[int] = None) -> None:
        if step_index is not None:
            message = f"step {step_index}: {message}"
        super().__init__(message)
        self.step_index = step_index


class NotATheoremError(IsoFormulaError):
    """Raised when a derivation is requested for a pair that is not a theorem."""

    pass


class LinkingError(IsoFormulaError):
    """Raised when an occurrence relation or linking is malformed or mistyped."""

    pass


class ConstructionError(IsoFormulaError):
    """Raised when a constructive lemma's precondition or postcondition fails."""

    pass
