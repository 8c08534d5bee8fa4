"""
isoformula.cli.handlers.base
----------------------------
Base class for CLI command handlers.
"""

from abc import ABC, abstractmethod
from argparse import Namespace
from typing import List, Optional

from ...core.formulas import occurrence_path, subformula_at
from ...core.parser import parse, parse_occurrence
from ...models.config import config
from ...models.formula import Formula, Letter
from ...models.results import CliResult
from ...utils.exceptions import PositionError
from ...utils.logging_config import get_logger

logger = get_logger(__name__)

# Exit codes shared by every command
EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2


class BaseHandler(ABC):
    """Base class for all CLI command handlers."""

    @abstractmethod
    def handle(self, args: Namespace) -> int:
        """
        Handle the command with the given arguments.

        Library errors propagate; the caller turns them into EXIT_ERROR.

        Args:
            args: Parsed command line arguments

        Returns:
            EXIT_YES, EXIT_NO or EXIT_ERROR
        """
        pass

    def parse_formula(self, text: str) -> Formula:
        return parse(text)

    def max_letters(self, args: Namespace) -> Optional[int]:
        return getattr(args, "max_letters", None)

    def resolve_occurrence(self, f: Formula, text: str) -> int:
        """
        Turn ``p@2`` or ``2`` into an occurrence index of ``f``.

        Raises:
            PositionError: If the index is out of range or carries another letter
        """
        letter, index = parse_occurrence(text)
        leaf = subformula_at(f, occurrence_path(f, index))
        if letter is not None and isinstance(leaf, Letter) and leaf.name != letter:
            raise PositionError(f"occurrence {index} of {f} is {leaf.name}, not {letter}")
        return index

    def emit(self, args: Namespace, result: CliResult, lines: List[str]) -> None:
        """Print ``result`` as JSON under --json, otherwise the text lines."""
        if getattr(args, "json", False):
            print(result.model_dump_json(indent=config.json_indent, exclude_none=True))
            return
        for line in lines:
            print(line)

    def error(self, message: str) -> None:
        """Print an error message to stderr."""
        logger.error(message)
