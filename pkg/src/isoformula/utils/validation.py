"""
isoformula.utils.validation
---------------------------
Input validation and guard rails for isoformula.
"""

import re
from typing import Optional

from ..models.config import config
from .exceptions import GuardExceeded, LinkingError
from .logging_config import get_logger

logger = get_logger(__name__)

# Fresh names are prefix + number and must still parse as letters
_PREFIX_PATTERN = re.compile(r"^[a-z][A-Za-z0-9_]*$")


def validate_fresh_prefix(prefix: str) -> None:
    """
    Validate the prefix used for fresh letters in generalization.

    Raises:
        LinkingError: If prefix + digits would not be a letter name
    """
    if not prefix or not _PREFIX_PATTERN.match(prefix):
        raise LinkingError(f"fresh letter prefix must start with a lowercase letter, got {prefix!r}")


def check_oracle_guards(
    leaves: int, depth: int, max_leaves: Optional[int] = None, max_depth: Optional[int] = None
) -> None:
    """
    Refuse closure searches beyond the configured size and depth.

    Raises:
        GuardExceeded: If either bound is exceeded
    """
    leaf_cap = config.oracle_max_leaves if max_leaves is None else max_leaves
    depth_cap = config.oracle_max_depth if max_depth is None else max_depth
    if depth < 0:
        raise GuardExceeded(f"depth must be non-negative, got {depth}")
    if leaves > leaf_cap:
        logger.warning(f"refusing closure over {leaves} leaves (cap {leaf_cap})")
        raise GuardExceeded(f"{leaves} letter leaves exceed the oracle cap of {leaf_cap}")
    if depth > depth_cap:
        logger.warning(f"refusing closure of depth {depth} (cap {depth_cap})")
        raise GuardExceeded(f"depth {depth} exceeds the oracle cap of {depth_cap}")


def check_witness_search_size(occurrences: int, max_occurrences: Optional[int] = None) -> None:
    """
    Refuse exhaustive bijection searches over too many occurrences.

    Raises:
        GuardExceeded: If ``occurrences`` exceeds the cap
    """
    cap = config.witness_search_max_occurrences if max_occurrences is None else max_occurrences
    if occurrences > cap:
        logger.warning(f"refusing witness search over {occurrences} occurrences (cap {cap})")
        raise GuardExceeded(f"{occurrences} occurrences exceed the witness search cap of {cap}")
