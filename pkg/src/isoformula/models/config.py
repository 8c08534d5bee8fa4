"""
isoformula.models.config
------------------------
Configuration constants and settings for isoformula.

Configuration priority (highest to lowest):
1. Explicit parameters (e.g., is_tautology(f, max_letters=8) or --max-letters)
2. Environment variables (e.g., ISOFORMULA_MAX_LETTERS)
3. Configuration file (~/.config/isoformula/config.yml)
4. Default values
"""

import os
from dataclasses import dataclass


@dataclass
class IsoFormulaConfig:
    """Configuration settings for isoformula operations."""

    # Truth tables enumerate 2**max_letters valuations
    max_letters: int = 24

    # Generalization
    fresh_prefix: str = "q"

    # Oracle guard rails
    oracle_max_leaves: int = 12
    oracle_max_depth: int = 8
    witness_search_max_occurrences: int = 8

    # Output
    json_indent: int = 2

    # Logging
    log_level: str = "WARNING"

    def __post_init__(self) -> None:
        """Apply configuration from environment and files after initialization."""
        self._load_from_environment()
        self._load_from_file()

    def _load_from_environment(self) -> None:
        """Load configuration from environment variables."""
        env_val = os.getenv("ISOFORMULA_MAX_LETTERS")
        if env_val:
            self.max_letters = int(env_val)
        env_val = os.getenv("ISOFORMULA_FRESH_PREFIX")
        if env_val:
            self.fresh_prefix = env_val
        env_val = os.getenv("ISOFORMULA_ORACLE_MAX_LEAVES")
        if env_val:
            self.oracle_max_leaves = int(env_val)
        env_val = os.getenv("ISOFORMULA_ORACLE_MAX_DEPTH")
        if env_val:
            self.oracle_max_depth = int(env_val)
        env_val = os.getenv("ISOFORMULA_WITNESS_MAX_OCCURRENCES")
        if env_val:
            self.witness_search_max_occurrences = int(env_val)
        env_val = os.getenv("ISOFORMULA_JSON_INDENT")
        if env_val:
            self.json_indent = int(env_val)
        env_val = os.getenv("ISOFORMULA_LOG_LEVEL")
        if env_val:
            self.log_level = env_val

    def _load_from_file(self) -> None:
        """Load configuration from YAML file if available."""
        try:
            from ..utils.config_loader import get_config_value, load_yaml_config

            file_config = load_yaml_config()
            if not file_config:
                return

            # Apply file config (only if not already set by environment)
            if not os.getenv("ISOFORMULA_MAX_LETTERS"):
                max_letters = get_config_value(file_config, "limits", "max_letters")
                if max_letters is not None:
                    self.max_letters = int(max_letters)

            if not os.getenv("ISOFORMULA_ORACLE_MAX_LEAVES"):
                leaves = get_config_value(file_config, "limits", "oracle_max_leaves")
                if leaves is not None:
                    self.oracle_max_leaves = int(leaves)

            if not os.getenv("ISOFORMULA_ORACLE_MAX_DEPTH"):
                depth = get_config_value(file_config, "limits", "oracle_max_depth")
                if depth is not None:
                    self.oracle_max_depth = int(depth)

            if not os.getenv("ISOFORMULA_WITNESS_MAX_OCCURRENCES"):
                occurrences = get_config_value(file_config, "limits", "witness_search_max_occurrences")
                if occurrences is not None:
                    self.witness_search_max_occurrences = int(occurrences)

            if not os.getenv("ISOFORMULA_FRESH_PREFIX"):
                prefix = get_config_value(file_config, "generalize", "fresh_prefix")
                if prefix:
                    self.fresh_prefix = str(prefix)

            if not os.getenv("ISOFORMULA_JSON_INDENT"):
                indent = get_config_value(file_config, "output", "json_indent")
                if indent is not None:
                    self.json_indent = int(indent)

            if not os.getenv("ISOFORMULA_LOG_LEVEL"):
                log_level = get_config_value(file_config, "logging", "level")
                if log_level:
                    self.log_level = log_level

        except ImportError:
            # Config loader not available, skip file loading
            pass


# Global configuration instance
config = IsoFormulaConfig()
