"""
isoformula.utils.config_loader
------------------------------
Configuration file loading utilities.

Supports YAML configuration files from:
1. ~/.config/isoformula/config.yml
2. ~/.isoformula.yml

Priority: CLI args > Environment variables > Config file > Defaults
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

logger = logging.getLogger(__name__)


def config_search_paths() -> List[Path]:
    """Return the configuration file locations, highest priority first."""
    return [
        Path.home() / ".config" / "isoformula" / "config.yml",
        Path.home() / ".isoformula.yml",
    ]


def load_yaml_config() -> Dict[str, Any]:
    """
    Load configuration from the first YAML file that exists.

    Returns:
        Dictionary of configuration values, empty dict if no file found

    Example:
        >>> config = load_yaml_config()
        >>> cap = config.get('limits', {}).get('max_letters')
    """
    for path in config_search_paths():
        if path.exists():
            try:
                return _load_yaml_file(path)
            except Exception as e:
                logger.warning(f"Failed to load config from {path}: {e}")
                continue

    return {}


def _load_yaml_file(path: Path) -> Dict[str, Any]:
    """
    Load and parse a YAML configuration file.

    Args:
        path: Path to YAML file

    Returns:
        Parsed configuration dictionary (empty when PyYAML is missing)
    """
    try:
        import yaml
    except ImportError:
        logger.info("PyYAML not installed, config file support disabled")
        return {}

    logger.info(f"Loading configuration from {path}")

    with open(path) as f:
        config = yaml.safe_load(f) or {}

    if not isinstance(config, dict):
        raise ValueError(f"top-level YAML value must be a mapping, got {type(config).__name__}")
    return config


def get_config_value(config: Dict[str, Any], *keys: str, default: Any = None) -> Any:
    """
    Get a nested configuration value.

    Args:
        config: Configuration dictionary
        *keys: Keys to traverse (e.g., 'limits', 'max_letters')
        default: Default value if key not found

    Returns:
        Configuration value or default

    Example:
        >>> get_config_value({'limits': {'max_letters': 16}}, 'limits', 'max_letters')
        16
        >>> get_config_value({}, 'missing', 'key', default='fallback')
        'fallback'
    """
    current: Any = config
    for key in keys:
        if isinstance(current, dict) and key in current:
            current = current[key]
        else:
            return default
    return current


def create_example_config(path: Optional[Path] = None) -> str:
    """
    Create an example configuration file.

    Args:
        path: Optional path to write the example config to

    Returns:
        Example configuration as YAML string
    """
    example = """# isoformula configuration file
# Priority: CLI args > Environment variables > Config file > Defaults

limits:
  # Largest number of distinct letters a truth-table check may enumerate
  max_letters: 24

  # Guard rails for the bounded rewrite oracle
  oracle_max_leaves: 12
  oracle_max_depth: 8

  # Largest occurrence count per side for exhaustive witness search
  witness_search_max_occurrences: 8

generalize:
  # Fresh letters are <prefix>1, <prefix>2, ... skipping letters already used
  fresh_prefix: q

output:
  # Indentation of --json output
  json_indent: 2

logging:
  # Log level: DEBUG, INFO, WARNING, ERROR, CRITICAL
  level: WARNING
"""

    if path:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w") as f:
            f.write(example)
        logger.info(f"Created example configuration at {path}")

    return example
