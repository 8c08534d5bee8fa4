"""
Tests for configuration loading: defaults, environment and YAML files.
"""

import pytest

from isoformula.models.config import IsoFormulaConfig
from isoformula.utils import config_loader
from isoformula.utils.config_loader import create_example_config, get_config_value, load_yaml_config


@pytest.fixture(autouse=True)
def isolated_home(tmp_path, monkeypatch):
    """No user config file and no ISOFORMULA_* variables leak into the tests"""
    monkeypatch.setenv("HOME", str(tmp_path))
    for name in (
        "ISOFORMULA_MAX_LETTERS",
        "ISOFORMULA_FRESH_PREFIX",
        "ISOFORMULA_ORACLE_MAX_LEAVES",
        "ISOFORMULA_ORACLE_MAX_DEPTH",
        "ISOFORMULA_WITNESS_MAX_OCCURRENCES",
        "ISOFORMULA_JSON_INDENT",
        "ISOFORMULA_LOG_LEVEL",
    ):
        monkeypatch.delenv(name, raising=False)
    return tmp_path


def test_defaults():
    """Defaults apply without environment or file"""
    cfg = IsoFormulaConfig()
    assert cfg.max_letters == 24
    assert cfg.fresh_prefix == "q"
    assert cfg.oracle_max_depth == 8
    assert cfg.witness_search_max_occurrences == 8


def test_environment_overrides(monkeypatch):
    """ISOFORMULA_* variables override defaults"""
    monkeypatch.setenv("ISOFORMULA_MAX_LETTERS", "10")
    monkeypatch.setenv("ISOFORMULA_FRESH_PREFIX", "x")
    monkeypatch.setenv("ISOFORMULA_ORACLE_MAX_DEPTH", "4")
    cfg = IsoFormulaConfig()
    assert cfg.max_letters == 10
    assert cfg.fresh_prefix == "x"
    assert cfg.oracle_max_depth == 4


def test_yaml_file(isolated_home):
    """The example file round-trips through the loader"""
    pytest.importorskip("yaml")
    path = isolated_home / ".config" / "isoformula" / "config.yml"
    create_example_config(path)
    path.write_text(path.read_text().replace("max_letters: 24", "max_letters: 12"))
    loaded = load_yaml_config()
    assert get_config_value(loaded, "limits", "max_letters") == 12
    assert IsoFormulaConfig().max_letters == 12


def test_environment_beats_file(isolated_home, monkeypatch):
    """Environment variables win over the file"""
    pytest.importorskip("yaml")
    path = isolated_home / ".isoformula.yml"
    path.write_text("limits:\n  max_letters: 5\ngeneralize:\n  fresh_prefix: z\n")
    monkeypatch.setenv("ISOFORMULA_MAX_LETTERS", "7")
    cfg = IsoFormulaConfig()
    assert cfg.max_letters == 7
    assert cfg.fresh_prefix == "z"


def test_malformed_file_is_ignored(isolated_home):
    """A file that is not a mapping is skipped with a warning"""
    pytest.importorskip("yaml")
    (isolated_home / ".isoformula.yml").write_text("- just\n- a list\n")
    assert load_yaml_config() == {}


def test_search_paths(isolated_home):
    """The XDG location comes first"""
    paths = config_loader.config_search_paths()
    assert paths[0] == isolated_home / ".config" / "isoformula" / "config.yml"
    assert paths[1] == isolated_home / ".isoformula.yml"


def test_get_config_value_default():
    """Missing keys give the default"""
    assert get_config_value({}, "missing", "key", default="fallback") == "fallback"
    assert get_config_value({"limits": 3}, "limits", "max_letters") is None
