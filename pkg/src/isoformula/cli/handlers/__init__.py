"""
isoformula.cli.handlers
-----------------------
Command handlers for the CLI interface.
"""

from .base import EXIT_ERROR, EXIT_NO, EXIT_YES, BaseHandler
from .config import ConfigHandler
from .derive import DeriveHandler
from .generalize import GeneralizeHandler
from .iso import IsoHandler
from .lemma import LemmaHandler
from .normal_form import CanonHandler, NnfHandler
from .oracle import OracleHandler
from .schema import SchemaHandler
from .taut import TautHandler

__all__ = [
    "EXIT_ERROR",
    "EXIT_NO",
    "EXIT_YES",
    "BaseHandler",
    "CanonHandler",
    "ConfigHandler",
    "DeriveHandler",
    "GeneralizeHandler",
    "IsoHandler",
    "LemmaHandler",
    "NnfHandler",
    "OracleHandler",
    "SchemaHandler",
    "TautHandler",
]
