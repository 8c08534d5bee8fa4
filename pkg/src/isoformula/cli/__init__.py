"""
isoformula.cli
--------------
Command-line interface components.
"""

from .main import main

__all__ = ["main"]
