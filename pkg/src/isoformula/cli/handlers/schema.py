"""
isoformula.cli.handlers.schema
------------------------------
Handler for the schema command.
"""

import json
from argparse import Namespace

from ...models.config import config
from ...models.results import CliResult
from .base import EXIT_YES, BaseHandler


class SchemaHandler(BaseHandler):
    """Print the JSON schema every --json result validates against."""

    def handle(self, args: Namespace) -> int:
        print(json.dumps(CliResult.model_json_schema(), indent=config.json_indent))
        return EXIT_YES
