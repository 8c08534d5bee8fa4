"""
isoformula.cli.main
-------------------
Command-line interface for isoformula.
"""

import argparse
import sys
from importlib.metadata import PackageNotFoundError
from importlib.metadata import version as _pkg_version
from typing import List, Optional

from ..utils.exceptions import IsoFormulaError
from ..utils.logging_config import configure_logging
from .handlers import (
    EXIT_ERROR,
    CanonHandler,
    ConfigHandler,
    DeriveHandler,
    GeneralizeHandler,
    IsoHandler,
    LemmaHandler,
    NnfHandler,
    OracleHandler,
    SchemaHandler,
    TautHandler,
)


def _version() -> str:
    try:
        return _pkg_version("isoformula")
    except PackageNotFoundError:
        return "0.0.0"


def main(argv: Optional[List[str]] = None) -> int:
    """
    Commands:
      - taut:       is the formula a tautology
      - nnf/canon:  negation normal form, AC-canonical form
      - derive:     rewrite trace between two theorems of the equational system
      - iso:        isomorphism under the boolean or the generality notion
      - generalize: relabel linked occurrences with fresh letters
      - lemma:      run one of the occurrence-tracked constructions
      - oracle:     brute-force cross-checks
      - config:     write an example configuration file
      - schema:     JSON schema of --json output

    Exit codes: 0 yes/ok, 1 no, 2 error.
    """
    argv = list(sys.argv[1:] if argv is None else argv)

    # Two parent parsers so global options work before OR after the subcommand
    # (e.g. both `isoformula --json canon p` and `isoformula canon p --json`).
    # The subparser parent uses SUPPRESS defaults to avoid clobbering values
    # already parsed by the main parser.
    _S = argparse.SUPPRESS

    global_opts = argparse.ArgumentParser(add_help=False)
    global_opts.add_argument("--json", action="store_true", default=_S, help="Output JSON")
    global_opts.add_argument(
        "--max-letters",
        dest="max_letters",
        type=int,
        default=_S,
        help="Largest number of distinct letters for truth tables (default: 24)",
    )
    global_opts.add_argument("--verbose", action="store_true", default=_S, help="Verbose output")

    parser = argparse.ArgumentParser(
        prog="isoformula",
        description="Decide isomorphism of propositional formulas",
    )
    parser.add_argument("--json", action="store_true", help="Output JSON")
    parser.add_argument(
        "--max-letters",
        dest="max_letters",
        type=int,
        help="Largest number of distinct letters for truth tables (default: 24)",
    )
    parser.add_argument("--verbose", action="store_true", help="Verbose output")
    parser.add_argument("--version", action="version", version=f"%(prog)s {_version()}")

    subparsers = parser.add_subparsers(dest="cmd", required=True)

    # taut
    p_taut = subparsers.add_parser("taut", help="Check whether a formula is a tautology", parents=[global_opts])
    p_taut.add_argument("formula", help="Formula text, e.g. '~p | p'")

    # nnf
    p_nnf = subparsers.add_parser("nnf", help="Negation normal form", parents=[global_opts])
    p_nnf.add_argument("formula", help="Formula text")
    p_nnf.add_argument("--trace", action="store_true", help="List the rewrite steps")

    # canon
    p_canon = subparsers.add_parser("canon", help="AC-canonical form", parents=[global_opts])
    p_canon.add_argument("formula", help="Formula text")

    # derive
    p_derive = subparsers.add_parser("derive", help="Rewrite trace from A to B", parents=[global_opts])
    p_derive.add_argument("formula_a", help="Source formula")
    p_derive.add_argument("formula_b", help="Target formula")

    # iso
    p_iso = subparsers.add_parser("iso", help="Decide isomorphism of two formulas", parents=[global_opts])
    p_iso.add_argument("formula_a", help="First formula")
    p_iso.add_argument("formula_b", help="Second formula")
    p_iso.add_argument(
        "--notion",
        choices=["generality", "boolean"],
        default="boolean",
        help="generality: theorem of the equational system; boolean: equivalent and letter-homogeneous",
    )
    p_iso.add_argument("--witness", action="store_true", help="Print the witnessing occurrence relations")

    # generalize
    p_gen = subparsers.add_parser(
        "generalize", help="Relabel linked occurrences with fresh letters", parents=[global_opts]
    )
    p_gen.add_argument("formula_a", help="Source formula")
    p_gen.add_argument("formula_b", help="Target formula")
    p_gen.add_argument(
        "--links",
        default="",
        help="Linking blocks, e.g. 's0 s1 | s2 t0'; unmentioned occurrences stay unlinked",
    )
    p_gen.add_argument("--prefix", help="Prefix of fresh letters (default: q)")

    # lemma
    p_lemma = subparsers.add_parser(
        "lemma",
        help="Run a construction",
        description=(
            "1: FORMULA SUBFORMULA-or-PATH; 4: FORMULA LETTER [OCC]; "
            "5: FORMULA OCC LETTER; 6: A B OCC-IN-A OCC-IN-B. Occurrences are written p@0 or 0."
        ),
        parents=[global_opts],
    )
    p_lemma.add_argument("--which", choices=["1", "4", "5", "6"], required=True, help="Construction to run")
    p_lemma.add_argument("arguments", nargs="+", help="Arguments of the construction")

    # oracle
    p_oracle = subparsers.add_parser("oracle", help="Brute-force cross-checks", parents=[global_opts])
    p_oracle.add_argument("mode", choices=["closure", "theorem", "witness"], help="Which check to run")
    p_oracle.add_argument("formula_a", help="First formula")
    p_oracle.add_argument("formula_b", nargs="?", help="Second formula (theorem, witness)")
    p_oracle.add_argument("--depth", type=int, default=3, help="Search depth for closure/theorem (default: 3)")

    # config
    p_config = subparsers.add_parser("config", help="Generate example configuration file", parents=[global_opts])
    p_config.add_argument("--output", help="Output path for config file (default: ~/.config/isoformula/config.yml)")
    p_config.add_argument("--force", action="store_true", help="Overwrite an existing file")

    # schema
    subparsers.add_parser("schema", help="Print the JSON schema of --json output", parents=[global_opts])

    args = parser.parse_args(argv)

    if args.verbose:
        configure_logging("DEBUG")

    # Command handler mapping
    handlers = {
        "taut": TautHandler(),
        "nnf": NnfHandler(),
        "canon": CanonHandler(),
        "derive": DeriveHandler(),
        "iso": IsoHandler(),
        "generalize": GeneralizeHandler(),
        "lemma": LemmaHandler(),
        "oracle": OracleHandler(),
        "config": ConfigHandler(),
        "schema": SchemaHandler(),
    }

    handler = handlers[args.cmd]
    try:
        return handler.handle(args)
    except IsoFormulaError as e:
        handler.error(str(e))
        return EXIT_ERROR
    except RecursionError:
        # Tree walks recurse once per nesting level
        handler.error("formula nested too deeply")
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
