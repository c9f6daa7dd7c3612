"""
Specorder - Command Line Interface
Quotient listings, specialization posets, verification suites and schema export
"""

import argparse
import sys
from collections.abc import Sequence

import orjson
from pydantic import ValidationError

from specorder.core.exceptions import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, ConfigurationError, SpecOrderError
from specorder.core.logging import get_logger, setup_logging
from specorder.schemas.common import ErrorResponse
from specorder.schemas.poset import PosetDocument
from specorder.schemas.run import RunConfig
from specorder.services.artifacts import ArtifactService, dump_json, system_from_config
from specorder.services.verification import SUITES, VerificationService

logger = get_logger(__name__)


# =============================================================================
# Argument parsing
# =============================================================================


def parse_indices(text: str | None) -> list[int] | None:
    """``"1,3"`` -> [1, 3]; ``""`` -> []; None stays None."""
    if text is None:
        return None
    items = [item.strip() for item in text.replace(" ", ",").split(",")]
    try:
        return [int(item) for item in items if item]
    except ValueError as exc:
        raise ConfigurationError(f"Invalid index list '{text}'", details={"value": text}) from exc


def parse_frobenius(text: str | None) -> list[int] | None:
    """``"id"`` or an image list such as ``"3,2,1"``."""
    if text is None or text.strip().lower() in ("", "id"):
        return None
    return parse_indices(text)


def _add_system_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", default="A", choices=["A", "B", "C", "D"], help="Dynkin family")
    parser.add_argument("--rank", type=int, default=2, help="Number of simple reflections")
    parser.add_argument("--j", default=None, help='1-based indices of J, e.g. "1,2" ("" for the empty set)')
    parser.add_argument("--frobenius", default=None, help='Images of s1..sn under F, e.g. "3,2,1", or "id"')


def _add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-order", type=int, default=None, help="Override the |W| enumeration bound")
    parser.add_argument(
        "--log-level",
        default=None,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Log level (logs go to stderr)",
    )
    parser.add_argument("--log-format", default=None, choices=["json", "console"], help="Log format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specorder",
        description="Specialization order on parabolic quotients of finite Weyl groups",
    )
    subparsers = parser.add_subparsers(dest="command", help="Commands")

    # Quotient listing
    quotient_parser = subparsers.add_parser("quotient", help="List ^JW, W^J or ^JW^K")
    _add_system_arguments(quotient_parser)
    quotient_parser.add_argument("--k", default=None, help="1-based indices of K (double quotients)")
    quotient_parser.add_argument("--side", default="left", choices=["left", "right", "double"])
    quotient_parser.add_argument("--format", dest="output_format", default="text", choices=["text", "json"])
    _add_common_arguments(quotient_parser)

    # Posets
    poset_parser = subparsers.add_parser("poset", help="Emit the specialization poset on ^JW")
    _add_system_arguments(poset_parser)
    poset_parser.add_argument("--eo", type=int, default=None, metavar="G", help="Ekedahl-Oort poset of genus G")
    poset_parser.add_argument("--format", dest="output_format", default="json", choices=["json", "dot", "csv"])
    poset_parser.add_argument("--no-matrix", action="store_true", help="Omit the relation matrix from JSON")
    _add_common_arguments(poset_parser)

    # Verification
    verify_parser = subparsers.add_parser("verify", help="Run a verification suite")
    verify_parser.add_argument("suite", help=f"One of {', '.join(SUITES)}, all")
    _add_system_arguments(verify_parser)
    verify_parser.add_argument("--k", default=None, help="1-based indices of K (howlett suite)")
    verify_parser.add_argument("--g", type=int, default=None, help="Genus for the eo suite")
    verify_parser.add_argument("--seed", type=int, default=None, help="Seed for sampled checks")
    _add_common_arguments(verify_parser)

    # JSON schema of the poset document
    schema_parser = subparsers.add_parser("schema", help="Print the JSON schema of poset documents")
    _add_common_arguments(schema_parser)

    # System summary
    info_parser = subparsers.add_parser("info", help="Describe a Coxeter system")
    _add_system_arguments(info_parser)
    info_parser.add_argument("--format", dest="output_format", default="text", choices=["text", "json"])
    _add_common_arguments(info_parser)

    return parser


def _genus_from_args(args: argparse.Namespace) -> int | None:
    """The first of ``--eo`` (poset) and ``--g`` (verify) that was given."""
    for name in ("eo", "g"):
        value = getattr(args, name, None)
        if value is not None:
            return int(value)
    return None


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Validate parsed arguments into a RunConfig."""
    values = {
        "command": args.command,
        "family": getattr(args, "family", "A"),
        "rank": getattr(args, "rank", 2),
        "j": parse_indices(getattr(args, "j", None)),
        "k": parse_indices(getattr(args, "k", None)),
        "frobenius": parse_frobenius(getattr(args, "frobenius", None)),
        "side": getattr(args, "side", "left"),
        "output_format": getattr(args, "output_format", "json"),
        "eo_genus": _genus_from_args(args),
        "include_matrix": not getattr(args, "no_matrix", False),
        "max_order": args.max_order,
        "seed": getattr(args, "seed", None),
        "suite": getattr(args, "suite", None),
    }
    try:
        return RunConfig(**values)
    except ValidationError as exc:
        errors = [{"field": ".".join(str(p) for p in e["loc"]), "message": e["msg"]} for e in exc.errors()]
        raise ConfigurationError("Invalid arguments", details={"errors": errors}) from exc


# =============================================================================
# Commands
# =============================================================================


def cmd_quotient(config: RunConfig) -> int:
    service = ArtifactService(config)
    sys.stdout.write(service.render_quotient(service.quotient_listing()))
    return EXIT_OK


def cmd_poset(config: RunConfig) -> int:
    service = ArtifactService(config)
    poset, document = service.build_poset()
    sys.stdout.write(service.render_poset(poset, document))
    return EXIT_OK


def cmd_verify(config: RunConfig) -> int:
    report = VerificationService(config).run(config.suite or "all")
    sys.stdout.write(dump_json(report.model_dump(mode="json")))
    if not report.passed:
        logger.warning(
            "Verification failed",
            extra={"suite": report.suite, "counterexamples": len(report.counterexamples)},
        )
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_schema(config: RunConfig) -> int:
    sys.stdout.write(dump_json(PosetDocument.model_json_schema()))
    return EXIT_OK


def cmd_info(config: RunConfig) -> int:
    system = system_from_config(config)
    summary = {
        "name": system.name,
        "order": system.order,
        "positive_roots": system.num_positive_roots,
        "coxeter_matrix": [list(row) for row in system.coxeter_matrix],
        "frobenius": [i + 1 for i in system.frobenius],
    }
    if str(config.output_format) == "json":
        sys.stdout.write(dump_json(summary))
        return EXIT_OK

    lines = [
        f"system          {summary['name']}",
        f"|W|             {summary['order']}",
        f"|Phi+|          {summary['positive_roots']}",
        f"frobenius       {' '.join(str(i) for i in summary['frobenius'])}",
        "coxeter matrix",
    ]
    lines.extend("  " + " ".join(str(m) for m in row) for row in system.coxeter_matrix)
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


COMMANDS = {
    "quotient": cmd_quotient,
    "poset": cmd_poset,
    "verify": cmd_verify,
    "schema": cmd_schema,
    "info": cmd_info,
}


def _report_error(exc: SpecOrderError) -> None:
    document = ErrorResponse(**exc.to_dict())
    sys.stderr.write(orjson.dumps(document.model_dump(mode="json"), default=str).decode("utf-8") + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    """Main CLI entry point."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE

    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    setup_logging(level=args.log_level, fmt=args.log_format)
    try:
        config = config_from_args(args)
        return COMMANDS[args.command](config)
    except SpecOrderError as exc:
        logger.debug("Command failed", extra={"error_code": exc.error_code})
        _report_error(exc)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
