import argparse
import logging
import sys
from typing import List, Optional

import config
import handlers  # noqa: F401  registers every sub-command
from utils.decorators import COMMANDS, EXIT_USAGE_ERROR

LOGGER = logging.getLogger(__name__)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got '{text}'")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _add_global_flags(parser: argparse.ArgumentParser, suppress: bool):
    # The sub-command copies must not overwrite values given before the sub-command.
    default = (lambda value: argparse.SUPPRESS) if suppress else (lambda value: value)
    group = parser.add_argument_group("global options")
    group.add_argument("--max-l", dest="max_l", type=_positive_int, default=default(None),
                       help=f"Colon-chain cap for ideals without a closed form (default {config.DEFAULT_MAX_L}, env RR_MAX_L)")
    group.add_argument("--json", action="store_true", default=default(False), help="Structured JSON output")
    group.add_argument("--staircase", action="store_true", default=default(False),
                       help="Append an ASCII staircase diagram")
    group.add_argument("--oracle", action="store_true", default=default(False),
                       help="Cross-check closed forms against the colon chain and report agreement")
    group.add_argument("--quiet", action="store_true", default=default(False), help="Only log errors")
    group.add_argument("--verbose", action="store_true", default=default(False), help="Log at DEBUG level")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=config.APP_NAME,
        description="Ratliff-Rush closures, reduction numbers and Hilbert data of monomial ideals in k[x, y].",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {config.APP_VERSION}")
    _add_global_flags(parser, suppress=False)

    shared = argparse.ArgumentParser(add_help=False)
    _add_global_flags(shared, suppress=True)

    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    for name, spec in COMMANDS.items():
        sub = subparsers.add_parser(name, help=spec.help, description=spec.help, parents=[shared])
        for flags, kwargs in spec.arguments:
            sub.add_argument(*flags, **kwargs)
    return parser


def _log_level(args: argparse.Namespace) -> int:
    if args.verbose:
        return logging.DEBUG
    if args.quiet:
        return logging.ERROR
    return getattr(logging, config.LOG_LEVEL, logging.WARNING)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on bad flags and 0 on --help/--version.
        return e.code if isinstance(e.code, int) else EXIT_USAGE_ERROR

    logging.basicConfig(
        level=_log_level(args),
        format="%(asctime)s - %(name)s [%(levelname)s] - %(message)s",
        datefmt='%Y-%m-%d %H:%M:%S',
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )

    try:
        config.validate_config()
    except ValueError as e:
        LOGGER.critical(f"CONFIGURATION ERROR: {e}")
        return EXIT_USAGE_ERROR

    LOGGER.debug(f"{config.APP_NAME} {config.APP_VERSION}: running '{args.command}'")
    return COMMANDS[args.command].handler(args)


if __name__ == "__main__":
    try:
        sys.exit(main())
    finally:
        logging.shutdown()
