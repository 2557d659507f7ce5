import argparse
import functools
import logging
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Tuple

from errors import ParseError, RatliffRushError

LOGGER = logging.getLogger(__name__)

HandlerCallable = Callable[[argparse.Namespace], int]

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2


@dataclass
class CommandSpec:
    name: str
    handler: HandlerCallable
    help: str
    arguments: List[Tuple[Tuple[str, ...], Dict[str, Any]]] = field(default_factory=list)


COMMANDS: Dict[str, CommandSpec] = {}


def argument(*flags: str, **kwargs: Any) -> Tuple[Tuple[str, ...], Dict[str, Any]]:
    return flags, kwargs


def command(name: str, help: str, arguments=()) -> Callable[[HandlerCallable], HandlerCallable]:
    """Registers a sub-command; handlers/__init__.py imports the modules that use it."""
    def decorator(func: HandlerCallable) -> HandlerCallable:
        if name in COMMANDS:
            raise RuntimeError(f"Sub-command '{name}' registered twice ({COMMANDS[name].handler.__name__}, {func.__name__})")
        COMMANDS[name] = CommandSpec(name, func, help, list(arguments))
        LOGGER.debug(f"Registered sub-command '{name}' -> {func.__module__}.{func.__name__}")
        return func
    return decorator


def domain_errors(func: HandlerCallable) -> HandlerCallable:
    """Turns library errors into a diagnostic on stderr and the matching exit code."""
    @functools.wraps(func)
    def wrapper(args: argparse.Namespace) -> int:
        try:
            return func(args)
        except ParseError as e:
            LOGGER.debug(f"Parse error in '{e.text}' at {e.position}")
            print(f"rr: parse error {e}\n{e.pointer()}", file=sys.stderr)
            return EXIT_USAGE_ERROR
        except RatliffRushError as e:
            LOGGER.error(f"{type(e).__name__} while running '{args.command}': {e}")
            print(f"rr: {type(e).__name__}: {e}", file=sys.stderr)
            return EXIT_DOMAIN_ERROR
    return wrapper


def usage_error(message: str) -> int:
    print(f"rr: error: {message}", file=sys.stderr)
    return EXIT_USAGE_ERROR
