"""Parse the qsym command line in two passes, the logging options first and then the commands of all plugins."""

from __future__ import annotations

import locale
import os
from contextlib import redirect_stderr
from pathlib import Path
from typing import TYPE_CHECKING, Callable, Dict, NamedTuple, Sequence, cast

from qsym.report import QsymHandler, setup_report

from .parser import Parsed, QsymParser

if TYPE_CHECKING:
    from qsym.session.state import State

Commands = Dict[str, Callable[["State"], int]]


class Options(NamedTuple):
    parsed: Parsed
    commands: Commands  #: command name or alias to the function running it
    log_handler: QsymHandler


def get_options(*args: str) -> Options:
    """
    :param args: the command line without the program name
    :return: the parsed arguments, the command table and the log handler, already at the requested verbosity
    """
    verbosity, log_handler = _setup_logging(args)
    parsed, commands = _parse_commands(args)
    if verbosity != parsed.verbosity:
        log_handler.update_verbosity(parsed.verbosity)
    return Options(parsed, commands, log_handler)


def _setup_logging(args: Sequence[str]) -> tuple[int, QsymHandler]:
    """Read only verbosity and color, then load the plugins with logging in place."""
    parser = QsymParser.base()
    parsed = Parsed()
    encoding = locale.getpreferredencoding(do_setlocale=False)
    try:
        with Path(os.devnull).open("w", encoding=encoding) as devnull, redirect_stderr(devnull):
            parser.parse_known_args(args, namespace=parsed)
    except SystemExit:
        ...  # the second pass reports bad arguments, e.g. ``-va``
    handler = setup_report(parsed.verbosity, parsed.is_colored)
    from qsym.plugin.manager import MANAGER  # noqa: PLC0415

    MANAGER.load_plugins()
    return parsed.verbosity, handler


def _parse_commands(args: Sequence[str]) -> tuple[Parsed, Commands]:
    parser = QsymParser.core()
    from qsym.plugin.manager import MANAGER  # noqa: PLC0415

    MANAGER.qsym_add_option(parser)
    parser.fix_defaults()
    parsed = cast(Parsed, parser.parse_args(args))
    return parsed, {name: run for name, (_, run) in parser.handlers.items()}


__all__ = (
    "Commands",
    "Options",
    "get_options",
)
