"""Hooks a qsym plugin may implement."""

from __future__ import annotations

from typing import TYPE_CHECKING

import pluggy

from . import NAME

if TYPE_CHECKING:
    from qsym.check import CheckReport
    from qsym.config.cli.parser import QsymParser

_spec = pluggy.HookspecMarker(NAME)


@_spec
def qsym_add_option(parser: QsymParser) -> None:
    """
    Register commands through :meth:`QsymParser.add_command <qsym.config.cli.parser.QsymParser.add_command>` or add
    global options. Runs once per invocation, after logging is configured and before the arguments are parsed, so an
    option added here can also be set through its ``QSYM_*`` environment variable or the ``[qsym]`` config section.

    :param parser: the command line parser
    """


@_spec
def qsym_on_report(report: CheckReport) -> None:
    """
    Receive a finished check. Runs for every check of a command, in the order they were requested, once the
    certificates are replayed and before the journal is written.

    :param report: the check, with its status, bound and evidence
    """


__all__ = (
    "NAME",
    "qsym_add_option",
    "qsym_on_report",
)
