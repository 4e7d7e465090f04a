"""The ``--version`` flag, naming the sympy behind the exact arithmetic next to qsym and its plugins."""

from __future__ import annotations

import sys
from argparse import SUPPRESS, Action, ArgumentParser, Namespace
from pathlib import Path
from typing import TYPE_CHECKING, Any, Sequence, cast

import sympy

import qsym
from qsym.plugin import impl
from qsym.plugin.manager import MANAGER
from qsym.version import version

if TYPE_CHECKING:
    from qsym.config.cli.parser import HelpFormatter, QsymParser


class ShowVersion(Action):
    def __init__(self, option_strings: Sequence[str], dest: str = SUPPRESS) -> None:
        msg = "print the qsym and sympy versions with any installed plugins, then exit"
        super().__init__(option_strings=option_strings, dest=dest, nargs=0, help=msg, default=SUPPRESS)

    def __call__(
        self,
        parser: ArgumentParser,
        namespace: Namespace,  # noqa: ARG002
        values: str | Sequence[Any] | None,  # noqa: ARG002
        option_string: str | None = None,  # noqa: ARG002
    ) -> None:
        formatter = cast("HelpFormatter", parser._get_formatter())  # noqa: SLF001
        formatter.add_raw_text(get_version_info())
        parser._print_message(formatter.format_help(), sys.stdout)  # noqa: SLF001
        parser.exit()


@impl
def qsym_add_option(parser: QsymParser) -> None:
    parser.add_argument("--version", action=ShowVersion)


def get_version_info() -> str:
    lines = [f"qsym {version} from {Path(qsym.__file__).parent.absolute()}", f"sympy {sympy.__version__}"]
    plugins = MANAGER.manager.list_plugin_distinfo()
    if plugins:
        lines.append("plugins:")
        lines.extend(
            f"    {dist.project_name}-{dist.version} at {getattr(module, '__file__', repr(module))}"
            for module, dist in plugins
        )
    return "\n".join(lines)


__all__ = (
    "ShowVersion",
    "get_version_info",
)
