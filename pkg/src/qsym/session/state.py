from __future__ import annotations

from typing import TYPE_CHECKING, Callable, Sequence

from qsym.config.main import RunConfig
from qsym.journal import Journal

if TYPE_CHECKING:
    from qsym.config.cli.parse import Options
    from qsym.report import QsymHandler


class State:
    """Runtime state holder."""

    def __init__(self, options: Options, args: Sequence[str]) -> None:
        self.conf = RunConfig.make(options.parsed)
        self._options = options
        self.args = args
        self.journal: Journal = Journal(self.conf.out is not None, self.conf.command)

    @property
    def log_handler(self) -> QsymHandler:
        """:return: the handler printing log lines of this run"""
        return self._options.log_handler

    @property
    def command(self) -> Callable[[State], int]:
        """:return: the function running the requested command"""
        return self._options.commands[self.conf.command]


__all__ = ("State",)
