"""The resolved configuration of one qsym run."""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import TYPE_CHECKING

from qsym.report import HandledError
from qsym.util.cpu import resolve_jobs

from .cli.parser import MIN_BOUND

if TYPE_CHECKING:
    from qsym.algebra import SymbolOrder

    from .cli.parser import Parsed


class ConfigError(HandledError):
    """The run configuration is invalid."""


@dataclass(frozen=True)
class RunConfig:
    """Options every command shares, validated once before any check runs."""

    command: str
    graphs: tuple[Path, ...]
    degree_bound: int
    lemma_bound: int
    symbol_order: SymbolOrder
    rule_cap: int
    allow_pos: bool
    max_vertices: int
    jobs: int
    out: Path | None
    options: Parsed

    @classmethod
    def make(cls, parsed: Parsed) -> RunConfig:
        """
        Build the configuration from the parsed command line.

        :param parsed: the parsed options
        :return: the validated configuration, the output directory created when missing
        :raises ConfigError: for a bound below two, a non-positive rule cap or an output directory that is not writable
        """
        graph = getattr(parsed, "graph", None)
        conf = cls(
            command=parsed.command,
            graphs=() if graph is None else (Path(graph),),
            degree_bound=parsed.degree_bound,
            lemma_bound=parsed.lemma_bound,
            symbol_order=parsed.symbol_order,
            rule_cap=parsed.rule_cap,
            allow_pos=parsed.allow_pos,
            max_vertices=parsed.max_vertices,
            jobs=resolve_jobs(parsed.jobs),
            out=None if parsed.out is None else Path(parsed.out).absolute(),
            options=parsed,
        )
        conf.validate()
        return conf

    def validate(self) -> None:
        for name, value in (("degree bound", self.degree_bound), ("lemma bound", self.lemma_bound)):
            if value < MIN_BOUND:
                msg = f"{name} must be at least {MIN_BOUND}, is {value}"
                raise ConfigError(msg)
        if self.rule_cap < 1:
            msg = f"rule cap must be positive, is {self.rule_cap}"
            raise ConfigError(msg)
        if self.out is not None:
            try:
                self.out.mkdir(parents=True, exist_ok=True)
            except OSError as exception:
                msg = f"cannot create output directory {self.out}: {exception}"
                raise ConfigError(msg) from exception
            if not self.out.is_dir() or not os.access(self.out, os.W_OK):
                msg = f"output directory {self.out} is not writable"
                raise ConfigError(msg)


__all__ = (
    "ConfigError",
    "RunConfig",
)
