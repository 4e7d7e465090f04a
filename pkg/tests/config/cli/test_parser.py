from __future__ import annotations

from argparse import ArgumentTypeError
from typing import TYPE_CHECKING

import pytest

from qsym.config.cli.parser import Parsed, QsymParser, parse_bound, parse_jobs

if TYPE_CHECKING:
    from qsym.pytest import QsymRunner


@pytest.mark.parametrize(("value", "expected"), [("2", 2), ("12", 12)])
def test_parse_bound(value: str, expected: int) -> None:
    assert parse_bound(value) == expected


@pytest.mark.parametrize(
    ("value", "message"),
    [
        ("x", "value must be an integer, is 'x'"),
        ("1", "value must be at least 2, is 1"),
    ],
)
def test_parse_bound_invalid(value: str, message: str) -> None:
    with pytest.raises(ArgumentTypeError, match=message):
        parse_bound(value)


@pytest.mark.parametrize(("value", "expected"), [("auto", 0), ("0", 0), ("3", 3)])
def test_parse_jobs(value: str, expected: int) -> None:
    assert parse_jobs(value) == expected


@pytest.mark.parametrize(
    ("value", "message"),
    [
        ("many", "value must be a positive number or auto"),
        ("-1", "value must be positive, is -1"),
    ],
)
def test_parse_jobs_invalid(value: str, message: str) -> None:
    with pytest.raises(ArgumentTypeError, match=message):
        parse_jobs(value)


@pytest.mark.parametrize(("verbose", "quiet", "expected"), [(2, 0, 2), (4, 1, 3), (2, 5, 0)])
def test_parsed_verbosity(verbose: int, quiet: int, expected: int) -> None:
    assert Parsed(verbose=verbose, quiet=quiet).verbosity == expected


def test_parsed_colored() -> None:
    assert Parsed(colored="yes").is_colored is True
    assert Parsed(colored="no").is_colored is False


def test_command_moved_to_front() -> None:
    parser = QsymParser.core()
    parser.add_command("demo", [], "a demo", lambda s: 0)  # noqa: ARG005
    parser.fix_defaults()
    parsed, unknown = parser.parse_known_args(["-v", "demo", "--degree-bound", "4"])
    assert parsed.command == "demo"
    assert parsed.verbose == 3
    assert parsed.degree_bound == 4
    assert unknown == []


def test_add_command_needs_command_group() -> None:
    with pytest.raises(RuntimeError, match="no sub-command group allowed"):
        QsymParser.base().add_command("demo", [], "a demo", lambda s: 0)  # noqa: ARG005


@pytest.mark.parametrize("colored", ["no", "yes"])
def test_color_option(colored: str, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv("NO_COLOR", raising=False)
    monkeypatch.setenv("FORCE_COLOR", "1" if colored == "yes" else "0")
    monkeypatch.setenv("TERM", "dumb")
    parsed, _ = QsymParser.base().parse_known_args([])
    assert parsed.colored == colored


def test_no_color_wins(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("FORCE_COLOR", "1")
    parsed, _ = QsymParser.base().parse_known_args([])
    assert parsed.colored == "no"


def test_help_shows_default_source(qsym_run: QsymRunner, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("QSYM_DEGREE_BOUND", "5")
    outcome = qsym_run("qaut", "--help")
    outcome.assert_success()
    assert "(default: 5 -> from env var QSYM_DEGREE_BOUND)" in outcome.out
    assert "(default: 6)" in outcome.out
