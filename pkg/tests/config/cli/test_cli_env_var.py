from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional

import pytest

from qsym.config.cli.env_var import get_env_var
from qsym.config.cli.parse import get_options


def test_env_var_not_set() -> None:
    assert get_env_var("degree_bound", of_type=int) is None


def test_env_var_converted(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("QSYM_OUT", "results")
    assert get_env_var("out", of_type=Optional[Path]) == (Path("results"), "env var QSYM_OUT")  # type: ignore[arg-type]


def test_env_var_exhaustive(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("QSYM_DEGREE_BOUND", "5")
    monkeypatch.setenv("QSYM_LEMMA_BOUND", "3")
    monkeypatch.setenv("QSYM_SYMBOL_ORDER", "reverse")
    monkeypatch.setenv("QSYM_RULE_CAP", "100")
    monkeypatch.setenv("QSYM_ALLOW_POS", "yes")
    monkeypatch.setenv("QSYM_JOBS", "2")
    monkeypatch.setenv("QSYM_COLORED", "no")

    parsed = get_options("qaut", "graph.json").parsed
    assert parsed.degree_bound == 5
    assert parsed.lemma_bound == 3
    assert parsed.symbol_order == "reverse"
    assert parsed.rule_cap == 100
    assert parsed.allow_pos is True
    assert parsed.jobs == 2
    assert parsed.colored == "no"


def test_cli_beats_env_var(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("QSYM_DEGREE_BOUND", "5")
    assert get_options("qaut", "graph.json", "--degree-bound", "7").parsed.degree_bound == 7


def test_bad_env_var(monkeypatch: pytest.MonkeyPatch, caplog: pytest.LogCaptureFixture) -> None:
    caplog.set_level(logging.WARNING)
    monkeypatch.setenv("QSYM_DEGREE_BOUND", "many")
    monkeypatch.setenv("QSYM_SYMBOL_ORDER", "random")

    parsed = get_options("qaut", "graph.json").parsed
    assert parsed.degree_bound == 8
    assert parsed.symbol_order == "declaration"
    messages = [record.message for record in caplog.records]
    assert any("env var QSYM_DEGREE_BOUND='many' cannot be transformed" in m for m in messages)
    assert any("env var QSYM_SYMBOL_ORDER='random' cannot be transformed" in m for m in messages)
