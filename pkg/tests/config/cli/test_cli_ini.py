from __future__ import annotations

import logging
from textwrap import dedent
from typing import TYPE_CHECKING

import pytest

from qsym.config.cli.ini import DEFAULT_CONFIG_FILE, IniConfig
from qsym.config.cli.parse import get_options

if TYPE_CHECKING:
    from pathlib import Path

    from qsym.pytest import QsymRunner


@pytest.fixture
def config_file(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    path = tmp_path / "qsym.ini"
    monkeypatch.setenv("QSYM_CONFIG_FILE", str(path))
    return path


def test_ini_values(config_file: Path) -> None:
    config_file.write_text(
        dedent(
            """
            [qsym]
            degree_bound = 4
            lemma-bound = 3
            symbol_order = reverse
            allow_pos = true
            jobs = 2
            """,
        ),
    )
    parsed = get_options("qaut", "graph.json").parsed
    assert parsed.degree_bound == 4
    assert parsed.lemma_bound == 3
    assert parsed.symbol_order == "reverse"
    assert parsed.allow_pos is True
    assert parsed.jobs == 2


def test_env_var_beats_ini(config_file: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    config_file.write_text("[qsym]\ndegree_bound = 4\n")
    monkeypatch.setenv("QSYM_DEGREE_BOUND", "6")
    assert get_options("qaut", "graph.json").parsed.degree_bound == 6


def test_ini_without_section(config_file: Path) -> None:
    config_file.write_text("[other]\ndegree_bound = 4\n")
    config = IniConfig()
    assert config.has_config_file is True
    assert not config
    assert config.get("degree_bound", of_type=int) is None


def test_ini_missing(config_file: Path) -> None:
    config = IniConfig()
    assert config.has_config_file is False
    assert not config
    assert f"config file {str(config_file)!r} missing (changed via env var QSYM_CONFIG_FILE)" in config.epilog


def test_ini_default_location(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv("QSYM_CONFIG_FILE")
    config = IniConfig()
    assert config.is_env_var is False
    assert config.config_file.name == DEFAULT_CONFIG_FILE.name
    assert "(change via env var QSYM_CONFIG_FILE)" in config.epilog


def test_ini_broken(config_file: Path, caplog: pytest.LogCaptureFixture) -> None:
    config_file.write_text("not an ini file")
    config = IniConfig()
    assert config.has_config_file is None
    assert "failed to parse" in config.epilog
    assert any("failed to read config file" in record.message for record in caplog.records)


def test_ini_bad_value(config_file: Path, caplog: pytest.LogCaptureFixture) -> None:
    caplog.set_level(logging.WARNING)
    config_file.write_text("[qsym]\nrule_cap = lots\n")
    config = IniConfig()
    assert config.get("rule_cap", of_type=int) is None
    assert any("key rule_cap as type" in record.message for record in caplog.records)


def test_help_shows_ini_source(config_file: Path, qsym_run: QsymRunner) -> None:
    config_file.write_text("[qsym]\nmax_vertices = 7\n")
    outcome = qsym_run("aut", "--help")
    outcome.assert_success()
    assert "(default: 7 -> from file)" in outcome.out
    assert "active (changed via env var QSYM_CONFIG_FILE)" in outcome.out
