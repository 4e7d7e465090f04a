from __future__ import annotations

from types import SimpleNamespace
from typing import TYPE_CHECKING

import sympy

from qsym import __version__
from qsym.plugin.manager import MANAGER

if TYPE_CHECKING:
    from pytest_mock import MockFixture

    from qsym.pytest import QsymRunner


def test_version() -> None:
    assert __version__


def test_version_without_plugin(qsym_run: QsymRunner) -> None:
    outcome = qsym_run("--version")
    outcome.assert_success()
    assert outcome.out.splitlines()[0].startswith(f"qsym {__version__} from ")
    assert "plugins:" not in outcome.out


def test_version_with_plugin(qsym_run: QsymRunner, mocker: MockFixture) -> None:
    dist = [
        (
            mocker.create_autospec("types.ModuleType", __file__="B-path"),
            SimpleNamespace(project_name="B", version="1.0"),
        ),
        (
            mocker.create_autospec("types.ModuleType", __file__="A-path"),
            SimpleNamespace(project_name="A", version="2.0"),
        ),
    ]
    mocker.patch.object(MANAGER.manager, "list_plugin_distinfo", return_value=dist)

    outcome = qsym_run("--version")

    outcome.assert_success()
    assert not outcome.err
    lines = outcome.out.splitlines()
    assert lines[0].startswith(f"qsym {__version__} from ")
    assert lines[1] == f"sympy {sympy.__version__}"
    assert lines[2:] == [
        "plugins:",
        "    B-1.0 at B-path",
        "    A-2.0 at A-path",
    ]
