"""Replay every certificate written into an output directory."""

from __future__ import annotations

from pathlib import Path
from typing import TYPE_CHECKING

from qsym.check import FAILED, PROVED, CheckReport, timed
from qsym.journal import PresentationStore, certificate_files, replay_certificate
from qsym.plugin import impl
from qsym.report import HandledError

from .common import finish

if TYPE_CHECKING:
    from qsym.config.cli.parser import QsymParser
    from qsym.session.state import State


@impl
def qsym_add_option(parser: QsymParser) -> None:
    our = parser.add_command("replay", [], "re-check the certificates of an output directory", replay)
    our.add_argument("folder", metavar="dir", type=Path, help="output directory of an earlier run")


def replay(state: State) -> int:
    folder = Path(state.conf.options.folder)
    files = certificate_files(folder)
    if not files:
        msg = f"no certificates found in {folder}"
        raise HandledError(msg)
    store = PresentationStore(folder)
    reports = []
    for path in files:
        with timed() as watch:
            valid = replay_certificate(path, store)
        detail = "" if valid else "certificate does not expand to its target"
        status = PROVED if valid else FAILED
        reports.append(CheckReport(f"replay[{path.stem}]", "", status, 0, watch.seconds, (), detail))
    return finish(state, reports)
