"""This module handles collecting and persisting in json format the checks of a qsym command."""

from __future__ import annotations

import json
from typing import TYPE_CHECKING

from filelock import FileLock

from .certificate import (
    PresentationStore,
    certificate_entry,
    certificate_files,
    replay_certificate,
    write_certificates,
)
from .main import Journal

if TYPE_CHECKING:
    from pathlib import Path

LOCK_FILE = ".qsym.lock"


def write_journal(path: Path | None, journal: Journal) -> None:
    """
    Persist the journal as ``<path>/<command>.json`` next to the certificates of its reports.

    :param path: the output directory, nothing is written when ``None``
    :param journal: the journal
    """
    if path is None:
        return
    path.mkdir(parents=True, exist_ok=True)
    with FileLock(str(path / LOCK_FILE)):
        write_certificates(path, journal.reports)
        target = path / f"{journal.command}.json"
        target.write_text(json.dumps(journal.content, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")


__all__ = (
    "Journal",
    "PresentationStore",
    "certificate_entry",
    "certificate_files",
    "replay_certificate",
    "write_certificates",
    "write_journal",
)
