"""Generate the json report of a qsym run."""

from __future__ import annotations

import socket
import sys
from typing import TYPE_CHECKING, Any

from qsym.version import version

if TYPE_CHECKING:
    from qsym.check import CheckReport


class Journal:
    """The result of a qsym command."""

    def __init__(self, enabled: bool, command: str) -> None:  # noqa: FBT001
        self._enabled = enabled
        self.command = command
        self._content: dict[str, Any] = {}
        self._reports: list[CheckReport] = []

        if self._enabled:
            self._content.update(
                {
                    "reportversion": "1",
                    "qsymversion": version,
                    "platform": sys.platform,
                    "host": socket.getfqdn(),
                    "command": command,
                },
            )

    def __setitem__(self, key: str, value: Any) -> None:
        """
        Add a new entry under key into the journal.

        :param key: the key under what to add the data
        :param value: the data to add
        """
        self._content[key] = value

    def add_report(self, report: CheckReport) -> None:
        self._reports.append(report)

    @property
    def reports(self) -> list[CheckReport]:
        return list(self._reports)

    @property
    def content(self) -> dict[str, Any]:
        if self._reports:
            self._content["checks"] = [report.to_json() for report in self._reports]
        return self._content

    def __bool__(self) -> bool:
        return self._enabled


__all__ = ("Journal",)
