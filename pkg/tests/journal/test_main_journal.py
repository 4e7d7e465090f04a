from __future__ import annotations

import json
import socket
import sys
from typing import TYPE_CHECKING, Any

import pytest

from qsym.algebra import NCPoly, prove_members
from qsym.check import PROVED, CheckReport, Evidence
from qsym.graph import ParseError
from qsym.journal import (
    Journal,
    PresentationStore,
    certificate_entry,
    certificate_files,
    replay_certificate,
    write_certificates,
    write_journal,
)
from qsym.version import version

if TYPE_CHECKING:
    from pathlib import Path

    from qsym.algebra import Presentation


@pytest.fixture
def base_info() -> dict[str, Any]:
    return {
        "reportversion": "1",
        "qsymversion": version,
        "platform": sys.platform,
        "host": socket.getfqdn(),
        "command": "qaut",
    }


@pytest.fixture
def proved(commuting_pair: Presentation) -> CheckReport:
    a, b = NCPoly.word("a"), NCPoly.word("b")
    result = prove_members(commuting_pair, [a * b - b * a], 4)
    assert result
    evidence = Evidence(commuting_pair, result.certificate)  # type: ignore[union-attr]
    return CheckReport("qaut[banica]", "abc", PROVED, 4, 0.25, (evidence,))


def test_journal_enabled_default(base_info: dict[str, Any]) -> None:
    journal = Journal(enabled=True, command="qaut")
    assert bool(journal) is True
    assert journal.content == base_info


def test_journal_disabled_default() -> None:
    journal = Journal(enabled=False, command="qaut")
    assert bool(journal) is False
    assert journal.content == {}


def test_journal_reports(base_info: dict[str, Any], proved: CheckReport) -> None:
    journal = Journal(enabled=True, command="qaut")
    journal["verdict"] = "Proved-commutative"
    journal.add_report(proved)
    assert journal.reports == [proved]
    assert journal.content == {
        **base_info,
        "verdict": "Proved-commutative",
        "checks": [
            {
                "check": "qaut[banica]",
                "graph": "abc",
                "status": PROVED,
                "bound": 4,
                "seconds": 0.25,
                "certificates": ["certificates/qaut_banica_-abc-0.json"],
            },
        ],
    }


def test_certificate_entry(proved: CheckReport) -> None:
    evidence = proved.evidence[0]
    entry = certificate_entry(proved, evidence)
    assert entry["check"] == "qaut[banica]"
    assert entry["graph"] == "abc"
    assert entry["kind"] == "ideal"
    assert entry["presentation"] == evidence.presentations[0].fingerprint


def test_write_journal_none(proved: CheckReport) -> None:
    journal = Journal(enabled=False, command="qaut")
    journal.add_report(proved)
    write_journal(None, journal)


def test_write_journal(tmp_path: Path, proved: CheckReport, commuting_pair: Presentation) -> None:
    journal = Journal(enabled=True, command="qaut")
    journal.add_report(proved)
    out = tmp_path / "out"
    write_journal(out, journal)

    content = json.loads((out / "qaut.json").read_text())
    assert content["command"] == "qaut"
    assert content["checks"][0]["check"] == "qaut[banica]"
    files = certificate_files(out)
    assert [path.name for path in files] == ["qaut_banica_-abc-0.json"]
    assert (out / "presentations" / f"{commuting_pair.fingerprint}.json").exists()
    assert replay_certificate(files[0], PresentationStore(out)) is True


def test_write_certificates_counts(tmp_path: Path, proved: CheckReport) -> None:
    assert write_certificates(tmp_path, [proved, proved]) == 1 + 1
    assert write_certificates(tmp_path, []) == 0


def test_replay_tampered(tmp_path: Path, proved: CheckReport) -> None:
    write_certificates(tmp_path, [proved])
    path = certificate_files(tmp_path)[0]
    raw = json.loads(path.read_text())
    raw["terms"] = []
    path.write_text(json.dumps(raw))
    assert replay_certificate(path, PresentationStore(tmp_path)) is False


def test_replay_missing_presentation(tmp_path: Path, proved: CheckReport, commuting_pair: Presentation) -> None:
    write_certificates(tmp_path, [proved])
    (tmp_path / "presentations" / f"{commuting_pair.fingerprint}.json").unlink()
    with pytest.raises(ParseError, match=f"presentation {commuting_pair.fingerprint} is missing from"):
        replay_certificate(certificate_files(tmp_path)[0], PresentationStore(tmp_path))


def test_replay_unknown_kind(tmp_path: Path) -> None:
    path = tmp_path / "odd.json"
    path.write_text(json.dumps({"kind": "magic"}))
    with pytest.raises(ParseError, match="unknown certificate kind 'magic'"):
        replay_certificate(path, PresentationStore(tmp_path))


def test_replay_unreadable(tmp_path: Path) -> None:
    path = tmp_path / "broken.json"
    path.write_text("{")
    with pytest.raises(ParseError, match="cannot read"):
        replay_certificate(path, PresentationStore(tmp_path))
