from __future__ import annotations

from typing import TYPE_CHECKING

import pytest

from qsym.algebra import NCPoly, prove_members
from qsym.check import (
    CERTIFIED,
    FAILED,
    INCONCLUSIVE,
    PROVED,
    CheckReport,
    Evidence,
    combine,
    slug,
    timed,
)

if TYPE_CHECKING:
    from qsym.algebra import Presentation


@pytest.fixture
def evidence(commuting_pair: Presentation) -> Evidence:
    a, b = NCPoly.word("a"), NCPoly.word("b")
    result = prove_members(commuting_pair, [a * b - b * a], 4)
    assert result
    return Evidence(commuting_pair, result.certificate)  # type: ignore[union-attr]


@pytest.mark.parametrize(("status", "ok"), [(PROVED, True), (CERTIFIED, True), (INCONCLUSIVE, False), (FAILED, False)])
def test_ok(status: str, ok: bool) -> None:  # noqa: FBT001
    assert CheckReport("c", "g", status, 4, 0.0).ok is ok


@pytest.mark.parametrize(
    ("name", "expected"),
    [
        ("row1.QBic", "row1.QBic"),
        ("complement-invariance[with_loops]", "complement-invariance_with_loops"),
        ("a b", "a_b"),
    ],
)
def test_slug(name: str, expected: str) -> None:
    assert slug(name) == expected


def test_certificate_ids(evidence: Evidence) -> None:
    report = CheckReport("hom-relations[left]", "abc", PROVED, 4, 0.0, (evidence, evidence))
    assert report.certificate_ids() == ["hom-relations_left_-abc-0", "hom-relations_left_-abc-1"]
    assert CheckReport("h2plus", "", PROVED, 8, 0.0, (evidence,)).certificate_ids() == ["h2plus-0"]


def test_evidence_replays(evidence: Evidence) -> None:
    assert evidence.replays()
    assert evidence.presentations == (evidence.presentation,)
    assert evidence.to_json()["kind"] == "ideal"


def test_to_json(evidence: Evidence) -> None:
    report = CheckReport("c", "g", INCONCLUSIVE, 6, 1.23456, (evidence,), "stuck", ("a note",))
    assert report.to_json() == {
        "check": "c",
        "graph": "g",
        "status": INCONCLUSIVE,
        "bound": 6,
        "seconds": 1.235,
        "certificates": ["certificates/c-g-0.json"],
        "detail": "stuck",
        "notes": ["a note"],
    }
    assert "detail" not in CheckReport("c", "g", PROVED, 6, 0.0).to_json()


def test_combine_takes_the_weakest_status() -> None:
    parts = [
        CheckReport("one", "g", PROVED, 4, 1.0, notes=("n1",)),
        CheckReport("two", "g", INCONCLUSIVE, 8, 2.0, detail="open"),
        CheckReport("three", "g", CERTIFIED, 6, 0.5, notes=("n1", "n3")),
    ]
    merged = combine("all", parts)
    assert merged.status == INCONCLUSIVE
    assert merged.bound == 8
    assert merged.seconds == pytest.approx(3.5)
    assert merged.detail == "two: open"
    assert merged.notes == ("n1", "n3")
    assert merged.graph == "g"
    assert combine("none", []).status == PROVED


def test_combine_failed_wins() -> None:
    parts = [CheckReport("a", "g", INCONCLUSIVE, 4, 0.0), CheckReport("b", "g", FAILED, 4, 0.0)]
    assert combine("m", parts).status == FAILED


def test_timed() -> None:
    with timed() as watch:
        pass
    assert watch.seconds >= 0
