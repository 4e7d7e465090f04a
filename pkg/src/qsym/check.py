"""Outcome of a single verification check and the certificates backing it."""

from __future__ import annotations

import re
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, Iterable, Iterator, NamedTuple, Union

from qsym.algebra import check_certificate, check_tensor_certificate

if TYPE_CHECKING:
    from qsym.algebra import Presentation, ProofCertificate, TensorCertificate

PROVED = "PROVED"
CERTIFIED = "CERTIFIED"
INCONCLUSIVE = "INCONCLUSIVE"
FAILED = "FAILED"
SUCCESS = frozenset({PROVED, CERTIFIED})


class Evidence(NamedTuple):
    """An ideal-membership certificate together with the presentation its relation indices refer to."""

    presentation: Presentation
    certificate: ProofCertificate

    @property
    def presentations(self) -> tuple[Presentation, ...]:
        return (self.presentation,)

    def replays(self) -> bool:
        return check_certificate(self.presentation, self.certificate.target, self.certificate)

    def to_json(self) -> dict[str, Any]:
        return {"kind": "ideal", **self.certificate.to_json()}


class TensorEvidence(NamedTuple):
    """A tensor certificate with one presentation per leg, a free leg carries a relation-free presentation."""

    presentations: tuple[Presentation, ...]
    certificate: TensorCertificate

    def replays(self) -> bool:
        return check_tensor_certificate(self.presentations, self.certificate)

    def to_json(self) -> dict[str, Any]:
        return {"kind": "tensor", **self.certificate.to_json()}


AnyEvidence = Union[Evidence, TensorEvidence]


def slug(name: str) -> str:
    """:return: ``name`` reduced to characters safe in file names"""
    return re.sub(r"[^A-Za-z0-9_.-]+", "_", name).strip("_")


@dataclass(frozen=True)
class CheckReport:
    """
    The result of one named check.

    ``graph`` is the hash of the graph the check ran on (empty for graph-free checks) and ``bound`` the completion
    bound that settled it. ``notes`` carry logged side facts such as flagged inferences or recorded assumptions.
    """

    name: str
    graph: str
    status: str
    bound: int
    seconds: float
    evidence: tuple[AnyEvidence, ...] = ()
    detail: str = ""
    notes: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return self.status in SUCCESS

    def certificate_ids(self) -> list[str]:
        base = slug(f"{self.name}-{self.graph}" if self.graph else self.name)
        return [f"{base}-{at}" for at in range(len(self.evidence))]

    def to_json(self) -> dict[str, Any]:
        result: dict[str, Any] = {
            "check": self.name,
            "graph": self.graph,
            "status": self.status,
            "bound": self.bound,
            "seconds": round(self.seconds, 3),
            "certificates": [f"certificates/{ident}.json" for ident in self.certificate_ids()],
        }
        if self.detail:
            result["detail"] = self.detail
        if self.notes:
            result["notes"] = list(self.notes)
        return result


_SEVERITY = {PROVED: 0, CERTIFIED: 0, INCONCLUSIVE: 1, FAILED: 2}


def combine(name: str, reports: Iterable[CheckReport]) -> CheckReport:
    """
    Merge reports of the same graph into one.

    :param name: name of the merged check
    :param reports: the parts, in order
    :return: the weakest status of the parts, the largest bound, all evidence and details in order, the distinct notes
    """
    parts = list(reports)
    status = max((part.status for part in parts), key=_SEVERITY.__getitem__, default=PROVED)
    return CheckReport(
        name,
        parts[0].graph if parts else "",
        status,
        max((part.bound for part in parts), default=0),
        sum(part.seconds for part in parts),
        tuple(evidence for part in parts for evidence in part.evidence),
        "; ".join(f"{part.name}: {part.detail}" for part in parts if part.detail),
        tuple(dict.fromkeys(note for part in parts for note in part.notes)),
    )


class Stopwatch:
    def __init__(self) -> None:
        self.seconds = 0.0


@contextmanager
def timed() -> Iterator[Stopwatch]:
    watch, start = Stopwatch(), time.monotonic()
    try:
        yield watch
    finally:
        watch.seconds = time.monotonic() - start


__all__ = (
    "CERTIFIED",
    "FAILED",
    "INCONCLUSIVE",
    "PROVED",
    "SUCCESS",
    "AnyEvidence",
    "CheckReport",
    "Evidence",
    "Stopwatch",
    "TensorEvidence",
    "combine",
    "slug",
    "timed",
)
