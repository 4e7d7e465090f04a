"""Certificate and presentation files of an output directory, and their replay."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import TYPE_CHECKING, Any, Iterable

from qsym.algebra import Presentation, ProofCertificate, TensorCertificate, check_certificate, check_tensor_certificate
from qsym.check import Evidence, TensorEvidence
from qsym.graph import ParseError

if TYPE_CHECKING:
    from qsym.check import AnyEvidence, CheckReport

LOGGER = logging.getLogger(__name__)
CERTIFICATES = "certificates"
PRESENTATIONS = "presentations"


def certificate_entry(report: CheckReport, evidence: AnyEvidence) -> dict[str, Any]:
    """:return: the file content of one certificate, tagged with the check and the presentation fingerprints"""
    entry = {"check": report.name, "graph": report.graph, **evidence.to_json()}
    if isinstance(evidence, Evidence):
        entry["presentation"] = evidence.presentation.fingerprint
    else:
        entry["legs"] = [presentation.fingerprint for presentation in evidence.presentations]
    return entry


def _write(path: Path, content: Any) -> None:
    path.write_text(json.dumps(content, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")


def write_certificates(folder: Path, reports: Iterable[CheckReport]) -> int:
    """
    Dump the certificates of the reports together with every presentation they refer to.

    :param folder: the output directory
    :param reports: the finished reports
    :return: the number of certificate files written
    """
    (folder / CERTIFICATES).mkdir(parents=True, exist_ok=True)
    (folder / PRESENTATIONS).mkdir(parents=True, exist_ok=True)
    count = 0
    for report in reports:
        for ident, evidence in zip(report.certificate_ids(), report.evidence):
            _write(folder / CERTIFICATES / f"{ident}.json", certificate_entry(report, evidence))
            count += 1
            for presentation in evidence.presentations:
                target = folder / PRESENTATIONS / f"{presentation.fingerprint}.json"
                if not target.exists():
                    _write(target, presentation.to_json())
    LOGGER.debug("wrote %d certificates into %s", count, folder)
    return count


def _read(path: Path) -> Any:
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except (OSError, ValueError) as exception:
        msg = f"cannot read {path}: {exception}"
        raise ParseError(msg) from exception


class PresentationStore:
    """Presentations of an output directory, loaded on first use."""

    def __init__(self, folder: Path) -> None:
        self.folder = folder / PRESENTATIONS
        self._loaded: dict[str, Presentation] = {}

    def __getitem__(self, fingerprint: str) -> Presentation:
        if fingerprint not in self._loaded:
            path = self.folder / f"{fingerprint}.json"
            if not path.exists():
                msg = f"presentation {fingerprint} is missing from {self.folder}"
                raise ParseError(msg)
            try:
                self._loaded[fingerprint] = Presentation.from_json(_read(path))
            except (KeyError, TypeError, ValueError) as exception:
                msg = f"{path}: {exception}"
                raise ParseError(msg) from exception
        return self._loaded[fingerprint]


def replay_certificate(path: Path, store: PresentationStore) -> bool:
    """
    Replay one certificate file in the free algebra.

    :param path: the certificate file
    :param store: the presentations of the output directory
    :return: whether the certificate expands exactly to its target
    :raises ParseError: if the file or a presentation it names cannot be read
    """
    raw = _read(path)
    kind = raw.get("kind") if isinstance(raw, dict) else None
    try:
        if kind == "ideal":
            presentation = store[str(raw["presentation"])]
            certificate = ProofCertificate.from_json(raw)
            if presentation.fingerprint != raw["presentation"]:
                return False
            return check_certificate(presentation, certificate.target, certificate)
        if kind == "tensor":
            presentations = [store[str(fingerprint)] for fingerprint in raw["legs"]]
            tensor = TensorCertificate.from_json([p.alphabet for p in presentations], raw)
            return TensorEvidence(tuple(presentations), tensor).replays()
    except (KeyError, TypeError, ValueError) as exception:
        if isinstance(exception, ParseError):
            raise
        msg = f"{path}: {exception}"
        raise ParseError(msg) from exception
    msg = f"{path}: unknown certificate kind {kind!r}"
    raise ParseError(msg)


def certificate_files(folder: Path) -> list[Path]:
    """:return: the certificate files of an output directory, sorted by name"""
    return sorted((folder / CERTIFICATES).glob("*.json"))


__all__ = (
    "CERTIFICATES",
    "PRESENTATIONS",
    "PresentationStore",
    "certificate_entry",
    "certificate_files",
    "replay_certificate",
    "write_certificates",
)
