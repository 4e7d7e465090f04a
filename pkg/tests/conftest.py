from __future__ import annotations

from pathlib import Path
from typing import Iterator

import pytest

from qsym.algebra import GenAlphabet, NCPoly, Presentation, clear_cache

pytest_plugins = "qsym.pytest"
HERE = Path(__file__).absolute().parent


@pytest.fixture(autouse=True)
def fresh_completion_cache() -> Iterator[None]:
    yield
    clear_cache()


@pytest.fixture
def commuting_pair() -> Presentation:
    """Two self-adjoint generators that commute."""
    a, b = NCPoly.word("a"), NCPoly.word("b")
    return Presentation("comm", GenAlphabet.self_adjoint(("a", "b")), [("C", b * a - a * b)])


@pytest.fixture
def projection() -> Presentation:
    """A single self-adjoint idempotent next to a free generator."""
    a = NCPoly.word("a")
    return Presentation("proj", GenAlphabet.self_adjoint(("a", "b")), [("P", a * a - a)])
