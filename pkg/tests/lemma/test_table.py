from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import pytest

from qsym.check import PROVED
from qsym.lemma import COLUMNS, EXPECTED, verify_h2plus_isomorphism
from qsym.lemma.table import table_row


def test_expected_rows() -> None:
    assert sorted(EXPECTED) == [1, 2, 3, 4, 5, 6]
    assert COLUMNS == ("Aut", "QBic(c)", "QBic", "QBan")
    assert {row.complement_bichon for row in EXPECTED.values()} == {"commutative"}


@pytest.mark.integration
@pytest.mark.parametrize("row", [1, 2, 3, 4, 5, 6])
def test_row_matches(row: int) -> None:
    computed = table_row(row)
    assert computed.matches, computed.report().detail
    assert computed.report().status == PROVED
    assert computed.cells()[0] == f"{EXPECTED[row].aut} ({EXPECTED[row].order})"


@pytest.mark.integration
def test_row_with_executor() -> None:
    with ThreadPoolExecutor(max_workers=3) as executor:
        assert table_row(4, executor=executor).matches


@pytest.mark.integration
def test_h2plus_isomorphism() -> None:
    assert verify_h2plus_isomorphism().ok
