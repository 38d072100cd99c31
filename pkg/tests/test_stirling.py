import pytest

from almval.arith import DomainError
from almval.stirling import (
    StirlingTable, check_lengyel, check_wannemacker_bound, iter_rows, scan_companion_conjecture,
    stirling2, stirling_row, wannemacker_sweep,
)
from oracles import bell_triangle, stirling_inclusion_exclusion


@pytest.mark.parametrize("n, k, expected", [(4, 2, 7), (4, 3, 6), (9, 9, 1)])
def test_stirling_examples(n, k, expected):
    assert stirling2(n, k) == expected


def test_stirling_domain():
    with pytest.raises(DomainError):
        stirling2(3, 4)


def test_stirling_matches_inclusion_exclusion():
    for n in range(0, 40):
        for k in range(n + 1):
            assert stirling2(n, k) == stirling_inclusion_exclusion(n, k)


def test_table_invariants():
    t = StirlingTable.build(30)
    for n in range(1, 31):
        assert t(n, n) == 1 and t(n, 0) == 0
        for k in range(1, n):
            assert t(n, k) == k * t(n - 1, k) + t(n - 1, k - 1)


def test_row_sums_are_bell_numbers():
    bells = bell_triangle(20)
    for n, row in enumerate(iter_rows(20)):
        assert sum(row) == bells[n]


def test_lengyel_examples():
    assert check_lengyel(2)[3 - 1]
    assert check_lengyel(2)[2 - 1]
    assert check_lengyel(1)[0]


def test_lengyel_up_to_8():
    for n in range(1, 9):
        assert all(check_lengyel(n))


def test_wannemacker_examples():
    assert check_wannemacker_bound(4)
    assert check_wannemacker_bound(1)
    assert check_wannemacker_bound(64)


def test_wannemacker_sweep_256():
    assert wannemacker_sweep(256) is None


def test_companion_examples():
    assert scan_companion_conjecture(1)[0]
    assert scan_companion_conjecture(2)[3 - 1]
    assert scan_companion_conjecture(2)[2 - 1]
    assert stirling_row(5)[4] == 10 and stirling_row(5)[3] == 25


def test_companion_scan_reports_up_to_8():
    # reported only; the identity is a suggestion, not a theorem
    report = {n: all(scan_companion_conjecture(n)) for n in range(1, 9)}
    assert report == {n: True for n in range(1, 9)}
