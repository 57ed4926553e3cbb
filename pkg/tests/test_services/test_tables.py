#!/usr/bin/env python3
"""
test_tables.py - Reproduction of the classification tables
"""

import pytest

from monge_ampere_complex.exceptions import UnknownNameError
from monge_ampere_complex.services.tables import (
    TABLE5_EXPECTED,
    TableReport,
    format_spectrum,
    reproduce,
    table1,
    table2,
    table4,
)


def test_table1():
    report = table1()
    assert report.passed, report.mismatches
    assert len(report.cells) == 6


def test_table2():
    report = table2()
    assert report.passed, report.mismatches
    assert report.grid()[0] == ["hess3", "(3,3)", "+1"]


def test_table4():
    report = table4()
    assert report.passed, report.mismatches
    assert len(report.cells) == 18


def test_table4_under_another_structure():
    assert table4("Jtilde").passed


def test_table4_keeps_the_raw_signature():
    report = table4()
    signature_cells = [c for c in report.cells if c.column == "signature"]
    assert signature_cells
    for cell in signature_cells:
        p, n, z = (int(v) for v in cell.raw_signature.strip("()").split(","))
        assert p + n + z == 5
        assert cell.computed == f"({max(p, n)},{min(p, n)})"
    assert all(c.raw_signature is None for c in report.cells if c.column == "spectrum")


@pytest.mark.slow
def test_table5():
    report = reproduce(5)
    assert report.passed, report.mismatches
    assert [row[0] for row in report.grid()] == list(TABLE5_EXPECTED)
    cells = {(c.row, c.column): c for c in report.cells}
    # both rows normalize to (2,0) under J with opposite raw orientations
    assert cells[("hess-", "J")].raw_signature == "(2,0,3)"
    assert cells[("plebanski1", "J")].raw_signature == "(0,2,3)"
    assert cells[("slag", "J")].raw_signature is None


def test_unknown_table():
    with pytest.raises(UnknownNameError):
        reproduce(3)


def test_report_grid_and_mismatches():
    report = TableReport("x", "title", ["a", "b"])
    report.add("r", "a", "1", "1")
    report.add("r", "b", "2", "3")
    assert report.grid() == [["r", "1", "2"]]
    assert not report.passed
    assert [c.column for c in report.mismatches] == ["b"]


def test_format_spectrum():
    assert format_spectrum([1, -0.0, 0.5j]) == "(1,0,0+0.5i)"
