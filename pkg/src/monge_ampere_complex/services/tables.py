#!/usr/bin/env python3
"""
tables.py - Reproduction of the classification tables

1: pfaffian and A^2 class of the 2D equations
2: Lychagin-Rubtsov signature and Hitchin tensor class of the 3D equations
4: signature and Q Q^t spectrum of the two-variable complex model equations
5: signature class of the bieffective part, equation x complex structure
"""

from __future__ import annotations

from dataclasses import dataclass, field

from loguru import logger

from ..exceptions import UnknownNameError
from .complex_structures import STRUCTURE_NAMES, builtin
from .hermitian_invariants import (
    normalized_spectrum,
    q_matrix,
    qqt_spectrum,
    signature,
    signature_class,
    spectrum_matches,
    standard_basis,
)
from .ma_equations import (
    COMPLEX_MODELS,
    EQUATION_NAMES_4D,
    TABLE1_ORDER,
    TABLE2_ORDER,
    a_tensor_2d,
    complex_model_form,
    complex_reduction,
    equation,
    hitchin_tensor_3d,
    lr_signature,
    pfaffian_2d,
)

TABLE1_EXPECTED = {
    "laplace2": ("1", "-1"),
    "wave2": ("-1", "+1"),
    "parabolic2": ("0", "0"),
}

TABLE2_EXPECTED = {
    "hess3": ((3, 3), "+1"),
    "slag3": ((0, 6), "-1"),
    "pseudo_slag3": ((4, 2), "-1"),
    "laplace3": ((0, 3), "0"),
    "wave3": ((2, 1), "0"),
    "laplace_q2q3": ((0, 1), "0"),
    "wave_q2q3": ((1, 0), "0"),
    "parabolic3": ((0, 0), "0"),
}

TABLE5_EXPECTED = {
    "slag": ("0", "0", "0", "0", "(1,1)"),
    "hess+": ("(1,1)", "0", "(1,1)", "0", "(1,1)"),
    "hess-": ("(2,0)", "(3,2)", "(2,0)", "(3,2)", "(2,0)"),
    "plebanski1": ("(2,0)", "(3,2)", "(1,1)", "(3,2)", "(2,0)"),
    "plebanski2": ("(2,1)", "(3,2)", "(1,0)", "(3,2)", "(2,1)"),
    "grant": ("(3,2)", "(3,2)", "(3,2)", "(3,2)", "(3,2)"),
}

TABLE_TITLES = {
    "1": "Classification of 2-dimensional Monge-Ampere equations",
    "2": "Classification of 3-dimensional Monge-Ampere equations",
    "4": "Simple complex Monge-Ampere equations in complex dimension 2",
    "5": "Invariants of 4-dimensional equations per complex structure",
}


@dataclass
class TableCell:
    row: str
    column: str
    computed: str
    expected: str
    match: bool
    # (p,n,z) before the p >= n normalization
    raw_signature: str | None = None


@dataclass
class TableReport:
    which: str
    title: str
    columns: list[str]
    cells: list[TableCell] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(cell.match for cell in self.cells)

    @property
    def mismatches(self) -> list[TableCell]:
        return [cell for cell in self.cells if not cell.match]

    def add(
        self,
        row: str,
        column: str,
        computed: str,
        expected: str,
        match: bool | None = None,
        raw_signature: str | None = None,
    ) -> None:
        self.cells.append(
            TableCell(
                row, column, computed, expected, computed == expected if match is None else match, raw_signature
            )
        )

    def grid(self) -> list[list[str]]:
        """Rows of computed values in column order."""
        rows: dict[str, dict[str, str]] = {}
        for cell in self.cells:
            rows.setdefault(cell.row, {})[cell.column] = cell.computed
        return [[row, *(values.get(c, "") for c in self.columns)] for row, values in rows.items()]


def _format_signature(sig) -> str:
    return f"({sig[0]},{sig[1]})"


def _format_raw(sig) -> str:
    return f"({sig[0]},{sig[1]},{sig[2]})"


def table1() -> TableReport:
    report = TableReport("1", TABLE_TITLES["1"], ["pf", "A^2"])
    for name in TABLE1_ORDER:
        omega = equation(name).form
        pf = pfaffian_2d(omega)
        square = a_tensor_2d(omega).square_class
        expected_pf, expected_square = TABLE1_EXPECTED[name]
        report.add(name, "pf", str(pf), expected_pf)
        report.add(name, "A^2", square, expected_square)
    return report


def table2() -> TableReport:
    report = TableReport("2", TABLE_TITLES["2"], ["signature", "A^2"])
    for name in TABLE2_ORDER:
        omega = equation(name).form
        sig = lr_signature(omega)
        square = hitchin_tensor_3d(omega).square_class
        expected_sig, expected_square = TABLE2_EXPECTED[name]
        report.add(name, "signature", _format_signature(sig), _format_signature(expected_sig))
        # a degenerate metric leaves A undefined; the printed table shows 0 there
        report.add(name, "A^2", square, expected_square, square == expected_square or (
            expected_square == "0" and square == "degenerate"
        ))
    return report


def table4(structure_name: str = "J") -> TableReport:
    report = TableReport("4", TABLE_TITLES["4"], ["signature", "spectrum"])
    structure = builtin(structure_name)
    basis = standard_basis(structure.chart)
    for model in COMPLEX_MODELS:
        q = q_matrix(complex_model_form(model, structure.chart), basis)
        sig = signature(q)
        spectrum = normalized_spectrum(qqt_spectrum(q))
        sig_class = signature_class(sig)
        if sig_class != (sig.p, sig.n):
            report.notes.append(f"{model.name}: computed signature {_format_signature(sig)}")
        report.add(
            model.text,
            "signature",
            _format_signature(sig_class),
            _format_signature(model.table_signature),
            raw_signature=_format_raw(sig),
        )
        report.add(
            model.text,
            "spectrum",
            format_spectrum(spectrum),
            format_spectrum(model.table_spectrum),
            spectrum_matches(spectrum, model.table_spectrum),
        )
    return report


def table5() -> TableReport:
    report = TableReport("5", TABLE_TITLES["5"], list(STRUCTURE_NAMES))
    for name in EQUATION_NAMES_4D:
        for column, structure_name in enumerate(STRUCTURE_NAMES):
            result = complex_reduction(name, builtin(structure_name))
            raw = _format_raw(result["signature"]) if "signature" in result else None
            report.add(name, structure_name, result["cell"], TABLE5_EXPECTED[name][column], raw_signature=raw)
            if result["cell"] != "0" and result["signature"][:2] != signature_class(result["signature"]):
                report.notes.append(
                    f"{name}/{structure_name}: orientation swap of {_format_signature(result['signature'])}"
                )
    return report


def format_spectrum(values) -> str:
    parts = []
    for v in values:
        z = complex(v)
        if abs(z.imag) <= 1e-9:
            x = round(z.real, 9) + 0.0
            parts.append(f"{x:g}")
        else:
            parts.append(f"{z.real:g}{z.imag:+g}i")
    return "(" + ",".join(parts) + ")"


_TABLES = {"1": table1, "2": table2, "4": table4, "5": table5}


def reproduce(which: str | int) -> TableReport:
    key = str(which)
    if key not in _TABLES:
        raise UnknownNameError("table", key, list(_TABLES))
    report = _TABLES[key]()
    logger.info(f"table {key}: {len(report.cells) - len(report.mismatches)}/{len(report.cells)} cells match")
    return report
