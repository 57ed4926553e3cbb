#!/usr/bin/env python3
"""
report_service.py - Builds the report document of every front-end command

The CLI and the HTTP routes both go through ReportService, so a command
returns the same tree whichever surface asked for it.
"""

from __future__ import annotations

from typing import Any

from loguru import logger

from ..config import Settings, get_settings
from ..exceptions import InvalidParameterError
from ..models.report import CellModel, ReportDocument, SignatureModel, SpectrumValue
from .bieffective import decompose, is_bieffective, is_primitive
from .complex_structures import COMPLEX_LABELS, builtin
from .exterior_algebra import Form
from .form_parser import format_form, parse_form
from .ma_equations import complex_reduction, equation, symbol_reduce
from .solutions import (
    VerificationReport,
    run_proposition,
    verify_generalized,
    worked_example_regular,
    worked_example_surface,
)
from .symplectic_ops import verify_vb_relations
from .tables import TableReport, format_spectrum, reproduce


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _check(row: str, flag: bool) -> CellModel:
    return CellModel(row=row, column="check", computed=_yes(flag), expected="yes", match=flag)


def table_document(report: TableReport, inputs: dict[str, Any] | None = None) -> ReportDocument:
    return ReportDocument(
        command="table",
        inputs=inputs or {"which": report.which},
        cells=[CellModel(**vars(cell)) for cell in report.cells],
        notes=report.notes,
        passed=report.passed,
    )


def verification_document(
    command: str, report: VerificationReport, inputs: dict[str, Any]
) -> ReportDocument:
    cells = [
        CellModel(
            row=report.name,
            column=key,
            computed=f"{value:.3e}",
            expected=f"<= {report.tol:.1e}",
            match=value <= report.tol,
        )
        for key, value in report.maxima.items()
    ]
    return ReportDocument(
        command=command,
        inputs={**inputs, "samples": report.samples, "tol": report.tol},
        cells=cells,
        residual_max=report.residual_max,
        notes=report.notes,
        passed=report.passed,
    )


class ReportService:
    """One method per command; each returns a ReportDocument."""

    def __init__(self, settings: Settings | None = None):
        self.settings = settings or get_settings()

    def _form(
        self, structure, expression: str | None, equation_name: str | None
    ) -> tuple[Form, dict[str, Any]]:
        """Form on R^8; chart-basis expressions are pulled back through the structure's chart."""
        if expression and equation_name:
            raise InvalidParameterError("form", "give either an expression or an equation, not both")
        if expression:
            omega = parse_form(expression, dim=8)
            if omega.labels == COMPLEX_LABELS:
                omega = structure.chart.pull(omega)
            return omega, {"form": expression}
        if equation_name:
            eq = equation(equation_name)
            if eq.dimension != 4:
                raise InvalidParameterError("equation", f"{eq.name} is not a 4-variable equation")
            return eq.form, {"equation": eq.name}
        raise InvalidParameterError("form", "an expression or an equation is required")

    def relations(self, structure: str) -> ReportDocument:
        pair = builtin(structure).pair
        report = verify_vb_relations(pair)
        cells = [
            CellModel(row=v.relation, column=str(v.basis), computed="violated", expected="holds", match=False)
            for v in report.violations
        ]
        cells += [
            CellModel(row=name, column="kernel", computed=str(dim), expected="0", match=dim == 0)
            for name, dim in report.kernels.items()
        ]
        return ReportDocument(
            command="relations",
            inputs={"structure": pair.name},
            cells=cells,
            notes=[
                f"{report.checked} identity checks on the full basis",
                f"{len(report.kernels)} injectivity checks of top_j below and perp_j above the middle degree",
            ],
            passed=report.passed,
        )

    def decompose(
        self, structure: str, expression: str | None = None, equation_name: str | None = None
    ) -> ReportDocument:
        s = builtin(structure)
        omega, inputs = self._form(s, expression, equation_name)
        parts = decompose(omega, s.pair)
        cells = [
            CellModel(row="omega0", column="value", computed=format_form(parts.omega0)),
            CellModel(row="omega1", column="value", computed=format_form(parts.omega1)),
            CellModel(row="omega2", column="value", computed=format_form(parts.omega2)),
            CellModel(row="w11", column="value", computed=str(parts.w11)),
            CellModel(row="w12", column="value", computed=str(parts.w12)),
            CellModel(row="w22", column="value", computed=str(parts.w22)),
            _check("omega0 bieffective", is_bieffective(parts.omega0, s.pair)),
            _check("omega1 primitive", is_primitive(parts.omega1, s.pair)),
            _check("omega2 primitive", is_primitive(parts.omega2, s.pair)),
            _check("primitive cofactors found", parts.primitive),
        ]
        return ReportDocument(
            command="decompose",
            inputs={**inputs, "structure": s.name},
            cells=cells,
            passed=all(c.match is not False for c in cells),
        )

    def classify(
        self, structure: str, equation_name: str | None = None, expression: str | None = None
    ) -> ReportDocument:
        s = builtin(structure)
        omega, inputs = self._form(s, expression, equation_name)
        result = complex_reduction(equation_name or omega, s)
        document = ReportDocument(command="classify", inputs={**inputs, "structure": s.name})
        document.cells.append(CellModel(row=result["equation"], column=s.name, computed=result["cell"]))
        if result["cell"] == "0":
            document.signature = SignatureModel(p=0, n=0, z=5)
            document.notes.append("no bieffective part: every complex lagrangian surface is a solution")
            return document
        sig = result["signature"]
        document.signature = SignatureModel(p=sig.p, n=sig.n, z=sig.z)
        document.spectrum = [SpectrumValue.of(v) for v in result["spectrum"]]
        document.cells.append(
            CellModel(row=result["equation"], column="spectrum", computed=format_spectrum(result["spectrum"]))
        )
        document.notes.extend(f"matches model {name}" for name in result["models"])
        return document

    def table(self, which: str | int, strict: bool = False) -> ReportDocument:
        document = table_document(reproduce(which), {"which": str(which), "strict": strict})
        if not strict:
            document.notes.extend(
                f"mismatch {c.row}/{c.column}: {c.computed} vs {c.expected}"
                for c in document.cells
                if not c.match
            )
        return document

    def reduce(self, equation_name: str) -> ReportDocument:
        eq = equation(equation_name)
        polynomial = symbol_reduce(eq.form)
        return ReportDocument(
            command="reduce",
            inputs={"equation": eq.name},
            cells=[CellModel(row=eq.name, column="symbol", computed=str(polynomial))],
            notes=list(eq.notes),
        )

    def verify(
        self,
        proposition: int,
        phi: str | None = None,
        grid: int | None = None,
        tol: float | None = None,
        failing: bool = False,
    ) -> ReportDocument:
        samples = grid or self.settings.grid_size
        report = run_proposition(proposition, phi, samples, tol, failing)
        logger.debug(f"proposition {proposition}: residual max {report.residual_max:.3e}")
        return verification_document(
            "verify", report, {"proposition": proposition, "phi": phi, "failing": failing}
        )

    def example(self, grid: int = 16, tol: float | None = None) -> ReportDocument:
        """The hess f = 1 surface and its graph function on a grid of parameters."""
        surface = verify_generalized(worked_example_surface(grid), equation("hess2").form, tol)
        regular = worked_example_regular(grid, tol)
        document = verification_document("example", surface, {"grid": grid})
        tail = verification_document("example", regular, {"grid": grid})
        document.cells.extend(tail.cells)
        document.notes.extend(tail.notes)
        document.residual_max = max(surface.residual_max, regular.residual_max)
        document.passed = surface.passed and regular.passed
        return document
