#!/usr/bin/env python3
"""
cli.py - Command-line front end (mae-complex)

    mae-complex relations --structure J
    mae-complex decompose --structure J2 --equation slag
    mae-complex classify --structure Jtilde --equation plebanski2
    mae-complex table --which 5 --strict
    mae-complex reduce --equation plebanski1
    mae-complex verify --proposition 6 --grid 32
    mae-complex example

Every command builds a ReportDocument; --json prints its tree, otherwise it
is rendered as aligned text. Exit codes: 0 success, 1 verification
failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from loguru import logger
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from . import __version__
from .config import get_settings
from .exceptions import MongeAmpereError
from .logging_setup import configure_logging
from .models.report import ReportDocument
from .services.complex_structures import STRUCTURE_NAMES
from .services.report_service import ReportService

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mae-complex",
        description="Complex reduction of 4-variable Monge-Ampere equations.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--json", action="store_true", help="print the machine-readable report")
    parser.add_argument("--log-level", default=None, help="loguru level (default from MAE_LOG_LEVEL)")
    sub = parser.add_subparsers(dest="command", required=True)

    def structure_arg(p: argparse.ArgumentParser) -> None:
        p.add_argument("--structure", default="J", help=f"one of {', '.join(STRUCTURE_NAMES)}")

    p = sub.add_parser("relations", help="check the commutation identities on the full basis")
    structure_arg(p)

    p = sub.add_parser("decompose", help="split a 4-form into bieffective and Lefschetz parts")
    structure_arg(p)
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--form", help='e.g. "dp1^dp2^dp3^dp4 - dq1^dq2^dq3^dq4"')
    source.add_argument("--equation", help="catalog name, e.g. slag")

    p = sub.add_parser("classify", help="signature and QQ^t spectrum of the bieffective part")
    structure_arg(p)
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--equation")
    source.add_argument("--form")

    p = sub.add_parser("table", help="reproduce a classification table")
    p.add_argument("--which", required=True, choices=["1", "2", "4", "5"])
    p.add_argument("--strict", action="store_true", help="fail on any mismatching cell")

    p = sub.add_parser("reduce", help="Hessian-minor polynomial of an equation")
    p.add_argument("--equation", required=True)

    p = sub.add_parser("verify", help="numerical check of a constructive statement")
    p.add_argument("--proposition", required=True, type=int, choices=range(1, 9))
    p.add_argument("--phi", help="holomorphic function of z1, z2, e.g. 'z1*z2 + z1**3'")
    p.add_argument("--grid", type=_positive_int, help="number of sample points")
    p.add_argument("--tol", type=_positive_float)
    p.add_argument("--failing", action="store_true", help="use the non-solving input instead")

    p = sub.add_parser("example", help="the hess f = 1 worked example")
    p.add_argument("--grid", type=_positive_int, default=16, help="grid points per side")
    p.add_argument("--tol", type=_positive_float)

    return parser


def run(args: argparse.Namespace, service: ReportService) -> ReportDocument:
    match args.command:
        case "relations":
            return service.relations(args.structure)
        case "decompose":
            return service.decompose(args.structure, args.form, args.equation)
        case "classify":
            return service.classify(args.structure, args.equation, args.form)
        case "table":
            return service.table(args.which, args.strict)
        case "reduce":
            return service.reduce(args.equation)
        case "verify":
            return service.verify(args.proposition, args.phi, args.grid, args.tol, args.failing)
        case "example":
            return service.example(args.grid, args.tol)
    raise MongeAmpereError(f"unknown command {args.command}")


# --- text rendering -----------------------------------------------------------------


def _mark(match: bool | None) -> str:
    if match is None:
        return ""
    return "[green]ok[/green]" if match else "[red]MISMATCH[/red]"


def _table_grid(document: ReportDocument) -> Table:
    columns: list[str] = []
    rows: dict[str, dict[str, str]] = {}
    for cell in document.cells:
        if escape(cell.column) not in columns:
            columns.append(escape(cell.column))
        text = escape(cell.computed)
        if cell.match is False:
            text = f"[red]{text}[/red] ({escape(cell.expected or '')})"
        rows.setdefault(escape(cell.row), {})[escape(cell.column)] = text
    grid = Table(title=f"table {document.inputs.get('which')}")
    grid.add_column("")
    for column in columns:
        grid.add_column(column, justify="center")
    for row, values in rows.items():
        grid.add_row(row, *(values.get(c, "") for c in columns))
    return grid


def _cell_list(document: ReportDocument) -> Table:
    table = Table(title=document.command)
    for header in ("row", "column", "computed", "expected", ""):
        table.add_column(header)
    for cell in document.cells:
        table.add_row(
            escape(cell.row),
            escape(cell.column),
            escape(cell.computed),
            escape(cell.expected or ""),
            _mark(cell.match),
        )
    return table


def render(document: ReportDocument, console: Console) -> None:
    inputs = ", ".join(f"{k}={v}" for k, v in document.inputs.items() if v is not None)
    console.print(f"[bold]{document.command}[/bold] {escape(inputs)}")
    if document.cells:
        console.print(_table_grid(document) if document.command == "table" else _cell_list(document))
    if document.signature is not None:
        s = document.signature
        console.print(f"signature: (p, n, z) = ({s.p}, {s.n}, {s.z})")
    if document.spectrum:
        console.print("spectrum of QQ^t: " + ", ".join(str(v) for v in document.spectrum))
    if document.residual_max is not None:
        console.print(f"residual max: {document.residual_max:.3e}")
    for note in document.notes:
        console.print(f"  - {escape(note)}")
    console.print("[green]PASS[/green]" if document.passed else "[red]FAIL[/red]")


def exit_code(document: ReportDocument, args: argparse.Namespace) -> int:
    if document.passed:
        return EXIT_OK
    if document.command == "table" and not args.strict:
        return EXIT_OK
    return EXIT_FAILED


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    settings = get_settings()
    configure_logging(args.log_level or settings.log_level, settings.log_json)
    console = Console(highlight=False)
    try:
        document = run(args, ReportService(settings))
    except MongeAmpereError as exc:
        logger.debug(f"{type(exc).__name__}: {exc.details}")
        print(f"error: {exc.message}", file=sys.stderr)
        return exc.exit_code

    if args.json:
        print(json.dumps(document.tree(), indent=2))
    else:
        render(document, console)
    return exit_code(document, args)


if __name__ == "__main__":
    sys.exit(main())
