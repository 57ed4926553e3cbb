#!/usr/bin/env python3
"""
tables.py - Table reproduction and verification endpoints
"""

from typing import Annotated

from fastapi import APIRouter, Query

from ..dependencies import ReportServiceDep
from ..models.report import ReportDocument

router = APIRouter(tags=["tables"])


@router.get("/tables/{which}", response_model=ReportDocument, response_model_by_alias=True)
def table(which: str, service: ReportServiceDep) -> ReportDocument:
    """Computed cells of table 1, 2, 4 or 5 next to the printed values."""
    return service.table(which, strict=True)


@router.get("/relations/{structure}", response_model=ReportDocument, response_model_by_alias=True)
def relations(structure: str, service: ReportServiceDep) -> ReportDocument:
    return service.relations(structure)


@router.get(
    "/propositions/{number}", response_model=ReportDocument, response_model_by_alias=True
)
def proposition(
    number: int,
    service: ReportServiceDep,
    phi: str | None = None,
    grid: Annotated[int | None, Query(ge=1, le=4096)] = None,
    tol: Annotated[float | None, Query(gt=0)] = None,
    failing: bool = False,
) -> ReportDocument:
    """Numerical check of one constructive statement."""
    return service.verify(number, phi, grid, tol, failing)
