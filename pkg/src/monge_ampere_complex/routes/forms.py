#!/usr/bin/env python3
"""
forms.py - Form parsing, decomposition and classification endpoints
"""

from fastapi import APIRouter
from loguru import logger

from ..dependencies import ReportServiceDep
from ..models.report import ClassifyRequest, FormRequest, ReportDocument
from ..services.form_parser import format_form, parse_form

router = APIRouter(prefix="/forms", tags=["forms"])


@router.post("/parse")
async def parse(body: FormRequest) -> dict[str, str | int]:
    """Canonical text, dimension and degree of an expression."""
    omega = parse_form(body.expression)
    return {"canonical": format_form(omega), "dim": omega.dim, "degree": omega.degree}


@router.post("/decompose", response_model=ReportDocument, response_model_by_alias=True)
def decompose(body: FormRequest, service: ReportServiceDep) -> ReportDocument:
    """Bieffective part, Lefschetz cofactors and scalar components of a 4-form."""
    return service.decompose(body.structure, expression=body.expression)


@router.post("/classify", response_model=ReportDocument, response_model_by_alias=True)
def classify(body: ClassifyRequest, service: ReportServiceDep) -> ReportDocument:
    """Signature and QQ^t spectrum under one structure."""
    logger.debug(f"classify {body.equation or body.expression} under {body.structure}")
    return service.classify(body.structure, body.equation, body.expression)


@router.get("/reduce/{name}", response_model=ReportDocument, response_model_by_alias=True)
def reduce(name: str, service: ReportServiceDep) -> ReportDocument:
    """Hessian-minor polynomial of a catalog equation."""
    return service.reduce(name)
