#!/usr/bin/env python3
"""
dependencies.py - FastAPI dependencies
"""

from typing import Annotated

from fastapi import Depends

from .config import Settings, get_settings
from .services.report_service import ReportService


def get_report_service(settings: Annotated[Settings, Depends(get_settings)]) -> ReportService:
    """Report service bound to the current settings."""
    return ReportService(settings)


ReportServiceDep = Annotated[ReportService, Depends(get_report_service)]
