#!/usr/bin/env python3
"""
report.py - Report document and request schemas

One ReportDocument tree backs the CLI's JSON output, its text rendering and
the HTTP responses.
"""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator


class SignatureModel(BaseModel):
    """Inertia of a Hermitian or symmetric matrix."""

    p: int = Field(ge=0)
    n: int = Field(ge=0)
    z: int = Field(ge=0)


class SpectrumValue(BaseModel):
    re: float
    im: float = 0.0

    @classmethod
    def of(cls, value: complex) -> SpectrumValue:
        z = complex(value)
        # rounded so repeated runs print identically
        return cls(re=round(z.real, 12) + 0.0, im=round(z.imag, 12) + 0.0)

    def __str__(self) -> str:
        if self.im == 0:
            return f"{self.re:g}"
        return f"{self.re:g}{self.im:+g}i"


class CellModel(BaseModel):
    row: str
    column: str
    computed: str
    expected: str | None = None
    match: bool | None = None
    raw_signature: str | None = None


class ReportDocument(BaseModel):
    """Structured result of one command."""

    model_config = ConfigDict(populate_by_name=True)

    command: str
    inputs: dict[str, Any] = Field(default_factory=dict)
    cells: list[CellModel] = Field(default_factory=list)
    signature: SignatureModel | None = None
    spectrum: list[SpectrumValue] = Field(default_factory=list)
    residual_max: float | None = None
    passed: bool = Field(default=True, alias="pass")
    notes: list[str] = Field(default_factory=list)

    def tree(self) -> dict[str, Any]:
        """Machine-readable form with the fixed key names."""
        return self.model_dump(by_alias=True, mode="json")


# --- request bodies ---------------------------------------------------------------


class FormRequest(BaseModel):
    """A form given as text, optionally with a structure to work against."""

    expression: str = Field(min_length=1, max_length=4000)
    structure: str = "J"


class ClassifyRequest(BaseModel):
    """Either a catalog equation or a 4-form expression."""

    structure: str = "J"
    equation: str | None = None
    expression: str | None = None

    @field_validator("expression")
    @classmethod
    def strip_expression(cls, v: str | None) -> str | None:
        """Blank expressions count as absent."""
        return v.strip() or None if v is not None else None
