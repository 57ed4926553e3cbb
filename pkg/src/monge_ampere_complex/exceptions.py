#!/usr/bin/env python3
"""
exceptions.py - Custom exception classes

Every error carries an HTTP status (for the API exception handler) and a
process exit code (for the CLI): 2 for usage-type errors, 1 for failed
verifications.
"""

from typing import Any


class MongeAmpereError(Exception):
    """Base exception for all library errors."""

    exit_code: int = 2

    def __init__(
        self,
        message: str,
        status_code: int = 400,
        details: dict[str, Any] | None = None,
    ):
        self.message = message
        self.status_code = status_code
        self.details = details or {}
        super().__init__(message)


class DegreeMismatchError(MongeAmpereError):
    """Operands of incompatible degree."""

    def __init__(self, operation: str, expected: int | str, got: int):
        super().__init__(
            message=f"{operation}: expected degree {expected}, got {got}",
            status_code=422,
            details={"operation": operation, "expected": str(expected), "got": got},
        )


class DimensionMismatchError(MongeAmpereError):
    """Operands living on spaces of different dimension."""

    def __init__(self, operation: str, expected: int, got: int):
        super().__init__(
            message=f"{operation}: expected dimension {expected}, got {got}",
            status_code=422,
            details={"operation": operation, "expected": expected, "got": got},
        )


class InvalidStructureError(MongeAmpereError):
    """A complex structure or chart violating one of its defining conditions."""

    def __init__(self, name: str, condition: str):
        super().__init__(
            message=f"Structure '{name}' violates condition: {condition}",
            status_code=422,
            details={"structure": name, "condition": condition},
        )


class NotBieffectiveError(MongeAmpereError):
    """Input required to be bieffective is not."""

    def __init__(self, which: str):
        super().__init__(
            message=f"Form is not bieffective: {which} does not vanish",
            status_code=422,
            details={"failed_wedge": which},
        )


class FormSyntaxError(MongeAmpereError):
    """Syntax error in a form expression."""

    def __init__(self, text: str, position: int, reason: str):
        super().__init__(
            message=f"Syntax error at position {position}: {reason}",
            status_code=422,
            details={"text": text, "position": position, "reason": reason},
        )


class UnknownNameError(MongeAmpereError):
    """Unknown structure, equation, model, table or basis symbol."""

    def __init__(self, kind: str, name: str, choices: list[str] | None = None):
        super().__init__(
            message=f"Unknown {kind} '{name}'",
            status_code=404,
            details={"kind": kind, "name": name, "choices": choices or []},
        )


class InvalidParameterError(MongeAmpereError):
    """Parameters inconsistent with the requested object."""

    def __init__(self, field: str, message: str):
        super().__init__(
            message=f"Invalid parameter '{field}': {message}",
            status_code=422,
            details={"field": field, "validation_message": message},
        )


class RankDeficientFrameError(MongeAmpereError):
    """Tangent frame of a sampled submanifold lost rank."""

    def __init__(self, sample: int, rank: int, expected: int):
        super().__init__(
            message=f"Tangent frame at sample {sample} has rank {rank} < {expected}",
            status_code=422,
            details={"sample": sample, "rank": rank, "expected": expected},
        )


class VerificationError(MongeAmpereError):
    """A verification ran and failed."""

    exit_code = 1

    def __init__(self, what: str, details: dict[str, Any] | None = None):
        super().__init__(
            message=f"Verification failed: {what}",
            status_code=409,
            details=details,
        )
