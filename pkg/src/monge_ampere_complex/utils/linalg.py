#!/usr/bin/env python3
"""
linalg.py - Exact linear algebra over Gaussian rationals

Complex systems are solved through the real embedding
z -> [[Re, -Im], [Im, Re]] so sympy only ever sees rational matrices.
Inexact input falls back to numpy.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np
import sympy

from ..services.exterior_algebra import Scalar

Rows = Sequence[Sequence[Scalar]]


def _rational(value) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def is_exact(rows: Rows) -> bool:
    return all(v.is_exact for row in rows for v in row)


def is_real(rows: Rows) -> bool:
    return all(v.is_exact and v.im == 0 for row in rows for v in row)


def real_matrix(rows: Rows) -> sympy.Matrix:
    """Rational sympy matrix of the real parts (input must be real and exact)."""
    return sympy.Matrix([[_rational(v.re) for v in row] for row in rows])


def realify(rows: Rows) -> sympy.Matrix:
    """Real 2m x 2n embedding of an exact complex m x n matrix."""
    re = sympy.Matrix([[_rational(v.re) for v in row] for row in rows])
    im = sympy.Matrix([[_rational(v.im) for v in row] for row in rows])
    return sympy.BlockMatrix([[re, -im], [im, re]]).as_explicit()


def to_numpy(rows: Rows) -> np.ndarray:
    return np.array([[complex(v) for v in row] for row in rows], dtype=complex)


def rank(rows: Rows, tol: float | None = None) -> int:
    if not rows:
        return 0
    if not is_exact(rows):
        return int(np.linalg.matrix_rank(to_numpy(rows), tol=tol))
    if is_real(rows):
        return real_matrix(rows).rank()
    return realify(rows).rank() // 2


def nullspace(rows: Rows) -> list[list[Scalar]]:
    """Basis of the real kernel of a real exact matrix."""
    return [
        [Scalar.from_sympy(x) for x in vector]
        for vector in real_matrix(rows).nullspace()
    ]


def solve(rows: Rows, rhs: Sequence[Scalar]) -> list[Scalar]:
    """One solution of rows @ x = rhs, free parameters set to zero.

    Raises ValueError when the system is inconsistent.
    """
    return solve_many(rows, [[v] for v in rhs])[0]


def solve_many(rows: Rows, rhs: Rows, free_value: int = 0) -> list[list[Scalar]]:
    """Solve rows @ X = rhs column by column; returns the list of solution columns."""
    n_cols = len(rows[0])
    if not (is_exact(rows) and is_exact(rhs)):
        a, b = to_numpy(rows), to_numpy(rhs)
        x, *_ = np.linalg.lstsq(a, b, rcond=None)
        if not np.allclose(a @ x, b, atol=1e-9):
            raise ValueError("inconsistent linear system")
        return [[Scalar(approx=complex(v)) for v in col] for col in x.T]
    if is_real(rows) and is_real(rhs):
        a, b, width = real_matrix(rows), real_matrix(rhs), n_cols
    else:
        a, b, width = realify(rows), realify(rhs)[:, : len(rhs[0])], n_cols
    solution, params = a.gauss_jordan_solve(b)
    if params.shape[0]:
        solution = solution.subs({p: free_value for p in params})
    columns = []
    for j in range(solution.shape[1]):
        col = solution[:, j]
        if width == len(col):
            columns.append([Scalar.from_sympy(v) for v in col])
        else:
            columns.append(
                [
                    Scalar.from_sympy(col[k] + sympy.I * col[k + width])
                    for k in range(width)
                ]
            )
    return columns


def inverse(rows: Rows) -> list[list[Scalar]]:
    if not is_exact(rows):
        inv = np.linalg.inv(to_numpy(rows))
        return [[Scalar(approx=complex(v)) for v in row] for row in inv]
    matrix = sympy.Matrix([[v.to_sympy() for v in row] for row in rows])
    inv = matrix.inv()
    return [[Scalar.from_sympy(sympy.expand(v)) for v in inv.row(i)] for i in range(inv.rows)]


def matmul(a: Rows, b: Rows) -> list[list[Scalar]]:
    cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Scalar()) for col in cols] for row in a]


def transpose(a: Rows) -> list[list[Scalar]]:
    return [list(col) for col in zip(*a)]


def conjugate(a: Rows) -> list[list[Scalar]]:
    return [[v.conjugate() for v in row] for row in a]


def identity(n: int) -> list[list[Scalar]]:
    return [[Scalar.of(1 if i == j else 0) for j in range(n)] for i in range(n)]


def to_sympy(a: Rows) -> sympy.Matrix:
    return sympy.Matrix([[v.to_sympy() for v in row] for row in a])
