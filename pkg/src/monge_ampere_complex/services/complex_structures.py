#!/usr/bin/env python3
"""
complex_structures.py - Compatible complex structures on T*R^4 and their Darboux charts

A structure is stored as an 8x8 matrix acting on column vectors in the
interleaved basis (q1, p1, ..., q4, p4). Block conditions are stated in the
Darboux block order (q1..q4 | p1..p4):

    J = [[A, B], [C, A^t]],  B^t = -B,  C^t = -C,
    A^2 + BC = -1,  AB + BA^t = 0,  AC + CA^t = 0.

A chart is a complex 4x8 matrix whose rows are the linear functionals
z1, z2, u1, u2 with dz1^du1 + dz2^du2 = Omega - i Omega_J.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np
from loguru import logger

from ..exceptions import InvalidStructureError, UnknownNameError
from ..utils import linalg
from .exterior_algebra import (
    I,
    Form,
    LinearMap,
    Scalar,
    phase_labels,
    pullback,
    standard_symplectic,
    wedge,
)
from .symplectic_ops import SymplecticPair, coefficient_matrix, form_from_matrix

Matrix = list[list[Scalar]]

CHART_LABELS = ("z1", "z2", "u1", "u2")
COMPLEX_LABELS = ("z1", "z2", "u1", "u2", "zb1", "zb2", "ub1", "ub2")
COMPLEX_INDEX = {label: k for k, label in enumerate(COMPLEX_LABELS)}

MATRIX_A = [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]
MATRIX_A_TILDE = [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]
MATRIX_A2 = [[1, -2, 0, 0], [1, -1, 0, 0], [0, 0, 1, -2], [0, 0, 1, -1]]
ZERO4 = [[0] * 4 for _ in range(4)]

STRUCTURE_NAMES = ("J", "K", "Jtilde", "Ktilde", "J2")
_ALIASES = {"j": "J", "k": "K", "jtilde": "Jtilde", "ktilde": "Ktilde", "j2": "J2"}


def _matrix(rows: Sequence[Sequence[Scalar | int]]) -> Matrix:
    return [[Scalar.of(v) for v in row] for row in rows]


def _darboux_position(b: int, n: int = 4) -> int:
    """Interleaved index of Darboux index b (q's first, then p's)."""
    return 2 * b if b < n else 2 * (b - n) + 1


def from_darboux_blocks(a, b, c, d) -> Matrix:
    """Assemble [[a, b], [c, d]] (Darboux order) into the interleaved basis."""
    blocks = [[a, b], [c, d]]
    full = [[Scalar() for _ in range(8)] for _ in range(8)]
    for r in range(8):
        for s in range(8):
            value = blocks[r // 4][s // 4][r % 4][s % 4]
            full[_darboux_position(r)][_darboux_position(s)] = Scalar.of(value)
    return full


def to_darboux_blocks(matrix: Matrix) -> tuple[Matrix, Matrix, Matrix, Matrix]:
    def block(i: int, j: int) -> Matrix:
        return [
            [matrix[_darboux_position(4 * i + r)][_darboux_position(4 * j + s)] for s in range(4)]
            for r in range(4)
        ]

    return block(0, 0), block(0, 1), block(1, 0), block(1, 1)


def _add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _equal(a: Matrix, b: Matrix) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def _neg(a: Matrix) -> Matrix:
    return [[-x for x in row] for row in a]


def block_violations(matrix: Matrix) -> list[str]:
    """Names of the compatibility conditions a matrix fails."""
    a, b, c, d = to_darboux_blocks(matrix)
    mm, tt = linalg.matmul, linalg.transpose
    minus_one = _neg(linalg.identity(4))
    zero = _matrix(ZERO4)
    failed = []
    checks = [
        ("J^2 = -1", _equal(mm(matrix, matrix), _neg(linalg.identity(8)))),
        ("lower-right block = A^t", _equal(d, tt(a))),
        ("B^t = -B", _equal(tt(b), _neg(b))),
        ("C^t = -C", _equal(tt(c), _neg(c))),
        ("A^2 + BC = -1", _equal(_add(mm(a, a), mm(b, c)), minus_one)),
        ("AB + BA^t = 0", _equal(_add(mm(a, b), mm(b, tt(a))), zero)),
        ("AC + CA^t = 0", _equal(_add(mm(a, c), mm(c, tt(a))), zero)),
    ]
    for name, ok in checks:
        if not ok:
            failed.append(name)
    return failed


def omega_matrix(matrix: Matrix, omega: Form) -> Matrix:
    """Coefficient matrix of Omega(J., .), i.e. J^t W."""
    return linalg.matmul(linalg.transpose(matrix), coefficient_matrix(omega))


@dataclass(frozen=True, eq=False)
class DarbouxChart:
    """Complex coordinates (z1, z2, u1, u2) as a 4x8 complex matrix."""

    rows: LinearMap

    @classmethod
    def from_coefficients(
        cls, functionals: Sequence[Mapping[str, Scalar | int]]
    ) -> DarbouxChart:
        labels = phase_labels(4)
        rows = [[Scalar.of(f.get(label, 0)) for label in labels] for f in functionals]
        return cls(LinearMap.from_rows(rows, labels, CHART_LABELS))

    @property
    def is_exact(self) -> bool:
        return self.rows.is_exact

    @property
    def full(self) -> LinearMap:
        """Rows z, u followed by their conjugates: R^8 -> C^8."""
        return self.rows.stacked(self.rows.conjugate())

    def pull(self, form: Form) -> Form:
        """Pull a form in the complex basis (z, u, zb, ub) back to R^8."""
        if form.dim == 4:
            return pullback(self.rows, form)
        return pullback(self.full, form)

    def theta(self) -> Form:
        """dz1^du1 + dz2^du2 expressed on R^8."""
        return self.pull(Form.build(4, 2, {(0, 2): 1, (1, 3): 1}, CHART_LABELS))

    def real_matrix(self) -> np.ndarray:
        """Real 8x8 matrix x -> (Re z, Re u, Im z, Im u)."""
        c = self.rows.to_numpy()
        return np.vstack([c.real, c.imag])

    def real_inverse(self) -> np.ndarray:
        return np.linalg.inv(self.real_matrix())

    def rank(self) -> int:
        return linalg.rank(self.full.rows)

    def composed(self, linear_map: LinearMap) -> DarbouxChart:
        """Chart of the pulled-back structure: coordinates precomposed with a map."""
        return DarbouxChart(self.rows.compose(linear_map))


def complex_form(terms: Mapping[Sequence[str], Scalar | int]) -> Form:
    """Form in the complex basis from symbolic monomials, e.g. {("z1", "ub2"): 1}."""
    return Form.build(
        8,
        len(next(iter(terms))) if terms else 0,
        {tuple(COMPLEX_INDEX[s] for s in key): v for key, v in terms.items()},
        COMPLEX_LABELS,
    )


@dataclass(frozen=True, eq=False)
class CompatibleComplexStructure:
    """Validated compatible complex structure with its chart."""

    name: str
    matrix: Matrix
    chart: DarbouxChart
    omega: Form
    omega_j: Form

    @classmethod
    def build(
        cls,
        name: str,
        matrix: Matrix,
        chart: DarbouxChart,
        omega: Form | None = None,
        check_chart: bool = True,
    ) -> CompatibleComplexStructure:
        omega = omega if omega is not None else standard_symplectic(4)
        failed = block_violations(matrix)
        if failed:
            raise InvalidStructureError(name, failed[0])
        w_j = omega_matrix(matrix, omega)
        if not _equal(linalg.transpose(w_j), _neg(w_j)):
            raise InvalidStructureError(name, "Omega(J., .) antisymmetric")
        structure = cls(name, matrix, chart, omega, form_from_matrix(w_j))
        if check_chart:
            structure.check_chart()
        return structure

    @property
    def blocks(self) -> tuple[Matrix, Matrix, Matrix, Matrix]:
        return to_darboux_blocks(self.matrix)

    @property
    def theta(self) -> Form:
        return self.omega - self.omega_j * I

    @cached_property
    def pair(self) -> SymplecticPair:
        """(Omega1, Omega2) = (Omega, -Omega_J), so Theta = Omega - i Omega_J."""
        return SymplecticPair.from_forms(self.omega, -self.omega_j, self.name)

    def check_chart(self) -> None:
        if self.chart.rank() != 8:
            raise InvalidStructureError(self.name, "chart of full real rank 8")
        pulled = self.chart.theta()
        ok = pulled == self.theta if pulled.is_exact else pulled.close_to(self.theta)
        if not ok:
            raise InvalidStructureError(self.name, "dz1^du1 + dz2^du2 = Omega - i Omega_J")

    def conjugated(self, f: LinearMap, name: str | None = None) -> CompatibleComplexStructure:
        """F^-1 J F for a symplectic F, with the chart precomposed by F."""
        f_inv = f.inverse()
        matrix = linalg.matmul(linalg.matmul(f_inv.rows, self.matrix), f.rows)
        return CompatibleComplexStructure.build(
            name or f"{self.name}^F", matrix, self.chart.composed(f), self.omega
        )


def _chart(*functionals: Mapping[str, Scalar | int]) -> DarbouxChart:
    return DarbouxChart.from_coefficients(functionals)


def _build_k() -> CompatibleComplexStructure:
    chart = _chart(
        {"q1": 1, "p2": I},
        {"q3": 1, "p4": I},
        {"q2": I, "p1": 1},
        {"q4": I, "p3": 1},
    )
    printed = from_darboux_blocks(ZERO4, MATRIX_A, MATRIX_A_TILDE, ZERO4)
    try:
        return CompatibleComplexStructure.build("K", printed, chart)
    except InvalidStructureError as exc:
        logger.warning(
            f"K with off-diagonal blocks (A, A~) rejected ({exc.details['condition']}); "
            "using blocks (A, A)"
        )
    return CompatibleComplexStructure.build(
        "K", from_darboux_blocks(ZERO4, MATRIX_A, MATRIX_A, ZERO4), chart
    )


def _transpose(m: list[list[int]]) -> list[list[int]]:
    return [list(col) for col in zip(*m)]


@lru_cache(maxsize=None)
def _builtin(name: str) -> CompatibleComplexStructure:
    logger.debug(f"building complex structure {name}")
    if name == "J":
        return CompatibleComplexStructure.build(
            "J",
            from_darboux_blocks(MATRIX_A, ZERO4, ZERO4, _transpose(MATRIX_A)),
            _chart({"q1": 1, "q2": I}, {"q3": 1, "q4": I}, {"p1": 1, "p2": -I}, {"p3": 1, "p4": -I}),
        )
    if name == "K":
        return _build_k()
    if name == "Jtilde":
        return CompatibleComplexStructure.build(
            "Jtilde",
            from_darboux_blocks(MATRIX_A_TILDE, ZERO4, ZERO4, _transpose(MATRIX_A_TILDE)),
            _chart({"q1": 1, "q2": I}, {"q3": 1, "q4": -I}, {"p1": 1, "p2": -I}, {"p3": 1, "p4": I}),
        )
    if name == "Ktilde":
        return CompatibleComplexStructure.build(
            "Ktilde",
            from_darboux_blocks(ZERO4, MATRIX_A_TILDE, MATRIX_A_TILDE, ZERO4),
            _chart({"q1": 1, "p2": I}, {"q3": 1, "p4": -I}, {"q2": I, "p1": 1}, {"q4": -I, "p3": 1}),
        )
    # J2
    c = Scalar.exact(-1, 1)
    return CompatibleComplexStructure.build(
        "J2",
        from_darboux_blocks(MATRIX_A2, ZERO4, ZERO4, _transpose(MATRIX_A2)),
        _chart(
            {"q1": 1, "q2": c},
            {"q3": 1, "q4": c},
            {"p1": Scalar.exact(1, -1), "p2": -I},
            {"p3": Scalar.exact(1, -1), "p4": -I},
        ),
    )


def canonical_name(name: str) -> str:
    key = name.replace("~", "tilde").replace("̃", "tilde").lower()
    if key not in _ALIASES:
        raise UnknownNameError("structure", name, list(STRUCTURE_NAMES))
    return _ALIASES[key]


def builtin(name: str) -> CompatibleComplexStructure:
    """One of J, K, Jtilde, Ktilde, J2 (validated at construction)."""
    return _builtin(canonical_name(name))


def omega_of(structure: CompatibleComplexStructure) -> Form:
    return structure.omega_j


def slag_factorization_check(
    first: CompatibleComplexStructure | None = None,
    second: CompatibleComplexStructure | None = None,
    scale: int = 1,
) -> bool:
    """Whether omega_SLAG = +-Omega_J ^ Omega_K exactly.

    With the conventions here the identity holds with sign -1 for the
    built-in J, K; the sign found is logged.
    """
    from .ma_equations import slag_form

    first = first or builtin("J")
    second = second or builtin("K")
    product = wedge(first.omega_j * scale, second.omega_j)
    slag = slag_form(4)
    for sign in (1, -1):
        if product * sign == slag:
            logger.debug(f"omega_SLAG = {sign:+d} Omega_{first.name} ^ Omega_{second.name}")
            return True
    return False
