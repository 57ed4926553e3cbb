#!/usr/bin/env python3
"""
hermitian_invariants.py - Hermitian form of a bieffective 4-form and its invariants

For a chart (z1, z2, u1, u2) with Theta = dz1^du1 + dz2^du2, the effective
(2,0)-forms make up a 5-dimensional space carrying the symmetric pairing
theta1 ^ theta2 = <theta1, theta2> Theta^2. A bieffective form omega gives the
Hermitian matrix

    Q_ij (Theta ^ conj Theta)^2 = omega ^ theta_i ^ conj(theta_j).

Orbit invariants under the complex orthogonal group: the signature of Q and
the spectrum of Q Q^t (taken in a basis orthonormal for the pairing).
"""

from __future__ import annotations

import random
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import NamedTuple

import mpmath
import numpy as np
import sympy
from loguru import logger

from ..config import settings
from ..exceptions import InvalidParameterError, InvalidStructureError, NotBieffectiveError
from ..utils import linalg
from .bieffective import bieffective_dimension
from .exterior_algebra import I, Form, LinearMap, Scalar, wedge

Matrix = list[list[Scalar]]
Number = int | float | complex | Scalar

_X = sympy.Symbol("x")


class Signature(NamedTuple):
    p: int
    n: int
    z: int


# --- exact inertia -------------------------------------------------------------


def _sign_changes(coefficients: Sequence[sympy.Rational]) -> int:
    signs = [c > 0 for c in coefficients if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _real_rooted_inertia(matrix: sympy.Matrix) -> tuple[int, int, int]:
    """Inertia of a real symmetric rational matrix by Descartes' rule.

    The characteristic polynomial of a symmetric matrix has only real roots,
    so sign changes count positive roots exactly.
    """
    poly = sympy.Poly(matrix.charpoly(_X).as_expr(), _X)
    coefficients = poly.all_coeffs()  # highest degree first
    zero = 0
    while zero < len(coefficients) and coefficients[-1 - zero] == 0:
        zero += 1
    trimmed = coefficients[: len(coefficients) - zero]
    positive = _sign_changes(trimmed)
    degree = len(trimmed) - 1
    mirrored = [c * (-1) ** (degree - k) for k, c in enumerate(trimmed)]
    negative = _sign_changes(mirrored)
    return positive, negative, zero


def inertia(matrix: Matrix, tol: float | None = None) -> Signature:
    """(positive, negative, zero) eigenvalue counts of a Hermitian matrix."""
    size = len(matrix)
    if linalg.is_exact(matrix):
        if linalg.is_real(matrix):
            p, n, z = _real_rooted_inertia(linalg.real_matrix(matrix))
        else:
            p, n, z = (count // 2 for count in _real_rooted_inertia(linalg.realify(matrix)))
    else:
        tol = settings.inexact_tolerance if tol is None else tol
        values = np.linalg.eigvalsh(linalg.to_numpy(matrix))
        p = int(np.sum(values > tol))
        n = int(np.sum(values < -tol))
        z = size - p - n
    assert p + n + z == size
    return Signature(p, n, z)


# --- Hermitian matrices ------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class HermitianMatrix:
    """Hermitian matrix with the Gram matrix of the basis it is written in."""

    entries: Matrix
    gram: Matrix = field(default_factory=list)

    def __post_init__(self) -> None:
        size = len(self.entries)
        if not self.gram:
            object.__setattr__(self, "gram", linalg.identity(size))
        for i in range(size):
            for j in range(i, size):
                a, b = self.entries[i][j], self.entries[j][i].conjugate()
                same = a == b if a.is_exact and b.is_exact else a.close_to(b, 1e-12)
                if not same:
                    raise InvalidParameterError("entries", f"not Hermitian at ({i}, {j})")

    @classmethod
    def of(cls, rows: Sequence[Sequence[Number]], gram: Matrix | None = None) -> HermitianMatrix:
        return cls([[Scalar.of(v) for v in row] for row in rows], gram or [])

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def is_exact(self) -> bool:
        return linalg.is_exact(self.entries) and linalg.is_exact(self.gram)

    def is_zero(self) -> bool:
        return all(v.is_zero() for row in self.entries for v in row)

    def __neg__(self) -> HermitianMatrix:
        return HermitianMatrix([[-v for v in row] for row in self.entries], self.gram)

    def padded(self, size: int) -> HermitianMatrix:
        return direct_sum(self, HermitianMatrix.of([[0] * (size - self.size)] * (size - self.size)))

    def congruent(self, f: Matrix) -> HermitianMatrix:
        """conj(F)^t Q F, keeping the pairing (F complex orthogonal)."""
        fh = linalg.transpose(linalg.conjugate(f))
        return HermitianMatrix(linalg.matmul(linalg.matmul(fh, self.entries), f), self.gram)

    def to_numpy(self) -> np.ndarray:
        return linalg.to_numpy(self.entries)

    def rows(self) -> list[list[str]]:
        return [[str(v) for v in row] for row in self.entries]


def direct_sum(*blocks: HermitianMatrix) -> HermitianMatrix:
    size = sum(b.size for b in blocks)
    entries = [[Scalar() for _ in range(size)] for _ in range(size)]
    gram = [[Scalar() for _ in range(size)] for _ in range(size)]
    offset = 0
    for block in blocks:
        for i in range(block.size):
            for j in range(block.size):
                entries[offset + i][offset + j] = block.entries[i][j]
                gram[offset + i][offset + j] = block.gram[i][j]
        offset += block.size
    return HermitianMatrix(entries, gram)


def signature(q: HermitianMatrix) -> Signature:
    return inertia(q.entries)


def signature_class(sig: Sequence[int]) -> tuple[int, int]:
    """(p, n) up to the overall sign of the form, ordered with p >= n."""
    p, n = sig[0], sig[1]
    return (p, n) if p >= n else (n, p)


def qqt_spectrum(q: HermitianMatrix) -> list[complex]:
    """Eigenvalues of Q Q^t in a basis orthonormal for the pairing.

    With Gram matrix G this is the spectrum of Q conj(G)^-1 Q^t G^-1. The
    characteristic polynomial is exact; roots of its squarefree factors are
    isolated with mpmath.
    """
    g_inv = linalg.inverse(q.gram)
    g_bar_inv = linalg.inverse(linalg.conjugate(q.gram))
    m = linalg.matmul(
        linalg.matmul(linalg.matmul(q.entries, g_bar_inv), linalg.transpose(q.entries)), g_inv
    )
    if not linalg.is_exact(m):
        return sorted((complex(v) for v in np.linalg.eigvals(linalg.to_numpy(m))), key=_order)
    poly = sympy.Poly(sympy.expand(linalg.to_sympy(m).charpoly(_X).as_expr()), _X, domain="QQ_I")
    _, factors = poly.sqf_list()
    roots: list[complex] = []
    with mpmath.workdps(40):
        for factor, multiplicity in factors:
            coefficients = [complex(sympy.N(c, 40)) for c in factor.all_coeffs()]
            if len(coefficients) < 2:
                continue
            found = mpmath.polyroots(coefficients, maxsteps=200, extraprec=80)
            found = found if isinstance(found, list) else [found]
            roots.extend(complex(r) for r in found for _ in range(multiplicity))
    return sorted((_snap(r) for r in roots), key=_order)


def _snap(value: complex, tol: float = 1e-12) -> complex:
    re = 0.0 if abs(value.real) < tol else value.real
    im = 0.0 if abs(value.imag) < tol else value.imag
    return complex(re, im)


def _order(value: complex) -> tuple[float, float]:
    return (-round(value.real, 9), round(value.imag, 9))


def normalized_spectrum(values: Sequence[complex], tol: float | None = None) -> list[complex]:
    """Spectrum scaled so its largest modulus is 1 (zero spectra stay zero)."""
    tol = settings.inexact_tolerance if tol is None else tol
    scale = max((abs(v) for v in values), default=0.0)
    if scale <= tol:
        return [0j for _ in values]
    return sorted((_snap(v / scale, tol) for v in values), key=_order)


def spectrum_matches(
    computed: Sequence[complex], expected: Sequence[Number], tol: float | None = None
) -> bool:
    """Multiset equality; a shorter expected list is padded with zeros."""
    tol = settings.inexact_tolerance if tol is None else tol
    expected = [complex(Scalar.of(v)) for v in expected]
    expected += [0j] * (len(computed) - len(expected))
    remaining = list(expected)
    for value in computed:
        match = next((e for e in remaining if abs(e - value) <= tol), None)
        if match is None:
            return False
        remaining.remove(match)
    return not remaining


# --- effective (2,0)-forms ----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class EffectiveTwoZeroBasis:
    """Five effective (2,0)-forms on R^8 and the Gram matrix of their pairing."""

    forms: tuple[Form, ...]
    labels: tuple[str, ...]
    gram: Matrix
    theta: Form

    def coordinates(self, form: Form) -> list[Scalar]:
        """Coordinates of a (2,0)-form in this basis."""
        columns = [f.to_vector() for f in self.forms]
        return linalg.solve(linalg.transpose(columns), form.to_vector())

    def combination(self, coords: Sequence[Number]) -> Form:
        total = self.forms[0] * Scalar.of(coords[0])
        for form, c in zip(self.forms[1:], coords[1:]):
            total = total + form * Scalar.of(c)
        return total


STANDARD_BASIS_LABELS = (
    "dz1^dz2",
    "dz1^du2",
    "dz2^du1",
    "du1^du2",
    "dz1^du1 - dz2^du2",
)


def _ratio(form: Form, unit: Form) -> Scalar:
    """c with form = c * unit (unit nonzero); raises when not proportional."""
    key, value = next(iter(unit))
    c = form.coefficient(key) / value
    difference = form - unit * c
    if not difference.is_zero(0.0 if difference.is_exact else None):
        raise InvalidStructureError("pairing", "theta_i ^ theta_j proportional to Theta^2")
    return c


def standard_basis(chart) -> EffectiveTwoZeroBasis:
    """dz1^dz2, dz1^du2, dz2^du1, du1^du2, dz1^du1 - dz2^du2 pulled back by the chart."""
    from .complex_structures import CHART_LABELS

    def form(terms: dict[tuple[int, int], int]) -> Form:
        return chart.pull(Form.build(4, 2, terms, CHART_LABELS))

    # chart indices: z1 = 0, z2 = 1, u1 = 2, u2 = 3
    forms = (
        form({(0, 1): 1}),
        form({(0, 3): 1}),
        form({(1, 2): 1}),
        form({(2, 3): 1}),
        form({(0, 2): 1, (1, 3): -1}),
    )
    theta = chart.theta()
    tol = 0.0 if theta.is_exact else settings.zero_snap
    for label, f in zip(STANDARD_BASIS_LABELS, forms):
        if not wedge(f, theta).is_zero(tol):
            raise InvalidStructureError(label, "theta ^ Theta = 0")
    if linalg.rank([f.to_vector() for f in forms]) != 5:
        raise InvalidStructureError("standard basis", "linear independence")
    theta2 = wedge(theta, theta)
    gram = [[_ratio(wedge(a, b), theta2) for b in forms] for a in forms]
    if linalg.rank(gram) != 5:
        raise InvalidStructureError("standard basis", "nondegenerate pairing")
    return EffectiveTwoZeroBasis(forms, STANDARD_BASIS_LABELS, gram, theta)


def q_matrix(omega0: Form, basis: EffectiveTwoZeroBasis) -> HermitianMatrix:
    """Hermitian matrix of a bieffective 4-form in the given basis."""
    theta = basis.theta
    tol = 0.0 if omega0.is_exact else settings.zero_snap
    if not wedge(omega0, theta.real_part()).is_zero(tol):
        raise NotBieffectiveError("omega ^ Re Theta")
    if not wedge(omega0, theta.imag_part()).is_zero(tol):
        raise NotBieffectiveError("omega ^ Im Theta")
    theta_bar = theta.conjugate()
    tt = wedge(theta, theta_bar)
    denominator = wedge(tt, tt).top_coefficient()
    conjugates = [f.conjugate() for f in basis.forms]
    entries = []
    for a in basis.forms:
        left = wedge(omega0, a)
        row = []
        for b in conjugates:
            value = wedge(left, b).top_coefficient() / denominator
            row.append(value if value.is_exact else Scalar(approx=_snap(complex(value))))
        entries.append(row)
    return HermitianMatrix(entries, basis.gram)


# --- Hong canonical blocks ------------------------------------------------------------


def _hong_h(m: int, lam: Scalar) -> Matrix:
    """H_m(lambda) = (R + iI)/2 from its anti-diagonal band R and skew part I."""
    half = Scalar.exact("1/2")
    rows = []
    for i in range(1, m + 1):
        row = []
        for j in range(1, m + 1):
            real = lam * 2 if i + j == m + 1 else Scalar.of(1 if i + j in (m, m + 2) else 0)
            skew = 1 if j == i + 1 else -1 if j == i - 1 else 0
            row.append((real + I * skew) * half)
        rows.append(row)
    return rows


def _is_real(value: Scalar) -> bool:
    return value.is_real(1e-15)


def hong_block(kind: str, size: int, parameter: Number) -> HermitianMatrix:
    """Canonical blocks H_m(lambda), K_2n(mu), L_2k(xi)."""
    value = Scalar.of(parameter)
    kind = kind.upper()
    if size < 1:
        raise InvalidParameterError("size", "must be positive")
    if kind == "H":
        if not _is_real(value):
            raise InvalidParameterError("parameter", "lambda must be real")
        return HermitianMatrix(_hong_h(size, value))
    if size % 2:
        raise InvalidParameterError("size", f"{kind} blocks have even size")
    half = size // 2
    zero = [[Scalar() for _ in range(half)] for _ in range(half)]
    if kind == "K":
        if not _is_real(value) or complex(value).real <= 0:
            raise InvalidParameterError("parameter", "mu must be real and positive")
        h = _hong_h(half, value)
        upper = [[-I * v for v in row] for row in h]
        lower = [[I * v for v in row] for row in h]
    elif kind == "L":
        if _is_real(value):
            raise InvalidParameterError("parameter", "xi must be non-real")
        h = _hong_h(half, value)
        upper = h
        lower = linalg.transpose(linalg.conjugate(h))
    else:
        raise InvalidParameterError("kind", f"unknown block kind '{kind}'")
    entries = [zero_row + up_row for zero_row, up_row in zip(zero, upper)]
    entries += [low_row + zero_row for low_row, zero_row in zip(lower, zero)]
    return HermitianMatrix(entries)


def cayley_orthogonal(antisymmetric: Matrix) -> Matrix:
    """(I - S)(I + S)^-1, complex orthogonal for antisymmetric S."""
    n = len(antisymmetric)
    identity = linalg.identity(n)
    minus = [[identity[i][j] - antisymmetric[i][j] for j in range(n)] for i in range(n)]
    plus = [[identity[i][j] + antisymmetric[i][j] for j in range(n)] for i in range(n)]
    return linalg.matmul(minus, linalg.inverse(plus))


def random_antisymmetric(n: int, rng: random.Random, bound: int = 3) -> Matrix:
    s = [[Scalar() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            value = Scalar.exact(rng.randint(-bound, bound), rng.randint(-bound, bound)) / 2
            s[i][j], s[j][i] = value, -value
    return s


# --- grassmannian membership and equivariance checks --------------------------


def grassmannian_member(
    coords: Sequence[Number], q: HermitianMatrix, tol: float | None = None
) -> bool:
    """theta ^ theta = 0 and Q(theta, theta) = 0 for theta given by basis coordinates."""
    x = [Scalar.of(c) for c in coords]
    exact = all(v.is_exact for v in x) and q.is_exact
    tol = 0.0 if exact else (settings.inexact_tolerance if tol is None else tol)
    square = sum((x[i] * q.gram[i][j] * x[j] for i in range(q.size) for j in range(q.size)), Scalar())
    value = sum(
        (x[i] * q.entries[i][j] * x[j].conjugate() for i in range(q.size) for j in range(q.size)),
        Scalar(),
    )
    return square.is_zero(tol) and value.is_zero(tol)


def complex_symplectic_map(structure, s_rows: Matrix) -> LinearMap:
    """Real map of R^8 acting as S on the chart coordinates (z1, z2, u1, u2)."""
    chart_rows = structure.chart.rows.rows
    real = [[v.real() for v in row] for row in chart_rows] + [
        [v.imag() for v in row] for row in chart_rows
    ]
    s_real = [
        [v.real() for v in row] + [-v.imag() for v in row] for row in s_rows
    ] + [[v.imag() for v in row] + [v.real() for v in row] for row in s_rows]
    f = linalg.matmul(linalg.inverse(real), linalg.matmul(s_real, real))
    return LinearMap.from_rows(f, structure.chart.rows.source_labels, structure.chart.rows.source_labels)


def random_complex_symplectic(rng: random.Random, bound: int = 2) -> Matrix:
    """Product of elementary Sp(4, C) matrices with Gaussian-rational entries."""

    def gauss() -> Scalar:
        return Scalar.exact(rng.randint(-bound, bound), rng.randint(-bound, bound))

    def shear(upper: bool) -> Matrix:
        b = gauss(), gauss(), gauss()
        sym = [[b[0], b[1]], [b[1], b[2]]]
        m = linalg.identity(4)
        for i in range(2):
            for j in range(2):
                if upper:
                    m[i][j + 2] = sym[i][j]
                else:
                    m[i + 2][j] = sym[i][j]
        return m

    def scaling() -> Matrix:
        while True:
            a = [[gauss(), gauss()], [gauss(), gauss()]]
            det = a[0][0] * a[1][1] - a[0][1] * a[1][0]
            if not det.is_zero():
                break
        inv_t = linalg.transpose(linalg.inverse(a))
        m = [[Scalar() for _ in range(4)] for _ in range(4)]
        for i in range(2):
            for j in range(2):
                m[i][j] = a[i][j]
                m[i + 2][j + 2] = inv_t[i][j]
        return m

    return linalg.matmul(linalg.matmul(shear(True), scaling()), shear(False))


def induced_action(basis: EffectiveTwoZeroBasis, linear_map: LinearMap) -> Matrix:
    """Matrix T with pullback(theta_i) = sum_k T[k][i] theta_k."""
    from .exterior_algebra import pullback

    columns = [basis.coordinates(pullback(linear_map, f)) for f in basis.forms]
    return linalg.transpose(columns)


def equivariance_check(omega0: Form, structure, f: LinearMap) -> bool:
    """Q of F*omega equals T^t Q T-bar, T the action of (F^-1)* on the basis."""
    from .exterior_algebra import pullback

    basis = standard_basis(structure.chart)
    q = q_matrix(omega0, basis)
    q_pulled = q_matrix(pullback(f, omega0), basis)
    t = induced_action(basis, f.inverse())
    expected = linalg.matmul(linalg.matmul(linalg.transpose(t), q.entries), linalg.conjugate(t))
    exact = q_pulled.is_exact and linalg.is_exact(expected)
    return all(
        (a == b) if exact else a.close_to(b)
        for ra, rb in zip(q_pulled.entries, expected)
        for a, b in zip(ra, rb)
    )


def su5_dimension_check(structure) -> bool:
    """Bieffective subspace has dimension 25 and omega -> Q_omega is injective on it."""
    from .bieffective import _condition_map

    pair = structure.pair
    dimension = bieffective_dimension(pair)
    if dimension != 25:
        logger.warning(f"{structure.name}: bieffective dimension {dimension}")
        return False
    basis = standard_basis(structure.chart)
    vectors = linalg.nullspace(_condition_map(pair))
    flattened = []
    for vector in vectors:
        q = q_matrix(Form.from_vector(8, 4, vector), basis)
        flattened.append(
            [v.real() for row in q.entries for v in row] + [v.imag() for row in q.entries for v in row]
        )
    return linalg.rank(flattened) == 25
