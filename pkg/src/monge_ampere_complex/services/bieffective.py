#!/usr/bin/env python3
"""
bieffective.py - Bieffective decomposition of 4-forms on R^8

Every 4-form splits as

    omega = omega0 + omega1 ^ Omega1 + omega2 ^ Omega2
            + w11 Omega1^2 + w12 Omega1 ^ Omega2 + w22 Omega2^2

with omega0 ^ Omega1 = omega0 ^ Omega2 = 0. bieffective_part uses the
closed operator formula; bieffective_oracle solves the wedge conditions
directly and serves as an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass

from loguru import logger

from ..exceptions import DegreeMismatchError, NotBieffectiveError, VerificationError
from ..utils import linalg
from .exterior_algebra import Form, Scalar, basis_tuples, wedge
from .symplectic_ops import (
    SymplecticPair,
    combine,
    operator_E1,
    operator_E2,
    operator_M,
    perp,
    top,
)


def _check_degree(omega: Form, operation: str) -> None:
    if omega.dim != 8 or omega.degree != 4:
        raise DegreeMismatchError(operation, 4, omega.degree)


def _scalar(form: Form) -> Scalar:
    return form.coefficient(()) if form.degree == 0 else Scalar()


def scalar_components(omega: Form, pair: SymplecticPair) -> tuple[Scalar, Scalar, Scalar]:
    """(w11, w12, w22) from the double contractions of omega."""
    _check_degree(omega, "scalar_components")
    p11 = _scalar(perp(1, perp(1, omega, pair), pair))
    p22 = _scalar(perp(2, perp(2, omega, pair), pair))
    p12 = _scalar(perp(1, perp(2, omega, pair), pair))
    w11 = (p11 * 3 - p22) / 64
    w22 = (p22 * 3 - p11) / 64
    w12 = p12 / 8
    return w11, w12, w22


def scalar_part(w: tuple[Scalar, Scalar, Scalar], pair: SymplecticPair) -> Form:
    o1, o2 = pair.omega1, pair.omega2
    return combine((w[0], wedge(o1, o1)), (w[1], wedge(o1, o2)), (w[2], wedge(o2, o2)))


def bieffective_part(omega: Form, pair: SymplecticPair) -> Form:
    """omega0 = theta - 1/4 {T2 P2 theta + T1 P1 theta - 1/4 M(M theta - T1 P2 theta + T2 P1 theta)}."""
    _check_degree(omega, "bieffective_part")
    theta = omega - scalar_part(scalar_components(omega, pair), pair)

    def tp(j: int, k: int, form: Form) -> Form:
        return top(j, perp(k, form, pair), pair)

    inner = combine(
        (1, operator_M(theta, pair)), (-1, tp(1, 2, theta)), (1, tp(2, 1, theta))
    )
    bracket = combine(
        (1, tp(2, 2, theta)),
        (1, tp(1, 1, theta)),
        (Scalar.exact("-1/4"), operator_M(inner, pair)),
    )
    result = combine((1, theta), (Scalar.exact("-1/4"), bracket))
    return result if result.is_exact else result.snapped()


def is_bieffective(omega: Form, pair: SymplecticPair, tol: float | None = None) -> bool:
    tol = 0.0 if omega.is_exact else tol
    return wedge(omega, pair.omega1).is_zero(tol) and wedge(omega, pair.omega2).is_zero(tol)


def require_bieffective(omega: Form, pair: SymplecticPair, tol: float | None = None) -> None:
    tol = 0.0 if omega.is_exact else tol
    if not wedge(omega, pair.omega1).is_zero(tol):
        raise NotBieffectiveError("omega ^ Omega1")
    if not wedge(omega, pair.omega2).is_zero(tol):
        raise NotBieffectiveError("omega ^ Omega2")


def is_primitive(omega: Form, pair: SymplecticPair, tol: float | None = None) -> bool:
    """E1 and E2 both annihilate omega."""
    tol = 0.0 if omega.is_exact else tol
    return operator_E1(omega, pair).is_zero(tol) and operator_E2(omega, pair).is_zero(tol)


@dataclass(frozen=True, eq=False)
class BieffectiveDecomposition:
    omega0: Form
    omega1: Form
    omega2: Form
    w11: Scalar
    w12: Scalar
    w22: Scalar
    # False when no primitive cofactors exist and plain ones were returned
    primitive: bool = True

    def reassemble(self, pair: SymplecticPair) -> Form:
        return combine(
            (1, self.omega0),
            (1, wedge(self.omega1, pair.omega1)),
            (1, wedge(self.omega2, pair.omega2)),
            (1, scalar_part((self.w11, self.w12, self.w22), pair)),
        )


def _two_form_system(pair: SymplecticPair, primitive: bool) -> list[list[Scalar]]:
    """Rows: coefficients of omega1 ^ Omega1 + omega2 ^ Omega2 (+ primitivity rows)."""
    two = basis_tuples(8, 2)
    four = basis_tuples(8, 4)
    columns = []
    for j in (1, 2):
        for indices in two:
            sigma = Form.monomial(8, indices)
            image = wedge(sigma, pair.omega(j)).to_vector()
            if primitive:
                image = image + [
                    _scalar(perp(1, sigma, pair)) if k == j - 1 else Scalar() for k in range(2)
                ] + [_scalar(perp(2, sigma, pair)) if k == j - 1 else Scalar() for k in range(2)]
            columns.append(image)
    rows = linalg.transpose(columns)
    assert len(rows) == len(four) + (4 if primitive else 0)
    return rows


def decompose(omega: Form, pair: SymplecticPair) -> BieffectiveDecomposition:
    """Full six-component decomposition with primitive omega1, omega2."""
    _check_degree(omega, "decompose")
    w = scalar_components(omega, pair)
    omega0 = bieffective_part(omega, pair)
    rest = omega - omega0 - scalar_part(w, pair)
    two = basis_tuples(8, 2)
    primitive = True
    try:
        rhs = rest.to_vector() + [Scalar()] * 4
        solution = linalg.solve(_two_form_system(pair, primitive=True), rhs)
    except ValueError:
        logger.warning(f"{pair.name}: no primitive cofactors found; solving without primitivity")
        primitive = False
        solution = linalg.solve(_two_form_system(pair, primitive=False), rest.to_vector())
    omega1 = Form.build(8, 2, zip(two, solution[: len(two)]))
    omega2 = Form.build(8, 2, zip(two, solution[len(two) :]))
    result = BieffectiveDecomposition(omega0, omega1, omega2, *w, primitive=primitive)
    difference = result.reassemble(pair) - omega
    if not difference.is_zero(0.0 if difference.is_exact else None):
        raise VerificationError("decomposition does not reassemble", {"pair": pair.name})
    return result


_PROJECTIONS: dict[tuple, list[list[Scalar]]] = {}


def _wedge_map(pair: SymplecticPair) -> list[list[Scalar]]:
    """70 x 56 matrix of (omega1, omega2) -> omega1 ^ Omega1 + omega2 ^ Omega2."""
    return _two_form_system(pair, primitive=False)


def _condition_map(pair: SymplecticPair) -> list[list[Scalar]]:
    """56 x 70 matrix of eta -> (eta ^ Omega1, eta ^ Omega2)."""
    columns = []
    for indices in basis_tuples(8, 4):
        eta = Form.monomial(8, indices)
        columns.append(wedge(eta, pair.omega1).to_vector() + wedge(eta, pair.omega2).to_vector())
    return linalg.transpose(columns)


def _projection(pair: SymplecticPair) -> list[list[Scalar]]:
    key = (pair.omega1.key, pair.omega2.key)
    if key in _PROJECTIONS:
        return _PROJECTIONS[key]
    logger.debug(f"building bieffective projection for {pair.name}")
    lift = _wedge_map(pair)
    condition = _condition_map(pair)
    # (omega - L c) ^ Omega_j = 0  <=>  (C L) c = C omega
    system = linalg.matmul(condition, lift)
    projections = []
    for free_value in (0, 1):
        cofactors = linalg.solve_many(system, condition, free_value=free_value)
        lifted = linalg.matmul(lift, linalg.transpose(cofactors))
        identity = linalg.identity(70)
        projections.append(
            [[identity[r][c] - lifted[r][c] for c in range(70)] for r in range(70)]
        )
    if not all(a == b for ra, rb in zip(*projections) for a, b in zip(ra, rb)):
        raise VerificationError("bieffective part depends on the chosen cofactors")
    _PROJECTIONS[key] = projections[0]
    return projections[0]


def bieffective_oracle(omega: Form, pair: SymplecticPair) -> Form:
    """Bieffective part from the wedge conditions alone."""
    _check_degree(omega, "bieffective_oracle")
    projection = _projection(pair)
    vector = omega.to_vector()
    image = [sum((p * v for p, v in zip(row, vector)), Scalar()) for row in projection]
    result = Form.from_vector(8, 4, image, omega.labels)
    return result if result.is_exact else result.snapped()


def bieffective_dimension(pair: SymplecticPair) -> int:
    """Real dimension of the bieffective subspace of Lambda^4."""
    return 70 - linalg.rank(_condition_map(pair))
