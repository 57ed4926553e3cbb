#!/usr/bin/env python3
"""
symplectic_ops.py - Lefschetz-type operators of a complex symplectic pair

For Theta = Omega1 + i Omega2 on R^{4m}:
  top_j   theta -> theta ^ Omega_j
  perp_j  theta -> contraction with the bivector dual to Omega_j
  H = [perp_1, top_1],  M = [perp_2, top_1]
plus the complexified E1, E2 used as a primitivity test and the
single-form Hodge-Lepage decomposition.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass, field

from loguru import logger

from ..exceptions import DegreeMismatchError, InvalidStructureError
from ..utils import linalg
from .exterior_algebra import (
    Form,
    I,
    LinearMap,
    Polyvector,
    Scalar,
    basis_tuples,
    interior,
    pullback,
    power,
    wedge,
)

Operator = Callable[[Form], Form]


def coefficient_matrix(omega: Form) -> list[list[Scalar]]:
    """Antisymmetric W with W[a][b] = omega(e_a, e_b)."""
    if omega.degree != 2:
        raise DegreeMismatchError("coefficient_matrix", 2, omega.degree)
    w = [[Scalar() for _ in range(omega.dim)] for _ in range(omega.dim)]
    for (a, b), value in omega.terms.items():
        w[a][b] = value
        w[b][a] = -value
    return w


def form_from_matrix(w: list[list[Scalar]]) -> Form:
    dim = len(w)
    return Form.build(
        dim, 2, {(a, b): w[a][b] for a in range(dim) for b in range(a + 1, dim)}
    )


def dual_bivector(omega: Form) -> Polyvector:
    """Bivector X with [perp, top] = (n - k) id on k-forms of R^{2n}."""
    w = coefficient_matrix(omega)
    if linalg.rank(w) < omega.dim:
        raise InvalidStructureError("omega", "nondegenerate 2-form")
    inv = linalg.inverse(w)
    x = Polyvector.build(
        omega.dim,
        2,
        {(a, b): -inv[a][b] for a in range(omega.dim) for b in range(a + 1, omega.dim)},
    )
    # calibrate on constants: perp(top(1)) must equal n
    value = interior(x, omega).coefficient(())
    target = Scalar.of(omega.dim // 2)
    if not value.close_to(target, 1e-12):
        logger.debug(f"rescaling dual bivector by {target}/{value}")
        x = x * (target / value)
    return x


@dataclass(frozen=True, eq=False)
class SymplecticPair:
    """Real and imaginary parts of a complex symplectic form, with dual bivectors."""

    omega1: Form
    omega2: Form
    x1: Polyvector
    x2: Polyvector
    name: str = field(default="pair")

    @classmethod
    def from_forms(cls, omega1: Form, omega2: Form, name: str = "pair") -> SymplecticPair:
        return cls(omega1, omega2, dual_bivector(omega1), dual_bivector(omega2), name)

    def __post_init__(self) -> None:
        dim = self.omega1.dim
        if dim % 4:
            raise InvalidStructureError(self.name, "real dimension divisible by 4")
        for label, omega in (("omega1", self.omega1), ("omega2", self.omega2)):
            if power(omega, dim // 2).is_zero(0.0 if omega.is_exact else None):
                raise InvalidStructureError(self.name, f"{label} nondegenerate")
        theta = self.theta
        top = power(theta, dim // 4).wedge(power(theta.conjugate(), dim // 4))
        if top.is_zero(0.0 if top.is_exact else None):
            raise InvalidStructureError(self.name, "Theta^m ^ conj(Theta)^m != 0")

    @property
    def dim(self) -> int:
        return self.omega1.dim

    @property
    def half_dim(self) -> int:
        """m, with real dimension 4m."""
        return self.dim // 4

    @property
    def theta(self) -> Form:
        return self.omega1 + self.omega2 * I

    def omega(self, j: int) -> Form:
        return _pick(j, self.omega1, self.omega2)

    def bivector(self, j: int) -> Polyvector:
        return _pick(j, self.x1, self.x2)


def _pick(j: int, first, second):
    if j == 1:
        return first
    if j == 2:
        return second
    raise ValueError(f"index must be 1 or 2, got {j}")


def combine(*terms: tuple[Scalar | int, Form]) -> Form:
    """Linear combination, treating empty forms as zero of any degree."""
    result: Form | None = None
    for coeff, form in terms:
        piece = form * coeff
        result = piece if result is None else result + piece
    assert result is not None
    return result


def top(j: int, theta: Form, pair: SymplecticPair) -> Form:
    return wedge(theta, pair.omega(j))


def perp(j: int, theta: Form, pair: SymplecticPair) -> Form:
    if theta.degree < 2:
        return Form.zero(theta.dim, 0)
    return interior(pair.bivector(j), theta)


def operator_H(theta: Form, pair: SymplecticPair) -> Form:
    return combine((1, perp(1, top(1, theta, pair), pair)), (-1, top(1, perp(1, theta, pair), pair)))


def operator_M(theta: Form, pair: SymplecticPair) -> Form:
    return combine((1, perp(2, top(1, theta, pair), pair)), (-1, top(1, perp(2, theta, pair), pair)))


def operator_E1(theta: Form, pair: SymplecticPair) -> Form:
    half = Scalar.exact("1/2")
    return combine((half, perp(1, theta, pair)), (half * I, perp(2, theta, pair)))


def operator_E2(theta: Form, pair: SymplecticPair) -> Form:
    half = Scalar.exact("1/2")
    return combine((half, perp(1, theta, pair)), (-half * I, perp(2, theta, pair)))


def grading(theta: Form, pair: SymplecticPair) -> Form:
    """(2m - k) theta on k-forms."""
    return theta * (pair.dim // 2 - theta.degree)


def _commutator(a: Operator, b: Operator) -> Operator:
    return lambda theta: combine((1, a(b(theta))), (-1, b(a(theta))))


@dataclass
class RelationViolation:
    relation: str
    basis: tuple[int, ...]


@dataclass
class RelationsReport:
    pair: str
    checked: int = 0
    violations: list[RelationViolation] = field(default_factory=list)
    # kernel dimension of top_j below the middle degree and of perp_j above it
    kernels: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations and not any(self.kernels.values())


def relation_table(pair: SymplecticPair) -> list[tuple[str, Operator, Operator]]:
    """The fifteen commutation identities as (name, lhs, rhs)."""
    t1 = lambda th: top(1, th, pair)  # noqa: E731
    t2 = lambda th: top(2, th, pair)  # noqa: E731
    p1 = lambda th: perp(1, th, pair)  # noqa: E731
    p2 = lambda th: perp(2, th, pair)  # noqa: E731
    h = lambda th: grading(th, pair)  # noqa: E731
    m = lambda th: operator_M(th, pair)  # noqa: E731

    def scaled(c: int, op: Operator) -> Operator:
        return lambda th: op(th) * c

    zero: Operator = lambda th: Form.zero(th.dim, 0)  # noqa: E731
    return [
        ("[perp1, top1] = H", _commutator(p1, t1), h),
        ("[perp2, top2] = H", _commutator(p2, t2), h),
        ("[perp1, top2] = -M", _commutator(p1, t2), scaled(-1, m)),
        ("[perp2, top1] = M", _commutator(p2, t1), m),
        ("[perp1, perp2] = 0", _commutator(p1, p2), zero),
        ("[top1, top2] = 0", _commutator(t1, t2), zero),
        ("[perp1, H] = -2 perp1", _commutator(p1, h), scaled(-2, p1)),
        ("[perp2, H] = -2 perp2", _commutator(p2, h), scaled(-2, p2)),
        ("[top1, H] = 2 top1", _commutator(t1, h), scaled(2, t1)),
        ("[top2, H] = 2 top2", _commutator(t2, h), scaled(2, t2)),
        ("[perp1, M] = -2 perp2", _commutator(p1, m), scaled(-2, p2)),
        ("[perp2, M] = 2 perp1", _commutator(p2, m), scaled(2, p1)),
        ("[top1, M] = -2 top2", _commutator(t1, m), scaled(-2, t2)),
        ("[top2, M] = 2 top1", _commutator(t2, m), scaled(2, t1)),
        ("[H, M] = 0", _commutator(h, m), zero),
    ]


def verify_vb_relations(
    pair: SymplecticPair, degrees: Iterable[int] | None = None
) -> RelationsReport:
    """Check every commutation identity on every basis form."""
    report = RelationsReport(pair=pair.name)
    relations = relation_table(pair)
    degrees = list(degrees) if degrees is not None else list(range(pair.dim + 1))
    for k in degrees:
        for indices in basis_tuples(pair.dim, k):
            theta = Form.monomial(pair.dim, indices)
            for name, lhs, rhs in relations:
                report.checked += 1
                if not combine((1, lhs(theta)), (-1, rhs(theta))).is_zero():
                    report.violations.append(RelationViolation(name, indices))
    report.kernels = injectivity_kernels(pair, degrees)
    logger.info(
        f"relations on {pair.name}: {report.checked} checks, "
        f"{len(report.violations)} violations, "
        f"{sum(1 for v in report.kernels.values() if v)} non-injective maps"
    )
    return report


def injectivity_kernels(pair: SymplecticPair, degrees: Iterable[int]) -> dict[str, int]:
    """Kernel dimensions of top_j on Lambda^k, k < n, and of perp_j on Lambda^k, k > n."""
    middle = pair.dim // 2
    kernels: dict[str, int] = {}
    for k in degrees:
        for j in (1, 2):
            if k < middle:
                op: Operator = lambda th, j=j: top(j, th, pair)  # noqa: E731
                kernels[f"top{j} on L{k}"] = kernel_dimension(op, pair.dim, k, k + 2)
            elif k > middle:
                op = lambda th, j=j: perp(j, th, pair)  # noqa: E731
                kernels[f"perp{j} on L{k}"] = kernel_dimension(op, pair.dim, k, k - 2)
    return kernels


def is_effective(theta: Form, j: int, pair: SymplecticPair, tol: float | None = None) -> bool:
    result = perp(j, theta, pair)
    return result.is_zero(0.0 if result.is_exact else tol)


def operator_matrix(op: Operator, dim: int, degree: int, target_degree: int) -> list[list[Scalar]]:
    """Matrix of a linear operator Lambda^degree -> Lambda^target_degree (columns = images)."""
    targets = basis_tuples(dim, target_degree)
    columns = []
    for indices in basis_tuples(dim, degree):
        image = op(Form.monomial(dim, indices))
        columns.append([image.terms.get(t, Scalar()) for t in targets])
    return [list(row) for row in zip(*columns)] if columns and targets else []


def kernel_dimension(op: Operator, dim: int, degree: int, target_degree: int) -> int:
    rows = operator_matrix(op, dim, degree, target_degree)
    return len(basis_tuples(dim, degree)) - (linalg.rank(rows) if rows else 0)


@dataclass(frozen=True, eq=False)
class HodgeLepage:
    effective: Form
    cofactor: Form


_LEPAGE_CACHE: dict[tuple, tuple[list[list[Scalar]], list[tuple[int, ...]]]] = {}


def _lepage_system(omega: Form) -> tuple[list[list[Scalar]], list[tuple[int, ...]]]:
    if omega.key in _LEPAGE_CACHE:
        return _LEPAGE_CACHE[omega.key]
    dim = omega.dim
    degree = dim // 2 - 2
    x = dual_bivector(omega)
    columns = basis_tuples(dim, degree)
    targets = basis_tuples(dim, degree)
    matrix = [[Scalar() for _ in columns] for _ in targets]
    for col, indices in enumerate(columns):
        image = interior(x, wedge(Form.monomial(dim, indices), omega))
        for row, t in enumerate(targets):
            matrix[row][col] = image.terms.get(t, Scalar())
    _LEPAGE_CACHE[omega.key] = (matrix, columns)
    return matrix, columns


def hodge_lepage_decompose(omega_n: Form, omega: Form) -> HodgeLepage:
    """Split an n-form on R^{2n} as effective + cofactor ^ Omega."""
    dim = omega.dim
    if omega_n.degree != dim // 2 or omega_n.dim != dim:
        raise DegreeMismatchError("hodge_lepage_decompose", dim // 2, omega_n.degree)
    if dim // 2 < 2:
        return HodgeLepage(omega_n, Form.zero(dim, 0))
    matrix, columns = _lepage_system(omega)
    rhs = interior(dual_bivector(omega), omega_n)
    rhs_vector = [rhs.terms.get(t, Scalar()) for t in basis_tuples(dim, dim // 2 - 2)]
    solution = linalg.solve(matrix, rhs_vector)
    cofactor = Form.build(dim, dim // 2 - 2, zip(columns, solution))
    effective = omega_n - wedge(cofactor, omega)
    return HodgeLepage(effective.snapped() if not effective.is_exact else effective, cofactor)


def symplectic_map_check(linear_map: LinearMap, source: Form, target: Form) -> bool:
    """True when the map pulls `target` back to `source`."""
    image = pullback(linear_map, target)
    return image.close_to(source) if not image.is_exact else image == source

