#!/usr/bin/env python3
"""
solutions.py - Holomorphic graphs and numerical verification of solutions

A holomorphic phi on C^2 gives the complex lagrangian surface
L_phi = {(z, grad phi(z))} in any Darboux chart. Pulled back to R^8 it is a
candidate generalized solution; its real part, read on the base complex
structure, a candidate regular solution. Everything here is checked on
seeded sample grids.
"""

from __future__ import annotations

import math
import random
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

import numpy as np
import sympy
from loguru import logger
from sympy.parsing.sympy_parser import parse_expr, standard_transformations

from ..config import settings
from ..exceptions import InvalidParameterError, RankDeficientFrameError, VerificationError
from .complex_structures import CHART_LABELS, DarbouxChart, builtin
from .exterior_algebra import Form, LinearMap, Scalar, evaluate_on_frame, phase_labels
from .ma_equations import MongeAmpereEquation, equation, residual_at
from .symplectic_ops import SymplecticPair, coefficient_matrix

Z1, Z2 = sympy.symbols("z1 z2")

_FUNCTIONS = {
    name: getattr(sympy, name)
    for name in ("exp", "log", "sqrt", "sin", "cos", "tan", "sinh", "cosh", "asin", "acos", "atan")
}
_FUNCTIONS.update({"arcsin": sympy.asin, "arccos": sympy.acos, "arctan": sympy.atan, "pi": sympy.pi})


def _parse(text: str, symbols: dict[str, sympy.Symbol]) -> sympy.Expr:
    local = {**_FUNCTIONS, **symbols, "i": sympy.I, "I": sympy.I}
    try:
        expr = parse_expr(text, local_dict=local, transformations=standard_transformations)
    except (SyntaxError, TypeError, sympy.SympifyError) as exc:
        raise InvalidParameterError("expression", f"cannot parse '{text}': {exc}") from exc
    unknown = expr.free_symbols - set(symbols.values())
    if unknown:
        names = ", ".join(sorted(str(s) for s in unknown))
        raise InvalidParameterError("expression", f"unknown variables {names}")
    return expr


# --- functions -----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class HolomorphicFunction:
    """phi(z1, z2) with exact first and second derivatives."""

    expr: sympy.Expr
    text: str = ""

    @classmethod
    def parse(cls, text: str) -> HolomorphicFunction:
        return cls(_parse(text, {"z1": Z1, "z2": Z2}), text)

    @classmethod
    def random(cls, rng: random.Random, degree: int = 3, bound: int = 2) -> HolomorphicFunction:
        """Polynomial with Gaussian-integer coefficients, at least quadratic."""
        expr = sympy.Integer(0)
        for total in range(2, degree + 1):
            for a in range(total + 1):
                c = rng.randint(-bound, bound) + sympy.I * rng.randint(-bound, bound)
                expr += c * Z1**a * Z2 ** (total - a)
        if expr == 0:
            expr = Z1**2
        return cls(sympy.expand(expr), str(expr))

    def __str__(self) -> str:
        return self.text or str(self.expr)

    @cached_property
    def derivatives(self) -> dict[str, sympy.Expr]:
        d1, d2 = sympy.diff(self.expr, Z1), sympy.diff(self.expr, Z2)
        return {
            "phi": self.expr,
            "phi1": d1,
            "phi2": d2,
            "phi11": sympy.diff(d1, Z1),
            "phi12": sympy.diff(d1, Z2),
            "phi22": sympy.diff(d2, Z2),
        }

    @cached_property
    def _numeric(self) -> dict[str, Callable]:
        return {k: sympy.lambdify((Z1, Z2), v, "numpy") for k, v in self.derivatives.items()}

    def evaluate(self, which: str, points: np.ndarray) -> np.ndarray:
        """Vectorized value of phi or one of its derivatives on (n, 2) complex points."""
        fn = self._numeric[which]
        values = fn(points[:, 0], points[:, 1])
        return np.broadcast_to(np.asarray(values, dtype=complex), (points.shape[0],)).copy()

    def gradient(self, points: np.ndarray) -> np.ndarray:
        return np.stack([self.evaluate("phi1", points), self.evaluate("phi2", points)], axis=1)

    def hessian(self, points: np.ndarray) -> np.ndarray:
        h11, h12, h22 = (self.evaluate(k, points) for k in ("phi11", "phi12", "phi22"))
        return np.stack([np.stack([h11, h12], -1), np.stack([h12, h22], -1)], -2)

    def finite_difference_check(
        self, points: np.ndarray, step: float | None = None, tol: float | None = None
    ) -> float:
        """Largest relative gap between exact and central-difference derivatives.

        Raises VerificationError above tolerance.
        """
        h = settings.fd_step if step is None else step
        tol = settings.fd_tolerance if tol is None else tol
        worst = 0.0
        pairs = [
            ("phi", "phi1", 0),
            ("phi", "phi2", 1),
            ("phi1", "phi11", 0),
            ("phi1", "phi12", 1),
            ("phi2", "phi22", 1),
        ]
        for base, target, axis in pairs:
            shift = np.zeros(2, dtype=complex)
            shift[axis] = h
            forward = self.evaluate(base, points + shift)
            backward = self.evaluate(base, points - shift)
            approx = (forward - backward) / (2 * h)
            exact = self.evaluate(target, points)
            gap = np.abs(approx - exact) / np.maximum(1.0, np.abs(exact))
            worst = max(worst, float(np.max(gap)))
        if worst > tol:
            raise VerificationError(
                "derivatives disagree with central differences",
                {"function": str(self), "relative_gap": worst},
            )
        return worst


@dataclass(frozen=True, eq=False)
class RealFunction:
    """f(q1, ..., qn) with its exact Hessian."""

    expr: sympy.Expr
    variables: tuple[sympy.Symbol, ...]
    text: str = ""

    @classmethod
    def parse(cls, text: str, n: int) -> RealFunction:
        qs = tuple(sympy.Symbol(f"q{k}", real=True) for k in range(1, n + 1))
        names = {f"q{k}": q for k, q in enumerate(qs, 1)}
        names.update({f"t{k}": q for k, q in enumerate(qs, 1)})
        return cls(_parse(text, names), qs, text)

    @cached_property
    def _hessian(self) -> Callable:
        return sympy.lambdify(self.variables, sympy.hessian(self.expr, self.variables), "numpy")

    def hessian_at(self, point: Sequence[float]) -> np.ndarray:
        return np.asarray(self._hessian(*point), dtype=complex)


def base_coordinates(structure) -> list[dict[str, Scalar]]:
    """z1, z2 of a chart as functionals of q alone (structures coming from R^4)."""
    labels = phase_labels(4)
    rows = []
    for row in structure.chart.rows.rows[:2]:
        coeffs = dict(zip(labels, row))
        if any(not coeffs[f"p{k}"].is_zero() for k in range(1, 5)):
            raise InvalidParameterError("structure", f"{structure.name} does not come from R^4")
        rows.append({f"q{k}": coeffs[f"q{k}"] for k in range(1, 5)})
    return rows


def real_part_on_base(phi: HolomorphicFunction, structure) -> RealFunction:
    """Re phi(z1(q), z2(q)) for the base complex structure of a chart."""
    qs = tuple(sympy.Symbol(f"q{k}", real=True) for k in range(1, 5))
    z = [
        sum((c.to_sympy() * q for c, q in zip(row.values(), qs)), sympy.Integer(0))
        for row in base_coordinates(structure)
    ]
    value = phi.expr.subs({Z1: z[0], Z2: z[1]}, simultaneous=True)
    return RealFunction(sympy.re(sympy.expand_complex(value)), qs, f"Re({phi})")


# --- sampling ------------------------------------------------------------------


def complex_samples(
    count: int | None = None,
    radius: float | None = None,
    seed: int | None = None,
    center: Sequence[complex] = (0j, 0j),
) -> np.ndarray:
    """Seeded points of a polydisc in C^2, shape (count, 2)."""
    count = settings.grid_size if count is None else count
    radius = settings.grid_radius if radius is None else radius
    rng = np.random.default_rng(settings.grid_seed if seed is None else seed)
    r = radius * np.sqrt(rng.random((count, 2)))
    angle = 2 * np.pi * rng.random((count, 2))
    return np.asarray(center, dtype=complex) + r * np.exp(1j * angle)


def real_grid(lower: Sequence[float], upper: Sequence[float], size: int) -> np.ndarray:
    """Tensor grid with `size` points per axis, shape (size**n, n)."""
    axes = [np.linspace(a, b, size) for a, b in zip(lower, upper)]
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack([m.ravel() for m in mesh], axis=1)


# --- submanifolds -----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SampledSubmanifold:
    """Sample points of a submanifold of R^dim with tangent frames (dim x k)."""

    points: np.ndarray
    frames: np.ndarray
    name: str = "L"

    def __post_init__(self) -> None:
        k = self.frames.shape[2]
        for index, frame in enumerate(self.frames):
            rank = int(np.linalg.matrix_rank(frame, tol=1e-9))
            if rank < k:
                raise RankDeficientFrameError(index, rank, k)

    @property
    def dim(self) -> int:
        return self.frames.shape[1]

    @property
    def size(self) -> int:
        return self.frames.shape[0]

    @classmethod
    def from_expressions(
        cls,
        coordinates: Sequence[str],
        parameters: Sequence[str],
        samples: np.ndarray,
        name: str = "L",
    ) -> SampledSubmanifold:
        """Parametrized submanifold; coordinates listed as (q1..qn, p1..pn)."""
        params = [sympy.Symbol(p, real=True) for p in parameters]
        exprs = [_parse(c, dict(zip(parameters, params))) for c in coordinates]
        n = len(exprs) // 2
        # interleave to (q1, p1, ..., qn, pn)
        ordered = [exprs[k // 2] if k % 2 == 0 else exprs[n + k // 2] for k in range(2 * n)]
        position = sympy.lambdify(params, ordered, "numpy")
        jacobian = sympy.lambdify(params, sympy.Matrix(ordered).jacobian(params), "numpy")
        points = np.array([np.asarray(position(*s), dtype=float) for s in samples])
        frames = np.array([np.asarray(jacobian(*s), dtype=float) for s in samples])
        return cls(points, frames, name)


def _real_lift(chart: DarbouxChart) -> np.ndarray:
    return np.linalg.inv(chart.real_matrix())


def chart_graph(
    chart: DarbouxChart,
    z: np.ndarray,
    u: np.ndarray,
    holomorphic_jacobian: np.ndarray,
    antiholomorphic_jacobian: np.ndarray | None = None,
    name: str = "L",
) -> SampledSubmanifold:
    """Surface {(z, u(z))} in chart coordinates, pulled back to R^8.

    Jacobians are (n, 2, 2): du = A dz + B dzbar.
    """
    lift = _real_lift(chart)
    n = z.shape[0]
    b = np.zeros_like(holomorphic_jacobian) if antiholomorphic_jacobian is None else antiholomorphic_jacobian
    points = np.empty((n, 8))
    frames = np.empty((n, 8, 4))
    for s in range(n):
        w = np.concatenate([z[s], u[s]])
        points[s] = lift @ np.concatenate([w.real, w.imag])
        columns = []
        for axis in range(2):
            for direction in (1.0, 1j):
                dz = np.zeros(2, dtype=complex)
                dz[axis] = direction
                dw = np.concatenate([dz, holomorphic_jacobian[s] @ dz + b[s] @ dz.conjugate()])
                columns.append(lift @ np.concatenate([dw.real, dw.imag]))
        frames[s] = np.stack(columns, axis=1)
    return SampledSubmanifold(points, frames, name)


def graph(
    phi: HolomorphicFunction, chart: DarbouxChart, samples: np.ndarray | None = None
) -> SampledSubmanifold:
    """L_phi = {(z1, z2, phi_1, phi_2)} realized in R^8 through the chart."""
    z = complex_samples() if samples is None else samples
    logger.debug(f"graph of {phi} on {z.shape[0]} samples")
    return chart_graph(chart, z, phi.gradient(z), phi.hessian(z), name=f"L[{phi}]")


# --- maps -------------------------------------------------------------------------


def map_G_prop2() -> LinearMap:
    """G(q, p) = (p1 - i p2, q3 + i q4, -q1 - i q2, p3 - i p4)."""
    labels = phase_labels(4)
    i = Scalar.exact(0, 1)
    functionals = [
        {"p1": 1, "p2": -i},
        {"q3": 1, "q4": i},
        {"q1": -1, "q2": -i},
        {"p3": 1, "p4": -i},
    ]
    rows = [[Scalar.of(f.get(label, 0)) for label in labels] for f in functionals]
    return LinearMap.from_rows(rows, labels, CHART_LABELS)


def map_F_prop1() -> LinearMap:
    """Darboux chart (Z1, Z2, U1, U2) of J2 with alpha^2 = (1 + 2i)/sqrt(5)."""
    alpha = np.sqrt((1 + 2j) / math.sqrt(5))
    inv = 1 / alpha
    c = -1 + 1j
    r2 = math.sqrt(2)
    # columns q1, p1, q2, p2, q3, p3, q4, p4
    z1 = [alpha, (1 - 1j) * inv, c * alpha, -1j * inv, 0, 0, 0, 0]
    u1 = [alpha, -(1 - 1j) * inv, c * alpha, 1j * inv, 0, 0, 0, 0]
    z2 = [0, 0, 0, 0, alpha, -(1 - 1j) * inv, c * alpha, 1j * inv]
    u2 = [0, 0, 0, 0, alpha, (1 - 1j) * inv, c * alpha, -1j * inv]
    rows = [
        [v / (1j * r2) for v in z1],
        [v / r2 for v in z2],
        [v / (1j * r2) for v in u1],
        [v / r2 for v in u2],
    ]
    return LinearMap.from_rows([[complex(v) for v in row] for row in rows], phase_labels(4), CHART_LABELS)


def chart_of(linear_map: LinearMap) -> DarbouxChart:
    return DarbouxChart(linear_map)


# --- restriction checks -------------------------------------------------------------


def restriction_max(form: Form, frames: np.ndarray) -> float:
    """Largest |form| over the samples and all degree-sized column selections."""
    if form.degree == 0 or not form.terms:
        return 0.0
    if form.degree == 2:
        w = np.array([[complex(v) for v in row] for row in coefficient_matrix(form)])
        return float(max(np.max(np.abs(f.T @ w @ f)) for f in frames))
    worst = 0.0
    for frame in frames:
        for cols in combinations(range(frame.shape[1]), form.degree):
            worst = max(worst, abs(evaluate_on_frame(form, frame[:, list(cols)])))
    return worst


@dataclass
class VerificationReport:
    """Outcome of a numerical verification."""

    name: str
    tol: float
    samples: int
    maxima: dict[str, float] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    passed: bool = False

    @property
    def residual_max(self) -> float:
        return max(self.maxima.values(), default=0.0)

    def finish(self) -> VerificationReport:
        self.passed = all(v <= self.tol for v in self.maxima.values())
        logger.info(
            f"{self.name}: {'pass' if self.passed else 'FAIL'} "
            f"(max {self.residual_max:.3e}, tol {self.tol:.1e}, {self.samples} samples)"
        )
        return self


def verify_generalized(
    surface: SampledSubmanifold,
    omega: Form,
    tol: float | None = None,
    symplectic: Form | None = None,
) -> VerificationReport:
    """Omega|_L = 0 and omega|_L = 0 on every tangent frame."""
    from .exterior_algebra import standard_symplectic

    tol = settings.inexact_tolerance if tol is None else tol
    big = standard_symplectic(omega.dim // 2) if symplectic is None else symplectic
    report = VerificationReport(f"generalized[{surface.name}]", tol, surface.size)
    report.maxima["Omega|L"] = restriction_max(big, surface.frames)
    report.maxima["omega|L"] = restriction_max(omega, surface.frames)
    return report.finish()


def is_bilagrangian_subspace(frame: np.ndarray, pair: SymplecticPair, tol: float | None = None) -> bool:
    """A half-dimensional subspace is complex lagrangian iff both real parts vanish on it."""
    tol = settings.inexact_tolerance if tol is None else tol
    frames = frame[None] if frame.ndim == 2 else frame
    return max(restriction_max(pair.omega1, frames), restriction_max(pair.omega2, frames)) <= tol


def verify_complex_lagrangian(surface: SampledSubmanifold, structure, tol: float | None = None) -> bool:
    tol = settings.inexact_tolerance if tol is None else tol
    omega_max = restriction_max(structure.omega, surface.frames)
    omega_j_max = restriction_max(structure.omega_j, surface.frames)
    logger.debug(
        f"{surface.name} under {structure.name}: |Omega| {omega_max:.2e}, |Omega_J| {omega_j_max:.2e}"
    )
    return omega_max <= tol and omega_j_max <= tol


def verify_regular(
    f: RealFunction,
    eq: MongeAmpereEquation,
    grid: np.ndarray,
    tol: float | None = None,
) -> VerificationReport:
    """max |residual(hess f)| over the grid; points outside the domain are skipped."""
    tol = settings.regular_tolerance if tol is None else tol
    report = VerificationReport(f"regular[{f.text or f.expr}, {eq.name}]", tol, 0)
    worst = 0.0
    skipped = 0
    with np.errstate(all="ignore"):
        for point in grid:
            h = f.hessian_at(point)
            if not np.all(np.isfinite(h)) or np.max(np.abs(h.imag)) > 1e-12:
                skipped += 1
                continue
            worst = max(worst, abs(residual_at(eq, h.real)))
            report.samples += 1
    if skipped:
        report.notes.append(f"{skipped} grid points outside the domain skipped")
    if not report.samples:
        raise InvalidParameterError("grid", "no grid point inside the domain")
    report.maxima["residual"] = worst
    return report.finish()


def real_complex_hessian_identity(
    phi: HolomorphicFunction, structure, samples: np.ndarray | None = None, tol: float | None = None
) -> bool:
    """hess_R(Re phi) = |hess_C phi|^2 on the base structure."""
    tol = settings.regular_tolerance if tol is None else tol
    z = complex_samples() if samples is None else samples
    real = real_part_on_base(phi, structure)
    hess_c = np.linalg.det(phi.hessian(z))
    worst = 0.0
    for s, q in enumerate(base_samples(structure, z)):
        lhs = np.linalg.det(real.hessian_at(q).real)
        rhs = abs(hess_c[s]) ** 2
        worst = max(worst, abs(lhs - rhs) / max(1.0, rhs))
    return worst <= tol


def base_samples(structure, z: np.ndarray) -> np.ndarray:
    """Real points q with (z1(q), z2(q)) = z."""
    coords = base_coordinates(structure)
    matrix = np.array([[complex(c) for c in row.values()] for row in coords])
    stacked = np.vstack([matrix.real, matrix.imag])
    return np.array([np.linalg.solve(stacked, np.concatenate([p.real, p.imag])) for p in z])


def prop7_family_check(
    phi: HolomorphicFunction, samples: np.ndarray | None = None, tol: float | None = None
) -> VerificationReport:
    """phi12 + conj(phi12) +- |phi11|^2 = 0 pointwise, then Re phi against Plebanski II.

    Both signs of the constraint are evaluated; the report names the one that holds.
    """
    tol = settings.regular_tolerance if tol is None else tol
    z = complex_samples() if samples is None else samples
    phi11, phi12 = phi.evaluate("phi11", z), phi.evaluate("phi12", z)
    report = VerificationReport(f"prop7[{phi}]", tol, z.shape[0])
    constraints = {
        sign: np.abs(phi12 + phi12.conjugate() + sign * np.abs(phi11) ** 2) for sign in (1, -1)
    }
    holding = [sign for sign, values in constraints.items() if float(np.max(values)) <= tol]
    for sign, values in constraints.items():
        report.notes.append(f"constraint sign {sign:+d}: max {float(np.max(values)):.3e}")
    if holding:
        report.notes.append(f"constraint holds with sign {holding[0]:+d}")
        report.maxima["constraint"] = float(np.max(constraints[holding[0]]))
    else:
        bad = int(np.argmax(constraints[1]))
        report.notes.append(f"constraint violated at sample {bad}")
        report.maxima["constraint"] = float(min(np.max(v) for v in constraints.values()))
    structure = builtin("J")
    regular = verify_regular(
        real_part_on_base(phi, structure), equation("plebanski2"), base_samples(structure, z), tol
    )
    report.maxima["residual"] = regular.maxima["residual"]
    return report.finish()


# --- propositions -----------------------------------------------------------------


@dataclass(frozen=True)
class PropositionCase:
    """Default and failing inputs of one constructive statement."""

    number: int
    kind: str  # "generalized", "regular" or "family"
    equation: str
    chart: str  # "F", "G" or a structure name
    default_phi: str
    failing_phi: str
    failing_chart: str | None = None
    description: str = ""


PROPOSITIONS: dict[int, PropositionCase] = {
    case.number: case
    for case in (
        PropositionCase(1, "generalized", "slag", "F", "(z1**2 + z2**2)/2", "z1**2",
                        description="|phi11|^2 = |phi22|^2 gives special lagrangian F^-1(L_phi)"),
        PropositionCase(2, "generalized", "hess+", "G", "(z1**2 + z2**2)/2", "z1**2",
                        description="|phi11|^2 = |phi22|^2 gives G^-1(L_phi) solving hess f = 1"),
        PropositionCase(3, "generalized", "hess-", "G", "z1*z2", "(z1**2 + z2**2)/2",
                        description="phi = a(z1) b(z2) gives G^-1(L_phi) solving hess f = -1"),
        PropositionCase(4, "generalized", "hess+", "K", "random", "random", failing_chart="J",
                        description="complex lagrangian surfaces for K solve hess f = 1"),
        PropositionCase(5, "generalized", "plebanski1", "G", "2*z1 + z2**3", "z1**2",
                        description="phi = a z1 + b(z2) gives G^-1(L_phi) solving Plebanski I"),
        PropositionCase(6, "regular", "plebanski1", "Jtilde", "z1*z2 + z1**3 + z2**3", "z1**2 + z2**2",
                        description="Re(z1 z2 + a(z1) + b(z2)) solves Plebanski I"),
        PropositionCase(7, "family", "plebanski2", "J", "z1**2 - 2*z1*z2", "z1**2",
                        description="phi12 + conj(phi12) + |phi11|^2 = 0 gives Re phi solving Plebanski II"),
        PropositionCase(8, "regular", "plebanski2", "Jtilde", "z2**2 + z1*z2", "z1**2",
                        description="Re(a(z2) + b(z2) z1) solves Plebanski II"),
    )
}


def _resolve_chart(name: str) -> DarbouxChart:
    if name == "F":
        return chart_of(map_F_prop1())
    if name == "G":
        return chart_of(map_G_prop2())
    return builtin(name).chart


def run_proposition(
    number: int,
    phi_text: str | None = None,
    samples: int | None = None,
    tol: float | None = None,
    failing: bool = False,
) -> VerificationReport:
    """Run the verification pipeline of one proposition."""
    if number not in PROPOSITIONS:
        raise InvalidParameterError("proposition", f"expected 1..8, got {number}")
    case = PROPOSITIONS[number]
    text = phi_text or (case.failing_phi if failing else case.default_phi)
    if text == "random":
        phi = HolomorphicFunction.random(random.Random(settings.grid_seed))
    else:
        phi = HolomorphicFunction.parse(text)
    z = complex_samples(samples)
    phi.finite_difference_check(z[: min(8, len(z))])
    eq = equation(case.equation)
    chart_name = case.failing_chart if failing and case.failing_chart else case.chart
    if case.kind == "generalized":
        tol = settings.inexact_tolerance if tol is None else tol
        report = verify_generalized(graph(phi, _resolve_chart(chart_name), z), eq.form, tol)
    elif case.kind == "family":
        report = prop7_family_check(phi, z, tol)
    else:
        structure = builtin(chart_name)
        report = verify_regular(real_part_on_base(phi, structure), eq, base_samples(structure, z), tol)
    report.name = f"proposition {number}: {report.name}"
    report.notes.insert(0, case.description)
    return report


def worked_example_surface(samples: int = 16) -> SampledSubmanifold:
    """L = {(q1, -e^q1 sin q2, e^q1 cos q2, -q2)} on a square of parameters."""
    grid = real_grid((-1.0, -1.0), (1.0, 1.0), samples)
    return SampledSubmanifold.from_expressions(
        ["s", "-exp(s)*sin(t)", "exp(s)*cos(t)", "-t"], ["s", "t"], grid, "worked example"
    )


WORKED_EXAMPLE_FUNCTION = "t2*asin(t2*exp(-t1)) + sqrt(exp(2*t1) - t2**2)"


def worked_example_regular(size: int = 16, tol: float | None = None) -> VerificationReport:
    """u(t1, t2) against hess f = 1 where exp(2 t1) > t2^2."""
    f = RealFunction.parse(WORKED_EXAMPLE_FUNCTION, 2)
    return verify_regular(f, equation("hess2"), real_grid((0.0, -0.5), (1.0, 0.5), size), tol)
