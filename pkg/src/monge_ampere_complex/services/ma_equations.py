#!/usr/bin/env python3
"""
ma_equations.py - Catalog of Monge-Ampere equations with constant coefficients

An equation on R^n is an effective n-form on T*R^n. Its symbol is obtained by
substituting dp_i -> sum_j f_ij dq_j and reading the coefficient of
dq_1^...^dq_n. Also holds the 2D/3D invariants (pfaffian, A tensor,
Lychagin-Rubtsov metric, Hitchin tensor) and the complex model equations
in two variables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Any

import numpy as np
import sympy
from loguru import logger

from ..exceptions import DegreeMismatchError, DimensionMismatchError, UnknownNameError
from ..utils import linalg
from .exterior_algebra import (
    I,
    Form,
    Polyvector,
    Scalar,
    interior,
    p_index,
    power,
    q_index,
    standard_symplectic,
    wedge,
    wedge_all,
)
from .symplectic_ops import coefficient_matrix, hodge_lepage_decompose


# --- symbols -----------------------------------------------------------------


def hessian_symbols(n: int) -> sympy.Matrix:
    """Symmetric matrix of indeterminates f_ij (f_ji identified with f_ij)."""
    return sympy.Matrix(
        n, n, lambda i, j: sympy.Symbol(f"f{min(i, j) + 1}{max(i, j) + 1}", real=True)
    )


def hessian_variables(n: int) -> list[sympy.Symbol]:
    h = hessian_symbols(n)
    return [h[i, j] for i in range(n) for j in range(i, n)]


def symbol_reduce(omega: Form) -> sympy.Expr:
    """Hessian-minor polynomial of the Monge-Ampere operator of omega."""
    n = omega.dim // 2
    if omega.degree != n:
        raise DegreeMismatchError("symbol_reduce", n, omega.degree)
    f = hessian_symbols(n)
    rows: dict[int, list[Any]] = {}
    for i in range(1, n + 1):
        rows[q_index(i)] = [1 if j == i - 1 else 0 for j in range(n)]
        rows[p_index(i)] = [f[i - 1, j] for j in range(n)]
    total = sympy.Integer(0)
    for indices, value in omega.terms.items():
        total += value.to_sympy() * sympy.Matrix([rows[a] for a in indices]).det()
    return sympy.expand(total)


def same_up_to_sign(a: sympy.Expr, b: sympy.Expr) -> int:
    """+1 or -1 when a = +-b as polynomials, 0 otherwise."""
    if sympy.expand(a - b) == 0:
        return 1
    if sympy.expand(a + b) == 0:
        return -1
    return 0


def principal_minor_sum(n: int, order: int) -> sympy.Expr:
    f = hessian_symbols(n)
    return sympy.expand(
        sum(f.extract(list(c), list(c)).det() for c in combinations(range(n), order))
    )


# --- equations ---------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class MongeAmpereEquation:
    """Named effective form with its symbol."""

    name: str
    dimension: int
    effective_form: Form
    residual: sympy.Expr
    description: str = ""
    reconstructed: bool = False
    notes: tuple[str, ...] = field(default=())

    @property
    def form(self) -> Form:
        return self.effective_form

    @cached_property
    def evaluator(self):
        """Numeric residual as a function of a symmetric Hessian array."""
        n = self.dimension
        fn = sympy.lambdify(hessian_variables(n), self.residual, "numpy")
        index = [(i, j) for i in range(n) for j in range(i, n)]
        return lambda h: fn(*[h[i, j] for i, j in index])


def _monomial(n: int, *labels: str) -> tuple[int, ...]:
    index = {}
    for i in range(1, n + 1):
        index[f"q{i}"] = q_index(i)
        index[f"p{i}"] = p_index(i)
    return tuple(index[label] for label in labels)


def _form(n: int, terms: list[tuple[int, tuple[str, ...]]]) -> Form:
    return Form.build(2 * n, n, [(_monomial(n, *labels), c) for c, labels in terms])


def slag_form(n: int) -> Form:
    """Im (dq1 + i dp1) ^ ... ^ (dqn + i dpn)."""
    factors = [
        Form.build(2 * n, 1, {(q_index(i),): 1, (p_index(i),): I}) for i in range(1, n + 1)
    ]
    return wedge_all(factors, 2 * n).imag_part()


def _effective(
    name: str,
    n: int,
    form: Form,
    description: str,
    expected: sympy.Expr | None = None,
    reconstructed: bool = False,
    notes: tuple[str, ...] = (),
) -> MongeAmpereEquation:
    """Replace a non-effective form by its effective part (same symbol)."""
    omega = standard_symplectic(n)
    notes = tuple(notes)
    if not wedge(form, omega).is_zero():
        effective = hodge_lepage_decompose(form, omega).effective
        logger.warning(f"{name}: listed form is not effective; keeping its effective part")
        form, reconstructed = effective, True
        notes += ("replaced by effective part",)
    residual = symbol_reduce(form)
    if expected is not None:
        sign = same_up_to_sign(residual, expected)
        if sign == 0:
            raise ValueError(f"{name}: symbol {residual} does not match {expected}")
        if sign < 0:
            notes += ("symbol matches up to overall sign -1",)
    return MongeAmpereEquation(name, n, form, residual, description, reconstructed, notes)


def _four_dimensional() -> list[MongeAmpereEquation]:
    f = hessian_symbols(4)
    hess = f.det()
    equations = [
        _effective(
            "slag",
            4,
            slag_form(4),
            "Delta f - hess_1 f - hess_2 f - hess_3 f - hess_4 f = 0",
            principal_minor_sum(4, 1) - principal_minor_sum(4, 3),
        ),
        _effective(
            "hess+",
            4,
            _form(4, [(1, ("p1", "p2", "p3", "p4")), (-1, ("q1", "q2", "q3", "q4"))]),
            "hess(f) = 1",
            hess - 1,
        ),
        _effective(
            "hess-",
            4,
            _form(4, [(1, ("p1", "p2", "p3", "p4")), (1, ("q1", "q2", "q3", "q4"))]),
            "hess(f) = -1",
            hess + 1,
        ),
        _effective(
            "plebanski1",
            4,
            _form(4, [(1, ("q1", "q2", "p1", "p2")), (-1, ("q1", "q2", "q3", "q4"))]),
            "f13 f24 - f14 f23 = 1",
            f[0, 2] * f[1, 3] - f[0, 3] * f[1, 2] - 1,
        ),
    ]
    # The listed Plebanski II form mixes degrees; rebuild it from the PDE.
    logger.warning("plebanski2: listed form is not a 4-form; using the reconstruction")
    equations.append(
        _effective(
            "plebanski2",
            4,
            _form(
                4,
                [
                    (1, ("q1", "q2", "q3", "p2")),
                    (1, ("q1", "q2", "q4", "p1")),
                    (1, ("q3", "q4", "p1", "p2")),
                ],
            ),
            "f11 f22 - f12^2 + f24 - f13 = 0",
            f[0, 0] * f[1, 1] - f[0, 1] ** 2 + f[1, 3] - f[0, 2],
            reconstructed=True,
            notes=("rebuilt from the PDE display",),
        )
    )
    equations.append(_grant(f))
    return equations


def _grant(f: sympy.Matrix) -> MongeAmpereEquation:
    expected = f[0, 0] + f[0, 1] * f[2, 3] - f[0, 3] * f[1, 2]
    listed = _form(4, [(1, ("q2", "q3", "q4", "p1")), (-1, ("q1", "q3", "p1", "p3"))])
    if same_up_to_sign(symbol_reduce(listed), expected):
        return _effective("grant", 4, listed, "f11 + f12 f34 - f14 f23 = 0", expected)
    corrected = _form(4, [(-1, ("q2", "q3", "q4", "p1")), (-1, ("q1", "q3", "p1", "p3"))])
    logger.warning(
        f"grant: listed form has symbol {symbol_reduce(listed)}; using sign-corrected form"
    )
    return _effective(
        "grant",
        4,
        corrected,
        "f11 + f12 f34 - f14 f23 = 0",
        expected,
        reconstructed=True,
        notes=("termwise sign corrected",),
    )


def _two_dimensional() -> list[MongeAmpereEquation]:
    return [
        _effective("laplace2", 2, _form(2, [(1, ("q1", "p2")), (-1, ("q2", "p1"))]), "Delta f = 0"),
        _effective("wave2", 2, _form(2, [(1, ("q1", "p2")), (1, ("q2", "p1"))]), "box f = 0"),
        _effective("parabolic2", 2, _form(2, [(1, ("q1", "p2"))]), "single second derivative = 0"),
        _effective(
            "hess2",
            2,
            _form(2, [(1, ("p1", "p2")), (-1, ("q1", "q2"))]),
            "hess(f) = 1",
            hessian_symbols(2).det() - 1,
        ),
    ]


def _three_dimensional() -> list[MongeAmpereEquation]:
    return [
        _effective(
            "hess3",
            3,
            _form(3, [(1, ("p1", "p2", "p3")), (-1, ("q1", "q2", "q3"))]),
            "hess(f) = 1",
        ),
        _effective("slag3", 3, slag_form(3), "Delta f - hess(f) = 0"),
        _effective(
            "pseudo_slag3",
            3,
            _form(
                3,
                [
                    (1, ("p1", "q2", "q3")),
                    (-1, ("q1", "p2", "q3")),
                    (1, ("q1", "q2", "p3")),
                    (1, ("p1", "p2", "p3")),
                ],
            ),
            "box f + hess(f) = 0",
        ),
        _effective(
            "laplace3",
            3,
            _form(3, [(1, ("p1", "q2", "q3")), (1, ("q1", "p2", "q3")), (1, ("q1", "q2", "p3"))]),
            "Delta f = 0",
        ),
        _effective(
            "wave3",
            3,
            _form(3, [(1, ("p1", "q2", "q3")), (-1, ("q1", "p2", "q3")), (1, ("q1", "q2", "p3"))]),
            "box f = 0",
        ),
        _effective(
            "laplace_q2q3",
            3,
            _form(3, [(1, ("q1", "p2", "q3")), (1, ("q1", "q2", "p3"))]),
            "Delta_{q2,q3} f = 0",
        ),
        _effective(
            "wave_q2q3",
            3,
            _form(3, [(1, ("q1", "p2", "q3")), (-1, ("q1", "q2", "p3"))]),
            "box_{q2,q3} f = 0",
        ),
        _effective("parabolic3", 3, _form(3, [(1, ("p1", "q2", "q3"))]), "f11 = 0"),
    ]


@lru_cache(maxsize=1)
def _catalog() -> tuple[MongeAmpereEquation, ...]:
    equations = _two_dimensional() + _three_dimensional() + _four_dimensional()
    logger.debug(f"catalog built with {len(equations)} equations")
    return tuple(equations)


def catalog() -> list[MongeAmpereEquation]:
    return list(_catalog())


EQUATION_NAMES_4D = ("slag", "hess+", "hess-", "plebanski1", "plebanski2", "grant")
TABLE2_ORDER = (
    "hess3",
    "slag3",
    "pseudo_slag3",
    "laplace3",
    "wave3",
    "laplace_q2q3",
    "wave_q2q3",
    "parabolic3",
)
TABLE1_ORDER = ("laplace2", "wave2", "parabolic2")
_EQUATION_ALIASES = {
    "hess": "hess+",
    "hess1": "hess+",
    "hess=1": "hess+",
    "hess=-1": "hess-",
    "pi": "plebanski1",
    "pii": "plebanski2",
    "sl": "slag",
}


def equation(name: str) -> MongeAmpereEquation:
    key = name.strip().lower().replace(" ", "")
    key = _EQUATION_ALIASES.get(key, key)
    for eq in _catalog():
        if eq.name == key:
            return eq
    raise UnknownNameError("equation", name, [eq.name for eq in _catalog()])


def residual_at(eq: MongeAmpereEquation, hessian: Any) -> float | complex:
    """Evaluate the symbol at a numeric symmetric Hessian."""
    h = np.asarray(hessian, dtype=complex)
    if h.shape != (eq.dimension, eq.dimension):
        raise DimensionMismatchError("residual_at", eq.dimension, h.shape[0])
    value = complex(eq.evaluator(h))
    return value.real if abs(value.imag) <= 1e-12 else value


# --- low-dimensional invariants ----------------------------------------------


def pfaffian_2d(omega: Form) -> Scalar:
    """pf with omega ^ omega = pf Omega ^ Omega."""
    if omega.dim != 4 or omega.degree != 2:
        raise DegreeMismatchError("pfaffian_2d", 2, omega.degree)
    big = power(standard_symplectic(2), 2).top_coefficient()
    return wedge(omega, omega).top_coefficient() / big


@dataclass(frozen=True)
class TensorSquare:
    """A tensor and the class of its square."""

    matrix: list[list[Scalar]] | None
    square: list[list[Scalar]] | None
    square_class: str  # "+1", "-1", "0" or "degenerate"


def _square_class(square: list[list[Scalar]]) -> str:
    n = len(square)
    diagonal = square[0][0]
    scalar = all(
        square[i][j] == (diagonal if i == j else Scalar()) for i in range(n) for j in range(n)
    )
    if not scalar:
        nilpotent = all(v.is_zero() for row in linalg.matmul(square, square) for v in row)
        return "0" if nilpotent else "mixed"
    if diagonal.is_zero():
        return "0"
    return "+1" if complex(diagonal).real > 0 else "-1"


def a_tensor_2d(omega: Form) -> TensorSquare:
    """A with omega(., .) = Omega(A ., .)."""
    w_omega = coefficient_matrix(omega)
    w = coefficient_matrix(standard_symplectic(2))
    a = linalg.transpose(linalg.matmul(w_omega, linalg.inverse(w)))
    square = linalg.matmul(a, a)
    return TensorSquare(a, square, _square_class(square))


def lr_metric_3d(omega: Form) -> list[list[Scalar]]:
    """g with g(X, Y) Omega^3 = -i_X(omega) ^ i_Y(omega) ^ Omega.

    The sign makes the hess(f) = 1 row come out with signature (3, 3) and the
    special Lagrangian row negative definite.
    """
    if omega.dim != 6 or omega.degree != 3:
        raise DegreeMismatchError("lr_metric_3d", 3, omega.degree)
    big = standard_symplectic(3)
    volume = power(big, 3).top_coefficient()
    contractions = [interior(Polyvector.monomial(6, (a,)), omega) for a in range(6)]
    g = [[Scalar() for _ in range(6)] for _ in range(6)]
    for a in range(6):
        for b in range(a, 6):
            value = wedge(wedge(contractions[a], contractions[b]), big)
            entry = -(value.top_coefficient() if value.degree == 6 else Scalar()) / volume
            g[a][b] = g[b][a] = entry
    return g


def lr_signature(omega: Form) -> tuple[int, int, int]:
    from .hermitian_invariants import inertia

    return inertia(lr_metric_3d(omega))


def hitchin_tensor_3d(omega: Form) -> TensorSquare:
    """A with g(A ., .) = Omega(., .); "degenerate" when g is singular."""
    g = lr_metric_3d(omega)
    if linalg.rank(g) < 6:
        return TensorSquare(None, None, "degenerate")
    w = coefficient_matrix(standard_symplectic(3))
    a = [[-v for v in row] for row in linalg.matmul(linalg.inverse(g), w)]
    square = linalg.matmul(a, a)
    return TensorSquare(a, square, _square_class(square))


# --- complex model equations in two variables ---------------------------------

# coordinates of the vector (1, phi11, phi12, phi22, hess phi)
_SLOTS = ("1", "phi11", "phi12", "phi22", "hess")


@dataclass(frozen=True)
class ComplexModel:
    name: str
    text: str
    hermitian: dict[tuple[str, str], int]
    table_signature: tuple[int, int]
    table_spectrum: tuple[float, ...]


COMPLEX_MODELS: tuple[ComplexModel, ...] = (
    ComplexModel("phi11_sq", "|phi11|^2 = 0", {("phi11", "phi11"): 1}, (1, 0), (0, 0, 0, 0, 0)),
    ComplexModel("phi12_sq", "|phi12|^2 = 0", {("phi12", "phi12"): 1}, (1, 0), (1, 0, 0, 0, 0)),
    ComplexModel(
        "phi11_sq_one",
        "|phi11|^2 = 1",
        {("phi11", "phi11"): 1, ("1", "1"): -1},
        (1, 1),
        (0, 0, 0, 0, 0),
    ),
    ComplexModel(
        "phi12_sq_one",
        "|phi12|^2 = 1",
        {("phi12", "phi12"): 1, ("1", "1"): -1},
        (1, 1),
        (1, 0, 0, 0, 0),
    ),
    ComplexModel(
        "phi11_sq_minus_phi22_sq",
        "|phi11|^2 - |phi22|^2 = 0",
        {("phi11", "phi11"): 1, ("phi22", "phi22"): -1},
        (1, 1),
        (-1, -1, 0, 0, 0),
    ),
    ComplexModel(
        "phi11_sq_plus_phi12_sq",
        "|phi11|^2 + |phi12|^2 = 0",
        {("phi11", "phi11"): 1, ("phi12", "phi12"): 1},
        (2, 0),
        (1, 0, 0, 0, 0),
    ),
    ComplexModel(
        "phi11_sq_plus_phi22_sq",
        "|phi11|^2 + |phi22|^2 = 0",
        {("phi11", "phi11"): 1, ("phi22", "phi22"): 1},
        (2, 0),
        (1, 1, 0, 0, 0),
    ),
    ComplexModel(
        "phi11_sq_plus_phi12_sq_one",
        "|phi11|^2 + |phi12|^2 = 1",
        {("phi11", "phi11"): 1, ("phi12", "phi12"): 1, ("1", "1"): -1},
        (2, 1),
        (1, 0, 0, 0, 0),
    ),
    ComplexModel(
        "phi12_re_minus_phi11_sq",
        "phi12 + conj(phi12) - |phi11|^2 = 0",
        {("phi12", "1"): 1, ("1", "phi12"): 1, ("phi11", "phi11"): -1},
        (2, 1),
        (0, 0, 0, 0, 0),
    ),
)

PROPOSITION7_MODEL = ComplexModel(
    "phi12_re_plus_phi11_sq",
    "phi12 + conj(phi12) + |phi11|^2 = 0",
    {("phi12", "1"): 1, ("1", "phi12"): 1, ("phi11", "phi11"): 1},
    (2, 1),
    (0, 0, 0, 0, 0),
)


def complex_model(name: str) -> ComplexModel:
    for model in (*COMPLEX_MODELS, PROPOSITION7_MODEL):
        if model.name == name:
            return model
    raise UnknownNameError(
        "model", name, [m.name for m in (*COMPLEX_MODELS, PROPOSITION7_MODEL)]
    )


def slot_forms() -> dict[str, Form]:
    """(2,0)-forms whose graph pullback is (slot value) dz1^dz2."""
    from .complex_structures import complex_form

    half = Scalar.exact("1/2")
    return {
        "1": complex_form({("z1", "z2"): 1}),
        "phi11": complex_form({("z2", "u1"): -1}),
        "phi12": complex_form({("z1", "u1"): half, ("z2", "u2"): -half}),
        "phi22": complex_form({("z1", "u2"): 1}),
        "hess": complex_form({("u1", "u2"): 1}),
    }


def model_complex_form(model: ComplexModel) -> Form:
    """sum h_ab theta_a ^ conj(theta_b) in the complex basis (z, u, zb, ub)."""
    from .complex_structures import COMPLEX_INDEX

    slots = slot_forms()
    shift = {COMPLEX_INDEX[k]: COMPLEX_INDEX[k] + 4 for k in ("z1", "z2", "u1", "u2")}
    total: Form | None = None
    for (a, b), h in model.hermitian.items():
        conj_b = Form.build(
            8,
            2,
            {tuple(shift[i] for i in key): v.conjugate() for key, v in slots[b].terms.items()},
            slots[b].labels,
        )
        piece = wedge(slots[a], conj_b) * h
        total = piece if total is None else total + piece
    assert total is not None
    return total


def holomorphic_graph_symbol(form: Form) -> sympy.Expr:
    """Coefficient of dz1^dz2^dzb1^dzb2 after pulling back along u = grad phi.

    Symbols phi11, phi12, phi22 and their conjugates c11, c12, c22.
    """
    p11, p12, p22 = sympy.symbols("phi11 phi12 phi22")
    c11, c12, c22 = sympy.symbols("c11 c12 c22")
    # rows over (dz1, dz2, dzb1, dzb2)
    rows = {
        0: [1, 0, 0, 0],
        1: [0, 1, 0, 0],
        2: [p11, p12, 0, 0],
        3: [p12, p22, 0, 0],
        4: [0, 0, 1, 0],
        5: [0, 0, 0, 1],
        6: [0, 0, c11, c12],
        7: [0, 0, c12, c22],
    }
    total = sympy.Integer(0)
    for indices, value in form.terms.items():
        total += value.to_sympy() * sympy.Matrix([rows[a] for a in indices]).det()
    return sympy.expand(total)


def model_symbol(model: ComplexModel) -> sympy.Expr:
    """Left-hand side of the model in the graph symbols."""
    p11, p12, p22, c11, c12, c22 = sympy.symbols("phi11 phi12 phi22 c11 c12 c22")
    values = {"1": (1, 1), "phi11": (p11, c11), "phi12": (p12, c12), "phi22": (p22, c22)}
    values["hess"] = (p11 * p22 - p12**2, c11 * c22 - c12**2)
    return sympy.expand(
        sum(h * values[a][0] * values[b][1] for (a, b), h in model.hermitian.items())
    )


def complex_model_form(model: ComplexModel | str, chart) -> Form:
    """Real bieffective 4-form on R^8 encoding a complex model equation."""
    model = complex_model(model) if isinstance(model, str) else model
    complex_version = model_complex_form(model)
    if sympy.expand(holomorphic_graph_symbol(complex_version) - model_symbol(model)) != 0:
        raise ValueError(f"graph pullback of model {model.name} does not reproduce it")
    return chart.pull(complex_version)


def complex_reduction(eq: MongeAmpereEquation | Form | str, structure) -> dict[str, Any]:
    """Invariants of the bieffective part and the matching two-variable models.

    A bare 4-form is classified under the name "form".
    """
    from .bieffective import bieffective_part
    from .hermitian_invariants import (
        normalized_spectrum,
        q_matrix,
        qqt_spectrum,
        signature,
        signature_class,
        spectrum_matches,
        standard_basis,
    )

    if isinstance(eq, Form):
        name, form = "form", eq
    else:
        eq = equation(eq) if isinstance(eq, str) else eq
        name, form = eq.name, eq.form
    omega0 = bieffective_part(form, structure.pair)
    if omega0.is_zero():
        return {"equation": name, "structure": structure.name, "cell": "0", "models": []}
    basis = standard_basis(structure.chart)
    q = q_matrix(omega0, basis)
    sig = signature(q)
    spectrum = normalized_spectrum(qqt_spectrum(q))
    sig_class = signature_class(sig)
    models = [
        m.name
        for m in COMPLEX_MODELS
        if signature_class((*m.table_signature, 0)) == sig_class
        and spectrum_matches(spectrum, m.table_spectrum)
    ]
    return {
        "equation": name,
        "structure": structure.name,
        "cell": f"({sig_class[0]},{sig_class[1]})",
        "signature": sig,
        "spectrum": spectrum,
        "models": models,
    }
