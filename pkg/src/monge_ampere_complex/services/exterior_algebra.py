#!/usr/bin/env python3
"""
exterior_algebra.py - Exact multilinear algebra kernel

k-forms and k-vectors with constant coefficients on a real vector space of
dimension 2n (n = 2, 3, 4), stored sparsely as maps from strictly increasing
index tuples to Scalars. The basis covectors are ordered
(q1, p1, q2, p2, ..., qn, pn); on R^8 the canonical volume form is
dq1^dp1^dq2^dp2^dq3^dp3^dq4^dp4 and every 8-form-to-scalar extraction
reads its coefficient.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from numbers import Rational
from typing import Any

import numpy as np
import sympy

from ..config import settings
from ..exceptions import DegreeMismatchError, DimensionMismatchError

Number = int | Fraction | float | complex


@dataclass(frozen=True, slots=True, eq=False)
class Scalar:
    """Complex coefficient, exact (Gaussian rational) unless `approx` is set.

    Exact arithmetic never rounds. Mixing an exact and an inexact operand
    yields an inexact result.
    """

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)
    approx: complex | None = None

    @classmethod
    def of(cls, value: Scalar | Number) -> Scalar:
        if isinstance(value, Scalar):
            return value
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, Rational):
            return cls(Fraction(value))
        if isinstance(value, float | complex):
            return cls(approx=complex(value))
        raise TypeError(f"cannot convert {type(value).__name__} to Scalar")

    @classmethod
    def exact(cls, re: int | Fraction | str = 0, im: int | Fraction | str = 0) -> Scalar:
        return cls(Fraction(re), Fraction(im))

    @classmethod
    def from_sympy(cls, value: Any) -> Scalar:
        """Convert a sympy number; Gaussian rationals stay exact."""
        value = sympy.nsimplify(value) if isinstance(value, sympy.Float) else value
        re, im = sympy.re(value), sympy.im(value)
        if re.is_Rational and im.is_Rational:
            return cls(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q)))
        return cls(approx=complex(value))

    @property
    def is_exact(self) -> bool:
        return self.approx is None

    def __complex__(self) -> complex:
        if self.approx is not None:
            return self.approx
        return complex(float(self.re), float(self.im))

    def to_sympy(self) -> Any:
        if self.approx is not None:
            return sympy.Float(self.approx.real) + sympy.I * sympy.Float(self.approx.imag)
        return sympy.Rational(self.re.numerator, self.re.denominator) + sympy.I * sympy.Rational(
            self.im.numerator, self.im.denominator
        )

    def is_zero(self, tol: float | None = None) -> bool:
        if self.approx is None:
            return self.re == 0 and self.im == 0
        return abs(self.approx) <= (settings.zero_snap if tol is None else tol)

    def is_real(self, tol: float | None = None) -> bool:
        if self.approx is None:
            return self.im == 0
        return abs(self.approx.imag) <= (settings.zero_snap if tol is None else tol)

    def conjugate(self) -> Scalar:
        if self.approx is not None:
            return Scalar(approx=self.approx.conjugate())
        return Scalar(self.re, -self.im)

    def real(self) -> Scalar:
        if self.approx is not None:
            return Scalar(approx=complex(self.approx.real))
        return Scalar(self.re)

    def imag(self) -> Scalar:
        if self.approx is not None:
            return Scalar(approx=complex(self.approx.imag))
        return Scalar(self.im)

    def __neg__(self) -> Scalar:
        if self.approx is not None:
            return Scalar(approx=-self.approx)
        return Scalar(-self.re, -self.im)

    def __add__(self, other: Scalar | Number) -> Scalar:
        other = Scalar.of(other)
        if self.approx is None and other.approx is None:
            return Scalar(self.re + other.re, self.im + other.im)
        return Scalar(approx=complex(self) + complex(other))

    __radd__ = __add__

    def __sub__(self, other: Scalar | Number) -> Scalar:
        return self + (-Scalar.of(other))

    def __rsub__(self, other: Scalar | Number) -> Scalar:
        return Scalar.of(other) + (-self)

    def __mul__(self, other: Scalar | Number) -> Scalar:
        other = Scalar.of(other)
        if self.approx is None and other.approx is None:
            return Scalar(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        return Scalar(approx=complex(self) * complex(other))

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar | Number) -> Scalar:
        other = Scalar.of(other)
        if self.approx is None and other.approx is None:
            norm = other.re * other.re + other.im * other.im
            if norm == 0:
                raise ZeroDivisionError("division by exact zero")
            return Scalar(
                (self.re * other.re + self.im * other.im) / norm,
                (self.im * other.re - self.re * other.im) / norm,
            )
        return Scalar(approx=complex(self) / complex(other))

    def __rtruediv__(self, other: Scalar | Number) -> Scalar:
        return Scalar.of(other) / self

    def __pow__(self, exponent: int) -> Scalar:
        result = ONE
        base = self if exponent >= 0 else ONE / self
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Scalar | int | Fraction | float | complex):
            return NotImplemented
        other = Scalar.of(other)
        if self.approx is None and other.approx is None:
            return self.re == other.re and self.im == other.im
        return complex(self) == complex(other)

    def __hash__(self) -> int:
        return hash(complex(self))

    def close_to(self, other: Scalar | Number, tol: float | None = None) -> bool:
        tol = settings.inexact_tolerance if tol is None else tol
        return abs(complex(self) - complex(Scalar.of(other))) <= tol

    def __str__(self) -> str:
        if self.approx is not None:
            return f"{self.approx:.12g}"
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return "i" if self.im == 1 else "-i" if self.im == -1 else f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"

    def __repr__(self) -> str:
        return f"Scalar({self})"


ZERO = Scalar()
ONE = Scalar(Fraction(1))
I = Scalar(Fraction(0), Fraction(1))

Index = tuple[int, ...]


def phase_labels(n: int) -> tuple[str, ...]:
    """Covector labels (q1, p1, ..., qn, pn) of the phase space T*R^n."""
    return tuple(label for i in range(1, n + 1) for label in (f"q{i}", f"p{i}"))


def q_index(i: int) -> int:
    """Position of dq_i (1-based i) in the basis."""
    return 2 * (i - 1)


def p_index(i: int) -> int:
    """Position of dp_i (1-based i) in the basis."""
    return 2 * (i - 1) + 1


def sort_with_sign(indices: Sequence[int]) -> tuple[int, Index | None]:
    """Sort a wedge monomial; returns (sign, sorted) or (0, None) on repeats."""
    if len(set(indices)) != len(indices):
        return 0, None
    inversions = sum(
        1
        for a in range(len(indices))
        for b in range(a + 1, len(indices))
        if indices[a] > indices[b]
    )
    return (-1 if inversions % 2 else 1), tuple(sorted(indices))


def basis_tuples(dim: int, degree: int) -> list[Index]:
    return list(itertools.combinations(range(dim), degree))


@dataclass(frozen=True, eq=False)
class _Alternating:
    """Shared storage and linear structure of forms and polyvectors."""

    dim: int
    degree: int
    terms: Mapping[Index, Scalar]
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.degree <= self.dim:
            raise DegreeMismatchError(type(self).__name__, f"0..{self.dim}", self.degree)
        for key, value in self.terms.items():
            if len(key) != self.degree or list(key) != sorted(set(key)):
                raise ValueError(f"invalid index tuple {key} for degree {self.degree}")
            if key and not 0 <= key[-1] < self.dim:
                raise ValueError(f"index tuple {key} out of range for dim {self.dim}")
            if value.is_zero(0.0):
                raise ValueError("explicit zero coefficients are not stored")
        if not self.labels:
            object.__setattr__(self, "labels", phase_labels(self.dim // 2))

    @classmethod
    def build(
        cls,
        dim: int,
        degree: int,
        terms: Mapping[Index, Scalar | Number] | Iterable[tuple[Index, Scalar | Number]],
        labels: tuple[str, ...] = (),
    ):
        """Create from unsorted monomials, accumulating and pruning zeros."""
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Index, Scalar] = {}
        for key, value in items:
            sign, ordered = sort_with_sign(key)
            if ordered is None:
                continue
            acc[ordered] = acc.get(ordered, ZERO) + Scalar.of(value) * sign
        return cls(dim, degree, _pruned(acc), labels)

    @classmethod
    def zero(cls, dim: int, degree: int, labels: tuple[str, ...] = ()):
        return cls(dim, degree, {}, labels)

    @classmethod
    def constant(cls, value: Scalar | Number, dim: int, labels: tuple[str, ...] = ()):
        return cls.build(dim, 0, {(): value}, labels)

    @classmethod
    def monomial(
        cls, dim: int, indices: Sequence[int], coeff: Scalar | Number = 1, labels: tuple[str, ...] = ()
    ):
        return cls.build(dim, len(indices), {tuple(indices): coeff}, labels)

    @classmethod
    def linear(cls, coeffs: Sequence[Scalar | Number], labels: tuple[str, ...] = ()):
        """Degree-1 element with the given component vector."""
        return cls.build(len(coeffs), 1, {(a,): c for a, c in enumerate(coeffs)}, labels)

    @classmethod
    def from_vector(
        cls, dim: int, degree: int, vector: Sequence[Scalar | Number], labels: tuple[str, ...] = ()
    ):
        return cls.build(dim, degree, zip(basis_tuples(dim, degree), vector), labels)

    def to_vector(self) -> list[Scalar]:
        return [self.terms.get(key, ZERO) for key in basis_tuples(self.dim, self.degree)]

    def coefficient(self, indices: Sequence[int]) -> Scalar:
        sign, ordered = sort_with_sign(indices)
        if ordered is None:
            return ZERO
        return self.terms.get(ordered, ZERO) * sign

    @property
    def key(self) -> tuple:
        """Hashable identity, used for caching derived linear systems."""
        return (
            type(self).__name__,
            self.dim,
            self.degree,
            tuple((k, v.re, v.im, v.approx) for k, v in sorted(self.terms.items())),
        )

    def __iter__(self) -> Iterator[tuple[Index, Scalar]]:
        return iter(sorted(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def is_exact(self) -> bool:
        return all(value.is_exact for value in self.terms.values())

    def is_zero(self, tol: float | None = None) -> bool:
        return all(value.is_zero(tol) for value in self.terms.values())

    def is_real(self, tol: float | None = None) -> bool:
        return all(value.is_real(tol) for value in self.terms.values())

    def max_abs(self) -> float:
        return max((abs(complex(v)) for v in self.terms.values()), default=0.0)

    def _check_compatible(self, other: _Alternating, operation: str) -> None:
        if other.dim != self.dim:
            raise DimensionMismatchError(operation, self.dim, other.dim)
        if other.degree != self.degree:
            raise DegreeMismatchError(operation, self.degree, other.degree)

    def __add__(self, other):
        # an empty element is the zero of every degree
        if not other.terms and other.dim == self.dim:
            return self
        if not self.terms and other.dim == self.dim:
            return other
        self._check_compatible(other, "add")
        acc = dict(self.terms)
        for key, value in other.terms.items():
            acc[key] = acc.get(key, ZERO) + value
        return type(self)(self.dim, self.degree, _pruned(acc), self.labels)

    def __neg__(self):
        return type(self)(self.dim, self.degree, {k: -v for k, v in self.terms.items()}, self.labels)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar: Scalar | Number):
        scalar = Scalar.of(scalar)
        return type(self)(
            self.dim, self.degree, _pruned({k: v * scalar for k, v in self.terms.items()}), self.labels
        )

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar | Number):
        return self * (ONE / Scalar.of(scalar))

    def conjugate(self):
        return type(self)(
            self.dim, self.degree, {k: v.conjugate() for k, v in self.terms.items()}, self.labels
        )

    def real_part(self):
        return type(self)(
            self.dim, self.degree, _pruned({k: v.real() for k, v in self.terms.items()}), self.labels
        )

    def imag_part(self):
        return type(self)(
            self.dim, self.degree, _pruned({k: v.imag() for k, v in self.terms.items()}), self.labels
        )

    def snapped(self, tol: float | None = None):
        """Drop inexact coefficients below the zero-snap tolerance."""
        return type(self)(
            self.dim,
            self.degree,
            {k: v for k, v in self.terms.items() if not v.is_zero(tol)},
            self.labels,
        )

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.degree == other.degree
            and self.terms.keys() == other.terms.keys()
            and all(self.terms[k] == other.terms[k] for k in self.terms)
        )

    __hash__ = None  # type: ignore[assignment]

    def close_to(self, other: _Alternating, tol: float | None = None) -> bool:
        return (self - other).max_abs() <= (settings.inexact_tolerance if tol is None else tol)

    def __str__(self) -> str:
        from .form_parser import format_form

        return format_form(self)


class Form(_Alternating):
    """Alternating k-form with constant coefficients."""

    def wedge(self, other: Form) -> Form:
        return wedge(self, other)

    def top_coefficient(self) -> Scalar:
        """Coefficient of the canonical volume form (degree must be maximal)."""
        if self.degree != self.dim:
            raise DegreeMismatchError("top_coefficient", self.dim, self.degree)
        return self.terms.get(tuple(range(self.dim)), ZERO)


class Polyvector(_Alternating):
    """Alternating k-vector (contravariant counterpart of Form)."""


def _pruned(acc: Mapping[Index, Scalar]) -> dict[Index, Scalar]:
    return {k: v for k, v in acc.items() if not v.is_zero(0.0)}


def wedge(a: Form, b: Form) -> Form:
    """Exterior product; zero when the degrees add up past the dimension."""
    if a.dim != b.dim:
        raise DimensionMismatchError("wedge", a.dim, b.dim)
    degree = a.degree + b.degree
    if degree > a.dim:
        return Form.zero(a.dim, 0, a.labels)
    acc: dict[Index, Scalar] = {}
    for ka, va in a.terms.items():
        for kb, vb in b.terms.items():
            if set(ka).intersection(kb):
                continue
            inversions = sum(1 for x in ka for y in kb if x > y)
            key = tuple(sorted(ka + kb))
            product = va * vb
            acc[key] = acc.get(key, ZERO) + (-product if inversions % 2 else product)
    return Form(a.dim, degree, _pruned(acc), a.labels)


def wedge_all(forms: Iterable[Form], dim: int) -> Form:
    return reduce(wedge, forms, Form.constant(1, dim))


def power(form: Form, k: int) -> Form:
    return wedge_all([form] * k, form.dim)


def interior(x: Polyvector, theta: Form) -> Form:
    """Contraction of a k-vector into the leading slots of a form.

    For decomposable x = e_a ^ e_b the contraction is i_{e_b} i_{e_a}, so
    i_{e_a ^ e_b}(dx_a ^ dx_b) = 1.
    """
    if x.dim != theta.dim:
        raise DimensionMismatchError("interior", theta.dim, x.dim)
    if x.degree > theta.degree:
        raise DegreeMismatchError("interior", f">= {x.degree}", theta.degree)
    acc: dict[Index, Scalar] = {}
    for kx, vx in x.terms.items():
        for kt, vt in theta.terms.items():
            remaining = list(kt)
            sign = 1
            for a in kx:
                if a not in remaining:
                    break
                position = remaining.index(a)
                sign = -sign if position % 2 else sign
                remaining.pop(position)
            else:
                key = tuple(remaining)
                product = vx * vt
                acc[key] = acc.get(key, ZERO) + (-product if sign < 0 else product)
    return Form(theta.dim, theta.degree - x.degree, _pruned(acc), theta.labels)


@dataclass(frozen=True, eq=False)
class LinearMap:
    """Matrix of Scalars acting on coordinates: target_i = sum_a rows[i][a] * source_a."""

    rows: tuple[tuple[Scalar, ...], ...]
    source_labels: tuple[str, ...] = ()
    target_labels: tuple[str, ...] = ()

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[Scalar | Number]],
        source_labels: tuple[str, ...] = (),
        target_labels: tuple[str, ...] = (),
    ) -> LinearMap:
        width = {len(row) for row in rows}
        if len(width) != 1:
            raise ValueError("ragged matrix")
        return cls(
            tuple(tuple(Scalar.of(v) for v in row) for row in rows), source_labels, target_labels
        )

    @classmethod
    def identity(cls, n: int) -> LinearMap:
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def is_exact(self) -> bool:
        return all(v.is_exact for row in self.rows for v in row)

    def compose(self, other: LinearMap) -> LinearMap:
        """self after other (matrix product self @ other)."""
        if self.shape[1] != other.shape[0]:
            raise DimensionMismatchError("compose", self.shape[1], other.shape[0])
        cols = list(zip(*other.rows))
        return LinearMap(
            tuple(
                tuple(sum((a * b for a, b in zip(row, col)), ZERO) for col in cols)
                for row in self.rows
            ),
            other.source_labels,
            self.target_labels,
        )

    def conjugate(self) -> LinearMap:
        return LinearMap(
            tuple(tuple(v.conjugate() for v in row) for row in self.rows),
            self.source_labels,
            tuple(f"{label}b" for label in self.target_labels),
        )

    def stacked(self, other: LinearMap) -> LinearMap:
        if self.shape[1] != other.shape[1]:
            raise DimensionMismatchError("stack", self.shape[1], other.shape[1])
        return LinearMap(
            self.rows + other.rows, self.source_labels, self.target_labels + other.target_labels
        )

    def covector(self, i: int) -> Form:
        """Pullback of the i-th target coordinate differential."""
        return Form.linear(self.rows[i], self.source_labels)

    def to_numpy(self) -> np.ndarray:
        return np.array([[complex(v) for v in row] for row in self.rows], dtype=complex)

    def inverse(self) -> LinearMap:
        from ..utils.linalg import inverse

        return LinearMap.from_rows(inverse(self.rows), self.target_labels, self.source_labels)


def pullback(linear_map: LinearMap, theta: Form) -> Form:
    """Pull a form on the target space back along a linear map."""
    n_target, n_source = linear_map.shape
    if theta.dim != n_target:
        raise DimensionMismatchError("pullback", n_target, theta.dim)
    covectors = [linear_map.covector(i) for i in range(n_target)]
    result = Form.zero(n_source, theta.degree, linear_map.source_labels)
    if theta.degree > n_source:
        return result
    for key, value in theta.terms.items():
        result = result + wedge_all((covectors[i] for i in key), n_source) * value
    return result


def standard_symplectic(n: int) -> Form:
    """Omega = sum dq_i ^ dp_i on R^{2n}."""
    return Form.build(2 * n, 2, {(q_index(i), p_index(i)): 1 for i in range(1, n + 1)})


def volume(dim: int) -> Form:
    return Form.monomial(dim, range(dim))


def evaluate_on_frame(form: Form, frame: np.ndarray) -> complex:
    """Value of a k-form on the k columns of a (dim x k) frame."""
    if frame.shape != (form.dim, form.degree):
        raise DimensionMismatchError("evaluate_on_frame", form.dim * form.degree, frame.size)
    total = 0j
    for key, value in form.terms.items():
        total += complex(value) * complex(np.linalg.det(frame[list(key), :]))
    return total
