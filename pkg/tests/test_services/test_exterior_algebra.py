#!/usr/bin/env python3
"""
test_exterior_algebra.py - Scalars, forms, wedge, interior product and pullback
"""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from monge_ampere_complex.exceptions import DegreeMismatchError, DimensionMismatchError
from monge_ampere_complex.services.exterior_algebra import (
    I,
    Form,
    LinearMap,
    Polyvector,
    Scalar,
    evaluate_on_frame,
    interior,
    p_index,
    power,
    pullback,
    q_index,
    sort_with_sign,
    standard_symplectic,
    volume,
    wedge,
)
from tests.strategies import exact_forms


class TestScalar:
    def test_gaussian_arithmetic_is_exact(self):
        a = Scalar.exact(1, 2)
        assert a * a.conjugate() == 5
        assert (a / a) == 1
        assert (a * I).re == -2

    def test_fraction_coefficients(self):
        half = Scalar.exact("1/2")
        assert half + half == 1
        assert half.re == Fraction(1, 2)

    def test_mixing_with_inexact_is_inexact(self):
        result = Scalar.exact(1) + 0.5
        assert not result.is_exact
        assert result.close_to(1.5)

    def test_division_by_exact_zero(self):
        with pytest.raises(ZeroDivisionError):
            Scalar.exact(1) / Scalar()

    def test_str(self):
        assert str(Scalar.exact(0, 1)) == "i"
        assert str(Scalar.exact(0, -1)) == "-i"
        assert str(Scalar.exact(1, -2)) == "(1-2i)"


class TestForm:
    def test_basis_positions(self):
        assert (q_index(1), p_index(1), q_index(4), p_index(4)) == (0, 1, 6, 7)

    def test_sort_with_sign(self):
        assert sort_with_sign((1, 0)) == (-1, (0, 1))
        assert sort_with_sign((2, 0, 1)) == (1, (0, 1, 2))
        assert sort_with_sign((1, 1)) == (0, None)

    def test_repeated_covector_is_zero(self):
        assert Form.build(4, 2, {(0, 0): 1}).is_zero()

    def test_build_accumulates_and_prunes(self):
        form = Form.build(4, 2, [((0, 1), 1), ((1, 0), 1)])
        assert len(form) == 0

    def test_symplectic_square_is_twice_volume(self):
        omega = standard_symplectic(2)
        assert power(omega, 2) == volume(4) * 2

    def test_top_coefficient_requires_top_degree(self):
        with pytest.raises(DegreeMismatchError):
            standard_symplectic(2).top_coefficient()

    def test_wedge_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            wedge(Form.monomial(4, (0,)), Form.monomial(6, (0,)))

    def test_adding_different_degrees(self):
        with pytest.raises(DegreeMismatchError):
            Form.monomial(4, (0,)) + Form.monomial(4, (0, 1))

    def test_real_and_imaginary_parts(self):
        form = Form.monomial(4, (0, 1), Scalar.exact(1, 2))
        assert form.real_part() == Form.monomial(4, (0, 1))
        assert form.imag_part() == Form.monomial(4, (0, 1), 2)
        assert form.conjugate() == Form.monomial(4, (0, 1), Scalar.exact(1, -2))

    def test_to_vector_round_trip(self):
        form = Form.build(4, 2, {(0, 1): 3, (2, 3): Scalar.exact(0, 1)})
        assert Form.from_vector(4, 2, form.to_vector()) == form


class TestWedgeProperties:
    @given(exact_forms(), exact_forms())
    def test_graded_anticommutativity(self, a, b):
        sign = -1 if (a.degree * b.degree) % 2 else 1
        assert wedge(a, b) == wedge(b, a) * sign

    @given(exact_forms(max_terms=3), exact_forms(max_terms=3), exact_forms(max_terms=3))
    def test_associativity(self, a, b, c):
        assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))

    @given(exact_forms(degree=2), exact_forms(degree=2), exact_forms(degree=1))
    def test_distributivity(self, a, b, c):
        assert wedge(a + b, c) == wedge(a, c) + wedge(b, c)

    @given(exact_forms(degree=1))
    def test_one_form_squares_to_zero(self, a):
        assert wedge(a, a).is_zero()


class TestInterior:
    def test_leading_slot_convention(self):
        x = Polyvector.monomial(4, (0, 1))
        assert interior(x, Form.monomial(4, (0, 1))) == Form.constant(1, 4)

    def test_contraction_of_a_vector(self):
        e1 = Polyvector.monomial(4, (1,))
        assert interior(e1, Form.monomial(4, (0, 1))) == Form.monomial(4, (0,)) * -1

    def test_degree_too_high(self):
        with pytest.raises(DegreeMismatchError):
            interior(Polyvector.monomial(4, (0, 1, 2)), Form.monomial(4, (0, 1)))


small_matrices = st.lists(
    st.lists(st.integers(-2, 2), min_size=4, max_size=4), min_size=4, max_size=4
)


class TestPullback:
    @given(small_matrices, small_matrices, exact_forms(dim=4, degree=2))
    def test_functoriality(self, a, b, theta):
        fa, fb = LinearMap.from_rows(a), LinearMap.from_rows(b)
        assert pullback(fa.compose(fb), theta) == pullback(fb, pullback(fa, theta))

    @given(small_matrices, exact_forms(dim=4, degree=1), exact_forms(dim=4, degree=2))
    def test_commutes_with_wedge(self, a, alpha, beta):
        f = LinearMap.from_rows(a)
        assert pullback(f, wedge(alpha, beta)) == wedge(pullback(f, alpha), pullback(f, beta))

    def test_identity(self):
        omega = standard_symplectic(2)
        assert pullback(LinearMap.identity(4), omega) == omega

    def test_top_degree_scales_by_determinant(self):
        rows = [[2, 1, 0, 0], [0, 1, 0, 0], [0, 0, 3, 0], [1, 0, 0, 1]]
        f = LinearMap.from_rows(rows)
        assert pullback(f, volume(4)) == volume(4) * round(np.linalg.det(np.array(rows)))

    def test_partial_legendre_map(self):
        # (q1, q2, p1, p2) -> (q1, p2, p1, -q2) turns hess f = 1 into a wave-type form
        f = LinearMap.from_rows([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
        hess = Form.build(4, 2, {(p_index(1), p_index(2)): 1, (q_index(1), q_index(2)): -1})
        expected = Form.build(4, 2, {(p_index(1), q_index(2)): 1, (q_index(1), p_index(2)): 1})
        result = pullback(f, hess)
        assert result == expected or result == expected * -1

    def test_graph_section(self):
        # dp1 along q -> (q, Hq) is sum_j H_1j dq_j
        h = [[2, 3], [3, 5]]
        rows = [[0] * 2 for _ in range(4)]
        for i in range(2):
            rows[q_index(i + 1)][i] = 1
            for j in range(2):
                rows[p_index(i + 1)][j] = h[i][j]
        section = LinearMap.from_rows(rows)
        dp1 = Form.monomial(4, (p_index(1),))
        assert pullback(section, dp1) == Form.build(2, 1, {(0,): 2, (1,): 3})

    def test_inverse(self):
        f = LinearMap.from_rows([[1, 2], [0, 1]])
        product = f.compose(f.inverse())
        assert [[complex(v) for v in row] for row in product.rows] == [[1, 0], [0, 1]]

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            pullback(LinearMap.identity(4), standard_symplectic(3))


def test_evaluate_on_frame():
    frame = np.eye(4)[:, [0, 1]]
    assert evaluate_on_frame(standard_symplectic(2), frame) == pytest.approx(1.0)
    swapped = np.eye(4)[:, [1, 0]]
    assert evaluate_on_frame(standard_symplectic(2), swapped) == pytest.approx(-1.0)
