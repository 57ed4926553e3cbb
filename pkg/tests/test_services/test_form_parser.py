#!/usr/bin/env python3
"""
test_form_parser.py - Text syntax for forms
"""

import pytest

from monge_ampere_complex.exceptions import DegreeMismatchError, FormSyntaxError
from monge_ampere_complex.services.exterior_algebra import Form, Scalar, standard_symplectic
from monge_ampere_complex.services.form_parser import format_form, parse_form
from monge_ampere_complex.services.ma_equations import catalog


class TestParse:
    def test_symplectic_form(self):
        assert parse_form("dq1^dp1 + dq2^dp2") == standard_symplectic(2)

    def test_fractions_and_imaginary_unit(self):
        form = parse_form("1/2 * dp1^dp2 - i*dq1^dq2")
        assert form.dim == 4 and form.degree == 2
        assert form.coefficient((1, 3)) == Scalar.exact("1/2")
        assert form.coefficient((0, 2)) == Scalar.exact(0, -1)

    def test_chart_symbols(self):
        form = parse_form("(1+2i) dz1^du2^dzb1^dub2")
        assert form.dim == 8 and form.degree == 4
        assert form.coefficient((0, 3, 4, 7)) == Scalar.exact(1, 2)

    def test_reordering_changes_sign(self):
        assert parse_form("dp1^dq1") == parse_form("-dq1^dp1")

    def test_explicit_dimension(self):
        assert parse_form("dq1^dp1", dim=8).dim == 8

    def test_constants(self):
        form = parse_form("2 + 3i")
        assert form.degree == 0
        assert form.coefficient(()) == Scalar.exact(2, 3)

    def test_decimals_are_inexact(self):
        form = parse_form("0.5 dq1^dp1")
        assert not form.is_exact
        assert complex(form.coefficient((0, 1))) == 0.5

    def test_mixed_degrees(self):
        with pytest.raises(DegreeMismatchError):
            parse_form("dq1 + dq1^dp1")


class TestSyntaxErrors:
    @pytest.mark.parametrize(
        "text",
        [
            "",
            "dq1 +",
            "dq1 dp2",
            "dz3^dz1",
            "dz1 + dq1",
            "(1+2i dq1",
            "1.5/2 dq1",
            "dq1 # dp1",
        ],
    )
    def test_rejected(self, text):
        with pytest.raises(FormSyntaxError):
            parse_form(text)

    def test_position_is_reported(self):
        with pytest.raises(FormSyntaxError) as exc_info:
            parse_form("dq1 ^ dx2")
        assert exc_info.value.details["position"] == 6
        assert exc_info.value.status_code == 422

    def test_symbol_outside_dimension(self):
        with pytest.raises(FormSyntaxError):
            parse_form("dq3", dim=4)


class TestFormat:
    def test_zero(self):
        assert format_form(Form.zero(4, 2)) == "0"

    def test_signs_and_fractions(self):
        form = Form.build(4, 2, {(0, 1): -1, (2, 3): Scalar.exact("1/2")})
        assert format_form(form) == "-dq1^dp1 + 1/2*dq2^dp2"

    def test_imaginary_coefficients(self):
        assert format_form(Form.monomial(4, (0, 1), Scalar.exact(0, -1))) == "-i*dq1^dp1"
        assert format_form(Form.monomial(4, (0, 1), Scalar.exact(1, 2))) == "(1+2i)*dq1^dp1"

    def test_catalog_round_trip(self):
        for eq in catalog():
            assert parse_form(format_form(eq.form), dim=eq.form.dim) == eq.form, eq.name
