#!/usr/bin/env python3
"""
test_bieffective.py - Bieffective decomposition of 4-forms on R^8
"""

import math
import random
from fractions import Fraction

import pytest

from monge_ampere_complex.config import settings
from monge_ampere_complex.exceptions import DegreeMismatchError, NotBieffectiveError
from monge_ampere_complex.services.bieffective import (
    bieffective_dimension,
    bieffective_oracle,
    bieffective_part,
    decompose,
    is_bieffective,
    is_primitive,
    require_bieffective,
    scalar_components,
)
from monge_ampere_complex.services.complex_structures import builtin
from monge_ampere_complex.services.exterior_algebra import Scalar, standard_symplectic, wedge
from monge_ampere_complex.services.form_parser import parse_form
from monge_ampere_complex.services.hermitian_invariants import q_matrix, signature, signature_class, standard_basis
from monge_ampere_complex.services.ma_equations import equation
from monge_ampere_complex.services.solutions import chart_of, map_F_prop1
from monge_ampere_complex.utils import linalg
from tests.strategies import random_gaussian_form


def test_scalar_components_of_pure_terms(structure_j):
    pair = structure_j.pair
    zero = Scalar()
    assert scalar_components(wedge(pair.omega1, pair.omega1), pair) == (1, zero, zero)
    assert scalar_components(wedge(pair.omega1, pair.omega2), pair) == (zero, 1, zero)
    assert scalar_components(wedge(pair.omega2, pair.omega2), pair) == (zero, zero, 1)


def test_pure_terms_have_no_bieffective_part(structure_j):
    pair = structure_j.pair
    assert bieffective_part(wedge(pair.omega1, pair.omega1), pair).is_zero()
    assert bieffective_part(wedge(pair.omega1, pair.omega2), pair).is_zero()


def test_bieffective_form_is_fixed(structure):
    omega = structure.chart.pull(parse_form("dz1^dz2^dzb1^dzb2"))
    assert omega.is_real()
    assert is_bieffective(omega, structure.pair)
    assert bieffective_part(omega, structure.pair) == omega


def test_part_matches_oracle_on_catalog(structure):
    for name in ("slag", "hess+", "hess-", "plebanski1", "plebanski2", "grant"):
        omega = equation(name).form
        part = bieffective_part(omega, structure.pair)
        assert part == bieffective_oracle(omega, structure.pair), name
        assert is_bieffective(part, structure.pair), name


def test_part_matches_oracle_on_random_forms(structure_j):
    rng = random.Random(settings.grid_seed)
    for _ in range(5):
        omega = random_gaussian_form(rng, 8, 4)
        assert bieffective_part(omega, structure_j.pair) == bieffective_oracle(omega, structure_j.pair)


@pytest.mark.slow
def test_part_matches_oracle_sweep(structure):
    rng = random.Random(settings.grid_seed)
    pair = structure.pair
    for _ in range(settings.random_forms):
        omega = random_gaussian_form(rng, 8, 4)
        part = bieffective_part(omega, pair)
        assert part == bieffective_oracle(omega, pair)
        assert wedge(part, pair.omega1).is_zero(0.0)
        assert wedge(part, pair.omega2).is_zero(0.0)


def test_decomposition_parts(structure):
    pair = structure.pair
    parts = decompose(equation("plebanski1").form, pair)
    assert is_bieffective(parts.omega0, pair)
    assert is_primitive(parts.omega1, pair)
    assert is_primitive(parts.omega2, pair)
    assert parts.reassemble(pair) == equation("plebanski1").form


def test_bieffective_dimension(structure):
    assert bieffective_dimension(structure.pair) == 25


def test_zero_cells():
    assert bieffective_part(equation("slag").form, builtin("J").pair).is_zero()
    assert bieffective_part(equation("slag").form, builtin("K").pair).is_zero()
    assert bieffective_part(equation("hess+").form, builtin("K").pair).is_zero()


def test_slag_under_j2():
    structure = builtin("J2")
    part = bieffective_part(equation("slag").form, structure.pair)
    assert not part.is_zero()
    assert part.is_exact and part.is_real()
    q = q_matrix(part, standard_basis(structure.chart))
    assert signature_class(signature(q)) == (1, 1)


SLAG_J2_TERMS = [
    ((1, 2), "dz1^dz2^dzb1^dub2"),
    ((-1, -2), "dz1^dz2^dzb2^dub1"),
    ((1, -2), "dz1^du2^dzb1^dzb2"),
    ((1, 2), "dz1^du2^dub1^dub2"),
    ((-1, 2), "dz2^du1^dzb1^dzb2"),
    ((-1, -2), "dz2^du1^dub1^dub2"),
    ((1, -2), "du1^du2^dzb1^dub2"),
    ((-1, 2), "du1^du2^dzb2^dub1"),
]


def test_slag_under_j2_in_chart_coordinates():
    structure = builtin("J2")
    terms = [parse_form(m) * Scalar.exact(Fraction(re, 8), Fraction(im, 8)) for (re, im), m in SLAG_J2_TERMS]
    expected = terms[0]
    for term in terms[1:]:
        expected = expected + term
    assert bieffective_part(equation("slag").form, structure.pair) == structure.chart.pull(expected)


def test_slag_under_j2_in_the_diagonal_chart():
    structure = builtin("J2")
    chart = chart_of(map_F_prop1())
    assert chart.theta().close_to(structure.theta)
    target = chart.pull(parse_form("dz1^du2^dzb1^dub2 - dz2^du1^dzb2^dub1")) * (math.sqrt(5) / 4)
    part = bieffective_part(equation("slag").form, structure.pair)
    assert part.close_to(target, 1e-9)
    assert not part.close_to(target * -1, 1e-9)


def test_require_bieffective(structure_j):
    pair = structure_j.pair
    with pytest.raises(NotBieffectiveError):
        require_bieffective(wedge(pair.omega1, pair.omega1), pair)


def test_degree_checked(structure_j):
    with pytest.raises(DegreeMismatchError):
        bieffective_part(standard_symplectic(4), structure_j.pair)


def test_decomposition_flags_non_primitive_cofactors(structure_j, monkeypatch):
    solve = linalg.solve

    def no_primitive_solution(rows, rhs):
        # 70 wedge rows plus 4 primitivity rows
        if len(rows) == 74:
            raise ValueError("inconsistent")
        return solve(rows, rhs)

    monkeypatch.setattr(linalg, "solve", no_primitive_solution)
    omega = equation("plebanski1").form
    parts = decompose(omega, structure_j.pair)
    assert not parts.primitive
    assert parts.reassemble(structure_j.pair) == omega


def test_decomposition_is_primitive_by_default(structure_j):
    assert decompose(equation("plebanski1").form, structure_j.pair).primitive
