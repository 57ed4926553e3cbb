#!/usr/bin/env python3
"""
strategies.py - Hypothesis strategies and seeded generators shared by the tests
"""

import random
from fractions import Fraction

from hypothesis import strategies as st

from monge_ampere_complex.services.exterior_algebra import Form, Scalar, basis_tuples

small_fractions = st.fractions(min_value=-3, max_value=3, max_denominator=4)
gaussian = st.builds(Scalar, small_fractions, small_fractions)


@st.composite
def exact_forms(draw, dim: int = 6, degree: int | None = None, max_terms: int = 4) -> Form:
    """Exact forms with a few Gaussian-rational terms."""
    degree = draw(st.integers(0, dim)) if degree is None else degree
    keys = basis_tuples(dim, degree)
    chosen = draw(st.lists(st.sampled_from(keys), max_size=max_terms, unique=True))
    return Form.build(dim, degree, {key: draw(gaussian) for key in chosen})


def random_gaussian_form(rng: random.Random, dim: int, degree: int, density: float = 0.3) -> Form:
    """Seeded random form with small Gaussian-rational coefficients."""
    terms = {}
    for key in basis_tuples(dim, degree):
        if rng.random() < density:
            re = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
            terms[key] = Scalar(re, Fraction(rng.randint(-2, 2)))
    return Form.build(dim, degree, terms)
