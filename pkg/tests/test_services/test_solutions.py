#!/usr/bin/env python3
"""
test_solutions.py - Holomorphic graphs and numerical verification of solutions
"""

import numpy as np
import pytest
import sympy

from monge_ampere_complex.exceptions import (
    InvalidParameterError,
    RankDeficientFrameError,
    VerificationError,
)
from monge_ampere_complex.services.complex_structures import builtin
from monge_ampere_complex.services.ma_equations import equation
from monge_ampere_complex.services.solutions import (
    PROPOSITIONS,
    HolomorphicFunction,
    RealFunction,
    SampledSubmanifold,
    complex_samples,
    graph,
    is_bilagrangian_subspace,
    real_complex_hessian_identity,
    real_grid,
    real_part_on_base,
    run_proposition,
    verify_complex_lagrangian,
    verify_generalized,
    verify_regular,
    worked_example_regular,
    worked_example_surface,
)

SAMPLES = 16


class TestHolomorphicFunction:
    def test_derivatives(self):
        phi = HolomorphicFunction.parse("z1**2*z2 + exp(z2)")
        z1, z2 = sympy.symbols("z1 z2")
        assert sympy.simplify(phi.derivatives["phi12"] - 2 * z1) == 0
        assert sympy.simplify(phi.derivatives["phi22"] - sympy.exp(z2)) == 0

    def test_vectorized_evaluation(self):
        phi = HolomorphicFunction.parse("z1*z2")
        points = np.array([[1 + 1j, 2], [0, 3j]])
        assert np.allclose(phi.evaluate("phi", points), [2 + 2j, 0])
        # constant derivatives still broadcast to one value per point
        assert phi.evaluate("phi12", points).shape == (2,)
        assert phi.hessian(points).shape == (2, 2, 2)

    def test_finite_differences_agree(self):
        phi = HolomorphicFunction.parse("exp(z1)*z2 + z1**3")
        assert phi.finite_difference_check(complex_samples(8)) < 1e-6

    def test_finite_differences_reject_coarse_step(self):
        phi = HolomorphicFunction.parse("z1**3")
        with pytest.raises(VerificationError):
            phi.finite_difference_check(complex_samples(4), step=0.1, tol=1e-12)

    @pytest.mark.parametrize("text", ["z1 + w", "z1 +", "q1"])
    def test_parse_errors(self, text):
        with pytest.raises(InvalidParameterError):
            HolomorphicFunction.parse(text)

    def test_random_is_polynomial(self, rng):
        phi = HolomorphicFunction.random(rng)
        assert phi.expr.is_polynomial(*sympy.symbols("z1 z2"))


def test_real_part_on_base():
    phi = HolomorphicFunction.parse("z1**2")
    real = real_part_on_base(phi, builtin("J"))
    q1, q2 = real.variables[:2]
    assert sympy.expand(real.expr - (q1**2 - q2**2)) == 0


def test_real_function_hessian():
    f = RealFunction.parse("q1**2*q2", 2)
    assert np.allclose(f.hessian_at([1.0, 3.0]), [[6, 2], [2, 0]])


@pytest.mark.parametrize("name", ["J", "Jtilde"])
def test_real_complex_hessian_identity(name):
    phi = HolomorphicFunction.parse("z1**3 + z1*z2 + z2**2")
    assert real_complex_hessian_identity(phi, builtin(name), complex_samples(8))


class TestSubmanifolds:
    def test_graph_is_complex_lagrangian(self, structure_j):
        phi = HolomorphicFunction.parse("z1**2*z2")
        surface = graph(phi, structure_j.chart, complex_samples(SAMPLES))
        assert surface.dim == 8 and surface.size == SAMPLES
        assert verify_complex_lagrangian(surface, structure_j)
        assert is_bilagrangian_subspace(surface.frames, structure_j.pair)

    def test_rank_deficient_frames(self):
        with pytest.raises(RankDeficientFrameError):
            SampledSubmanifold(np.zeros((1, 8)), np.zeros((1, 8, 4)))

    def test_real_grid(self):
        grid = real_grid((0.0, 0.0), (1.0, 2.0), 3)
        assert grid.shape == (9, 2)
        assert grid[-1].tolist() == [1.0, 2.0]


class TestWorkedExample:
    def test_generalized_solution(self):
        report = verify_generalized(worked_example_surface(SAMPLES), equation("hess2").form)
        assert report.passed, report.maxima

    def test_regular_solution(self):
        report = worked_example_regular(SAMPLES)
        assert report.passed, report.maxima
        assert report.samples > 0

    def test_grid_outside_domain(self):
        f = RealFunction.parse("sqrt(1 - t1**2 - t2**2)", 2)
        with pytest.raises(InvalidParameterError):
            verify_regular(f, equation("hess2"), real_grid((2.0, 2.0), (3.0, 3.0), 3))


class TestPropositions:
    @pytest.mark.parametrize("number", sorted(PROPOSITIONS))
    def test_default_input_passes(self, number):
        report = run_proposition(number, samples=SAMPLES)
        assert report.passed, (report.name, report.maxima)
        assert report.name.startswith(f"proposition {number}")

    @pytest.mark.parametrize("number", sorted(PROPOSITIONS))
    def test_failing_input_fails(self, number):
        report = run_proposition(number, samples=SAMPLES, failing=True)
        assert not report.passed
        assert report.residual_max > report.tol

    def test_custom_phi(self):
        report = run_proposition(5, phi_text="3*z1 + z2**4", samples=SAMPLES)
        assert report.passed

    def test_family_reports_constraint_sign(self):
        report = run_proposition(7, samples=SAMPLES)
        assert any("constraint holds with sign" in note for note in report.notes)

    def test_unknown_proposition(self):
        with pytest.raises(InvalidParameterError):
            run_proposition(9)

    @pytest.mark.slow
    def test_default_inputs_on_the_full_grid(self):
        for number in PROPOSITIONS:
            assert run_proposition(number).passed
