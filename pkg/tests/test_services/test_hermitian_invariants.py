#!/usr/bin/env python3
"""
test_hermitian_invariants.py - Inertia, canonical blocks and the Hermitian form of a bieffective 4-form
"""

import random

import pytest

from monge_ampere_complex.exceptions import InvalidParameterError, NotBieffectiveError
from monge_ampere_complex.services.complex_structures import builtin
from monge_ampere_complex.services.exterior_algebra import I, Scalar, wedge
from monge_ampere_complex.services.form_parser import parse_form
from monge_ampere_complex.services.hermitian_invariants import (
    HermitianMatrix,
    Signature,
    cayley_orthogonal,
    complex_symplectic_map,
    direct_sum,
    equivariance_check,
    grassmannian_member,
    hong_block,
    inertia,
    normalized_spectrum,
    q_matrix,
    qqt_spectrum,
    random_antisymmetric,
    random_complex_symplectic,
    signature,
    signature_class,
    spectrum_matches,
    standard_basis,
    su5_dimension_check,
)
from monge_ampere_complex.utils import linalg


@pytest.fixture(scope="module")
def bieffective_j():
    return builtin("J").chart.pull(parse_form("dz1^dz2^dzb1^dzb2"))


class TestInertia:
    def test_real_exact(self):
        q = HermitianMatrix.of([[2, 1, 0], [1, 2, 0], [0, 0, 0]])
        assert inertia(q.entries) == Signature(2, 0, 1)

    def test_indefinite(self):
        assert signature(HermitianMatrix.of([[0, 1], [1, 0]])) == (1, 1, 0)

    def test_complex_exact(self):
        q = HermitianMatrix([[Scalar(), I], [-I, Scalar()]])
        assert signature(q) == (1, 1, 0)

    def test_inexact_uses_tolerance(self):
        q = HermitianMatrix.of([[1.0, 0], [0, -2.0]])
        assert not q.is_exact
        assert signature(q) == (1, 1, 0)
        assert inertia(HermitianMatrix.of([[1e-14, 0], [0, 1.0]]).entries) == (1, 0, 1)

    def test_signature_class_orders_by_sign(self):
        assert signature_class((1, 3, 1)) == (3, 1)
        assert signature_class((2, 0, 3)) == (2, 0)


def test_non_hermitian_rejected():
    with pytest.raises(InvalidParameterError):
        HermitianMatrix.of([[1, 1], [0, 1]])


def test_direct_sum_and_padding():
    q = direct_sum(hong_block("H", 1, 2), hong_block("K", 2, 1))
    assert q.size == 3
    assert signature(q) == (2, 1, 0)
    assert signature(q.padded(5)) == (2, 1, 2)
    assert signature(-q) == (1, 2, 0)


class TestHongBlocks:
    def test_h1_is_the_parameter(self):
        assert hong_block("H", 1, 3).entries == [[Scalar.of(3)]]

    def test_h2_at_zero(self):
        q = hong_block("H", 2, 0)
        assert q.entries[0][1] == I / 2
        assert signature(q) == (1, 0, 1)

    def test_k2_is_split(self):
        assert signature(hong_block("K", 2, 1)) == (1, 1, 0)

    def test_l_block(self):
        q = hong_block("L", 2, Scalar.exact(0, 1))
        assert q.size == 2
        assert signature(q) == (1, 1, 0)

    @pytest.mark.parametrize(
        ("kind", "size", "parameter"),
        [
            ("H", 0, 1),
            ("H", 2, Scalar.exact(1, 1)),
            ("K", 3, 1),
            ("K", 2, -1),
            ("L", 2, 1),
            ("M", 2, 1),
        ],
    )
    def test_invalid_parameters(self, kind, size, parameter):
        with pytest.raises(InvalidParameterError):
            hong_block(kind, size, parameter)


class TestSpectrum:
    def test_identity(self):
        q = HermitianMatrix.of([[1 if i == j else 0 for j in range(5)] for i in range(5)])
        values = qqt_spectrum(q)
        assert len(values) == 5
        assert spectrum_matches(values, [1, 1, 1, 1, 1])
        assert not spectrum_matches(values, [1])

    def test_zero_padding(self):
        assert spectrum_matches([1, 0j, 1, 0j, 0j], [1, 1])

    def test_normalized(self):
        values = normalized_spectrum([2 + 0j, -4j, 0j])
        assert max(abs(v) for v in values) == pytest.approx(1.0)
        assert spectrum_matches(values, [0.5, -1j])
        assert normalized_spectrum([0j, 0j]) == [0j, 0j]


class TestQMatrix:
    def test_standard_basis(self, structure):
        basis = standard_basis(structure.chart)
        assert len(basis.forms) == 5
        assert linalg.rank(basis.gram) == 5
        for form in basis.forms:
            assert wedge(form, structure.theta).is_zero()

    def test_basis_coordinates(self, structure_j):
        basis = standard_basis(structure_j.chart)
        coords = [1, 0, Scalar.exact(0, 2), 0, -1]
        assert basis.coordinates(basis.combination(coords)) == [Scalar.of(c) for c in coords]

    def test_q_matrix_is_hermitian(self, bieffective_j, structure_j):
        q = q_matrix(bieffective_j, standard_basis(structure_j.chart))
        assert q.size == 5
        assert q.is_exact
        assert not q.is_zero()

    def test_rejects_non_bieffective(self, structure_j):
        pair = structure_j.pair
        with pytest.raises(NotBieffectiveError):
            q_matrix(wedge(pair.omega1, pair.omega1), standard_basis(structure_j.chart))


def test_grassmannian_membership(structure_j):
    basis = standard_basis(structure_j.chart)
    zero = HermitianMatrix([[Scalar() for _ in range(5)] for _ in range(5)], basis.gram)
    assert grassmannian_member([1, 0, 0, 0, 0], zero)
    assert not grassmannian_member([1, 0, 0, 1, 0], zero)


def test_cayley_transform_is_orthogonal():
    s = [[Scalar.of(v) for v in row] for row in [[0, 1, 0], [-1, 0, 2], [0, -2, 0]]]
    f = cayley_orthogonal(s)
    assert linalg.matmul(linalg.transpose(f), f) == linalg.identity(3)


def test_random_antisymmetric(rng):
    s = random_antisymmetric(5, rng)
    for i in range(5):
        assert s[i][i].is_zero()
        for j in range(5):
            assert s[i][j] == -s[j][i]


def test_equivariance_under_complex_symplectic_maps(bieffective_j, structure_j):
    rng = random.Random(7)
    for _ in range(2):
        f = complex_symplectic_map(structure_j, random_complex_symplectic(rng))
        assert f.is_exact
        assert equivariance_check(bieffective_j, structure_j, f)


@pytest.mark.slow
def test_equivariance_sweep(structure_j):
    rng = random.Random(11)
    omega0 = structure_j.chart.pull(parse_form("dz1^du2^dzb1^dub2 + dz2^du1^dzb2^dub1"))
    for _ in range(20):
        f = complex_symplectic_map(structure_j, random_complex_symplectic(rng))
        assert equivariance_check(omega0, structure_j, f)


class TestCongruence:
    @pytest.fixture
    def q(self):
        return HermitianMatrix.of(
            [
                [1, I, 0, 0, 0],
                [-I, 2, 0, 0, 1],
                [0, 0, -1, 0, 0],
                [0, 0, 0, 0, 0],
                [0, 1, 0, 0, 3],
            ]
        )

    def test_signature_under_invertible_change_of_basis(self, q):
        p = [[Scalar.of(v) for v in row] for row in [
            [1, 2, 0, 0, I],
            [0, 1, 1, 0, 0],
            [0, 0, 1, I, 0],
            [0, 0, 0, 2, 0],
            [0, 0, 0, 0, 1],
        ]]
        assert signature(q.congruent(p)) == signature(q)

    def test_spectrum_under_orthogonal_change_of_basis(self, q):
        s = [[Scalar.of(v) for v in row] for row in [
            [0, 1, 0, 2, 0],
            [-1, 0, 1, 0, 0],
            [0, -1, 0, 1, 3],
            [-2, 0, -1, 0, 1],
            [0, 0, -3, -1, 0],
        ]]
        f = cayley_orthogonal(s)
        moved = q.congruent(f)
        assert signature(moved) == signature(q)
        assert spectrum_matches(qqt_spectrum(moved), qqt_spectrum(q), tol=1e-8)


def test_su5_dimension(structure_j):
    assert su5_dimension_check(structure_j)


@pytest.mark.slow
def test_su5_dimension_all_structures(structure):
    assert su5_dimension_check(structure)
