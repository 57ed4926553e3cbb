#!/usr/bin/env python3
"""
test_complex_structures.py - Built-in structures, block conditions and Darboux charts
"""

import pytest

from monge_ampere_complex.exceptions import InvalidStructureError, UnknownNameError
from monge_ampere_complex.services.complex_structures import (
    MATRIX_A,
    CompatibleComplexStructure,
    block_violations,
    builtin,
    canonical_name,
    from_darboux_blocks,
    slag_factorization_check,
    to_darboux_blocks,
)
from monge_ampere_complex.services.exterior_algebra import (
    LinearMap,
    Scalar,
    power,
    pullback,
    standard_symplectic,
)
from monge_ampere_complex.utils import linalg

ZERO = [[0] * 4 for _ in range(4)]


def _unitary_special_map() -> LinearMap:
    """z1 -> i z1, z2 -> -i z2 with z_k = q_k + i p_k, in the interleaved basis."""
    rows = [[0] * 8 for _ in range(8)]
    rows[0][1], rows[1][0] = -1, 1
    rows[2][3], rows[3][2] = 1, -1
    for k in range(4, 8):
        rows[k][k] = 1
    return LinearMap.from_rows(rows)


def _shear() -> LinearMap:
    """p1 += q2, p2 += q1 (symmetric shear, symplectic)."""
    rows = [[1 if i == j else 0 for j in range(8)] for i in range(8)]
    rows[1][2] = 1
    rows[3][0] = 1
    return LinearMap.from_rows(rows)


def test_block_conditions_hold(structure):
    assert block_violations(structure.matrix) == []


def test_omega_j_is_real_and_nondegenerate(structure):
    assert structure.omega_j.is_exact and structure.omega_j.is_real()
    assert not power(structure.omega_j, 4).is_zero()


def test_chart_realizes_theta(structure):
    assert structure.chart.rank() == 8
    assert structure.chart.theta() == structure.theta


def test_k_uses_diagonal_variant():
    a, b, c, d = to_darboux_blocks(builtin("K").matrix)
    assert b == c == [[Scalar.of(v) for v in row] for row in MATRIX_A]


def test_blocks_round_trip():
    matrix = from_darboux_blocks(MATRIX_A, ZERO, ZERO, [list(r) for r in zip(*MATRIX_A)])
    a, b, c, d = to_darboux_blocks(matrix)
    assert a == [[Scalar.of(v) for v in row] for row in MATRIX_A]
    assert b == c == [[Scalar()] * 4 for _ in range(4)]


def test_invalid_structure_names_condition():
    identity = linalg.identity(8)
    with pytest.raises(InvalidStructureError) as exc_info:
        CompatibleComplexStructure.build("identity", identity, builtin("J").chart)
    assert exc_info.value.details["condition"] == "J^2 = -1"


def test_wrong_chart_rejected():
    j = builtin("J")
    with pytest.raises(InvalidStructureError):
        CompatibleComplexStructure.build("mixed", j.matrix, builtin("Jtilde").chart)


@pytest.mark.parametrize(
    ("alias", "name"),
    [("j", "J"), ("JTILDE", "Jtilde"), ("K~", "Ktilde"), ("j2", "J2")],
)
def test_canonical_names(alias, name):
    assert canonical_name(alias) == name
    assert builtin(alias).name == name


def test_unknown_structure():
    with pytest.raises(UnknownNameError) as exc_info:
        builtin("L")
    assert "J2" in exc_info.value.details["choices"]


def test_slag_factorization():
    assert slag_factorization_check()


def test_slag_factorization_for_conjugated_structures():
    f = _unitary_special_map()
    assert pullback(f, standard_symplectic(4)) == standard_symplectic(4)
    first = builtin("J").conjugated(f)
    second = builtin("K").conjugated(f)
    assert slag_factorization_check(first, second)


def test_conjugated_structure_is_compatible():
    conjugated = builtin("J2").conjugated(_shear(), "J2^S")
    assert conjugated.name == "J2^S"
    assert block_violations(conjugated.matrix) == []
    assert conjugated.omega_j == pullback(_shear(), builtin("J2").omega_j)
