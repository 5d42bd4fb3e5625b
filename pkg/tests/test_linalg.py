"""Exact rational elimination: rref, rank, kernels, integer normalisation."""

from fractions import Fraction

from rpphilb.linalg import (
    integer_normalize,
    kernel_basis,
    rank,
    rref,
    solve_from_rref,
)


def test_rref_reduces_dependent_rows():
    reduced, pivots = rref([[2, 4], [1, 2]])
    assert reduced == [[1, 2], [0, 0]]
    assert pivots == [0]


def test_rank():
    assert rank([[1, 2], [3, 4]]) == 2
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[0, 0], [0, 0]]) == 0


def test_kernel_basis_members_annihilate():
    matrix = [[1, 1, -1, -1], [0, 2, 1, -3]]
    basis = kernel_basis(matrix)
    assert len(basis) == 2
    for vec in basis:
        for row in matrix:
            assert sum(r * v for r, v in zip(row, vec)) == 0


def test_kernel_of_injective_matrix_is_trivial():
    assert kernel_basis([[1, 0], [0, 1], [1, 1]]) == []


def test_integer_normalize_clears_denominators_and_sign():
    assert integer_normalize([Fraction(2, 3), Fraction(-4, 3)]) == [1, -2]
    assert integer_normalize([Fraction(-1, 2), Fraction(1, 4)]) == [2, -1]
    assert integer_normalize([Fraction(0), Fraction(-3)]) == [0, 1]


def test_solve_from_rref_yields_kernel_vector():
    matrix = [[1, 0, 2], [0, 1, 3]]
    reduced, pivots = rref(matrix)
    x = solve_from_rref(reduced, pivots, {2: Fraction(5)}, 3)
    assert x == [Fraction(-10), Fraction(-15), Fraction(5)]
    for row in matrix:
        assert sum(r * v for r, v in zip(row, x)) == 0


def test_rref_with_fraction_entries():
    reduced, pivots = rref([[Fraction(1, 2), Fraction(1, 3)]])
    assert reduced == [[1, Fraction(2, 3)]]
    assert pivots == [0]
