"""Truncated generating series: products over hooks, collapse, specialisation."""

import pytest

from rpphilb import DomainError, YoungDiagram
from rpphilb.rpp import enumerate_rpps, iter_rpps_of_size
from rpphilb.series import (
    TruncatedSeries,
    collapse_to_diagonals,
    diagonal_support,
    euler_series,
    factor_power,
    geometric_inverse,
    hook_product,
    hook_variable,
    motivic_series,
    rpp_series_bruteforce,
)

import frozen_tables as FT


def test_hook_variable_exponents(square_diagram):
    assert hook_variable(square_diagram, (0, 0)) == (1, 1, 1, 0)
    assert hook_variable(square_diagram, (1, 0)) == (0, 1, 0, 1)
    assert hook_variable(square_diagram, (0, 1)) == (0, 0, 1, 1)
    assert hook_variable(square_diagram, (1, 1)) == (0, 0, 0, 1)


def test_geometric_inverse_is_geometric():
    g = geometric_inverse((1, 0), 1, 2, 4)
    for k in range(5):
        assert str(g.coefficient((k, 0))) == "1"
    assert str(g.coefficient((1, 1))) == "0"


def test_factor_power_positive_and_negative():
    square_of_factor = factor_power((1,), 1, 2, 1, 4, single_variable=True)
    assert [
        str(square_of_factor.coefficient((k,))) for k in range(5)
    ] == ["1", "-2", "1", "0", "0"]
    inverse_square = factor_power((1,), 1, -2, 1, 4, single_variable=True)
    assert [
        str(inverse_square.coefficient((k,))) for k in range(5)
    ] == ["1", "2", "3", "4", "5"]


def test_bruteforce_series_counts_fillings(square_diagram):
    bf = rpp_series_bruteforce(square_diagram, 4)
    total = sum(1 for k, c in bf.coefficients.items() if str(c) == "1")
    assert total == len(enumerate_rpps(square_diagram, 4))
    assert str(bf.coefficient((0, 1, 1, 2))) == "1"
    assert str(bf.coefficient((4, 0, 0, 0))) == "0"


def test_hook_expansion_matches_fillings_when_diagonals_are_distinct():
    for cols in ((2, 1), (3, 1)):
        diagram = YoungDiagram(cols)
        assert len(set(diagonal_support(diagram))) == diagram.size
        assert hook_product(diagram, 1, -1, 6) == rpp_series_bruteforce(diagram, 6)


def test_hook_expansion_fails_on_the_square_at_box_level(square_diagram):
    # a repeated diagonal breaks the box-refined product expansion: each side
    # owns a size-3 monomial the other misses
    bf = rpp_series_bruteforce(square_diagram, 4)
    hp = hook_product(square_diagram, 1, -1, 4)
    assert bf != hp
    assert str(bf.coefficient(FT.SQUARE_SUM_ONLY_MONOMIAL)) == "1"
    assert str(hp.coefficient(FT.SQUARE_SUM_ONLY_MONOMIAL)) == "0"
    assert str(bf.coefficient(FT.SQUARE_PRODUCT_ONLY_MONOMIAL)) == "0"
    assert str(hp.coefficient(FT.SQUARE_PRODUCT_ONLY_MONOMIAL)) == "1"


def test_hook_expansion_holds_after_diagonal_collapse(square_diagram):
    bf = rpp_series_bruteforce(square_diagram, 6)
    hp = hook_product(square_diagram, 1, -1, 6)
    assert collapse_to_diagonals(square_diagram, bf) == collapse_to_diagonals(
        square_diagram, hp
    )


def test_diagonal_support(square_diagram, grid_diagram):
    assert diagonal_support(square_diagram) == (-1, 0, 1)
    assert diagonal_support(grid_diagram) == (-2, -1, 0, 1, 2)
    assert diagonal_support(YoungDiagram((3, 1))) == (-1, 0, 1, 2)


def test_collapse_rejects_wrong_diagram(square_diagram, grid_diagram):
    bf = rpp_series_bruteforce(square_diagram, 3)
    with pytest.raises(DomainError) as err:
        collapse_to_diagonals(grid_diagram, bf)
    assert err.value.code == "diagram-mismatch"


def test_euler_series_single_variable_counts(square_diagram):
    series = euler_series(square_diagram, 1, 10, single_variable=True)
    counts = [
        len(list(iter_rpps_of_size(square_diagram, k))) for k in range(11)
    ]
    assert counts == FT.SQUARE_RPP_COUNTS
    assert [str(series.coefficient((k,))) for k in range(11)] == [
        str(c) for c in counts
    ]


def test_motivic_series_specialises_to_euler(square_diagram):
    affine = motivic_series(square_diagram, "A1", 6)
    assert affine.substitute_L(1) == euler_series(square_diagram, 1, 6)
    projective = motivic_series(square_diagram, "P1", 6)
    assert projective.substitute_L(1) == euler_series(square_diagram, 2, 6)


def test_motivic_coefficients_on_worked_monomials(square_diagram):
    affine = motivic_series(square_diagram, "A1", 4)
    assert str(affine.coefficient((1, 1, 1, 1))) == "L^2"
    assert str(affine.coefficient((0, 1, 1, 2))) == "L^2"
    assert str(affine.coefficient((0, 0, 0, 0))) == "1"


def test_unsupported_curve(square_diagram):
    with pytest.raises(DomainError) as err:
        motivic_series(square_diagram, "E8", 4)
    assert err.value.code == "unsupported-curve"


def test_series_json_shape(square_diagram):
    multi = rpp_series_bruteforce(square_diagram, 2).to_json_obj()
    assert multi[0] == {"exponents": [0, 0, 0, 0], "coefficient": {"0": 1}}
    single = euler_series(square_diagram, 1, 2, single_variable=True).to_json_obj()
    assert single[0] == {"size": 0, "coefficient": {"0": 1}}
