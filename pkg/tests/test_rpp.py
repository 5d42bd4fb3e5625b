"""Monotone fillings, their derivative and weight, and monoid factorisations."""

import pytest

from rpphilb import RPP, CapExceeded, DomainError, YoungDiagram
from rpphilb.rpp import (
    all_factorizations,
    complete_factorization,
    enumerate_rpps,
    indicators,
    is_indicator,
    iter_rpps_of_size,
    standard_factorization,
    zero_rpp,
)

import frozen_tables as FT


def test_text_round_trip(square_rpp):
    assert square_rpp.to_text() == FT.SQUARE_TEXT
    assert RPP.from_text(square_rpp.to_text()) == square_rpp
    assert RPP.from_json_obj(square_rpp.to_json_obj()) == square_rpp


def test_ragged_rows_give_hook_shape():
    n = RPP.from_text("0 1 / 2")
    assert n.diagram == YoungDiagram((2, 1))
    assert n.rows() == [[0, 1], [2]]


@pytest.mark.parametrize(
    "text, code",
    [
        ("1 0", "not-monotone"),
        ("0 1 / 1 0", "not-monotone"),
        ("-1 0", "negative-label"),
        ("0 x", "parse-error"),
        ("", "parse-error"),
    ],
)
def test_bad_fillings(text, code):
    with pytest.raises(DomainError) as err:
        RPP.from_text(text)
    assert err.value.code == code


def test_size_values_and_access(square_rpp):
    assert square_rpp.size == 8
    assert square_rpp.values == (0, 2, 2, 4)
    assert square_rpp.value((1, 1)) == 4
    assert square_rpp.rows() == [[0, 2], [2, 4]]


def test_derivative_and_weight(square_rpp, grid_rpp):
    assert square_rpp.derivative().values == (0, 2, 2, 0)
    assert square_rpp.weight() == 4
    # the mixed second difference of the grid example has a negative entry
    assert grid_rpp.derivative().values == (0, 0, 3, 0, 2, 0, 3, 0, -3)
    assert grid_rpp.weight() == 5


def test_weight_equals_socle_minus_subsocle():
    n = RPP.from_text("1 3 / 2")
    socle_sum = sum(n.value(b) for b in n.diagram.socle())
    subsocle_sum = sum(n.value(b) for b in n.diagram.subsocle())
    assert n.weight() == socle_sum - subsocle_sum == 3 + 2 - 1


def test_add_and_scale(square_rpp):
    doubled = square_rpp.scale(2)
    assert doubled.values == (0, 4, 4, 8)
    assert (square_rpp + square_rpp) == doubled
    with pytest.raises(DomainError) as err:
        square_rpp.scale(-1)
    assert err.value.code == "negative-scale"


def test_zero_filling(square_diagram):
    z = zero_rpp(square_diagram)
    assert z.is_zero()
    assert z.weight() == 0
    assert z.size == 0
    with pytest.raises(DomainError) as err:
        standard_factorization(z)
    assert err.value.code == "zero-input"


def test_square_indicators_in_canonical_order(square_diagram):
    assert [nu.to_text() for nu in indicators(square_diagram)] == FT.SQUARE_INDICATORS


def test_grid_indicators_in_canonical_order(grid_diagram):
    assert [nu.to_text() for nu in indicators(grid_diagram)] == FT.GRID_INDICATORS


def test_is_indicator(square_rpp):
    assert is_indicator(RPP.from_text("0 1 / 1 1"))
    assert not is_indicator(square_rpp)
    # 0/1 filling on a disconnected upper set is not an indicator
    assert not is_indicator(RPP.from_text("0 1 / 1"))


def test_standard_factorization_of_square(square_rpp):
    f = standard_factorization(square_rpp)
    assert {nu.to_text(): m for nu, m in f.terms.items()} == {
        "0 1 / 1 1": 2,
        "0 0 / 0 1": 2,
    }
    assert f.length == square_rpp.weight()
    assert f.total() == square_rpp


def test_complete_factorization_of_square(square_rpp):
    f = complete_factorization(square_rpp)
    assert {nu.to_text(): m for nu, m in f.terms.items()} == {
        "0 1 / 0 1": 2,
        "0 0 / 1 1": 2,
    }
    assert f.total() == square_rpp


def test_complete_factorization_needs_nonnegative_derivative(grid_rpp):
    assert complete_factorization(grid_rpp) is None


def test_all_factorizations_of_square(square_rpp):
    facts = all_factorizations(square_rpp)
    assert len(facts) == 3
    as_text = [
        {nu.to_text(): m for nu, m in f.terms.items()} for f in facts
    ]
    expected = [comp["factorization"] for comp in FT.SQUARE_COMPONENTS]
    assert as_text == expected
    assert all(f.length == 4 for f in facts)
    assert all(f.total() == square_rpp for f in facts)


def test_all_factorizations_of_grid(grid_rpp):
    facts = all_factorizations(grid_rpp)
    assert len(facts) == 15
    assert all(f.length == 5 for f in facts)
    assert all(f.total() == grid_rpp for f in facts)


def test_factorization_weight_cap():
    heavy = RPP.from_text("13")
    with pytest.raises(CapExceeded) as err:
        all_factorizations(heavy)
    assert err.value.code == "search-too-large"
    # raising the cap makes the enumeration legal again
    assert len(all_factorizations(heavy, max_weight=13)) == 1


def test_enumerate_rpps_counts(square_diagram):
    by_size = [len(list(iter_rpps_of_size(square_diagram, k))) for k in range(5)]
    assert by_size == [1, 1, 3, 4, 7]
    assert len(enumerate_rpps(square_diagram, 4)) == sum(by_size)
