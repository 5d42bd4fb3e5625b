"""Component classification: smoothness, point bijectivity, witnesses."""

import pytest

from rpphilb import RPP, CapExceeded
from rpphilb.components import (
    bijective_on_points,
    classify,
    component_dimension,
    differential_injective,
    dimension_recursive,
)
from rpphilb.rpp import Factorization, indicators

import frozen_tables as FT


def _report_rows(reports, diagram):
    nus = indicators(diagram)
    rows = []
    for rep in reports:
        witness = None
        if rep.relation_witness is not None:
            witness = {
                nus[k].to_text(): c
                for k, c in enumerate(rep.relation_witness)
                if c
            }
        rows.append(
            {
                "factorization": {
                    nu.to_text(): m for nu, m in rep.factorization.terms.items()
                },
                "smooth": rep.smooth,
                "bijective_on_points": rep.bijective_on_points,
                "differential_injective": rep.differential_injective,
                "witness": witness,
            }
        )
    return rows


def test_square_classification_table(square_rpp):
    reports = classify(square_rpp)
    assert _report_rows(reports, square_rpp.diagram) == FT.SQUARE_COMPONENTS
    assert all(rep.dimension == 4 for rep in reports)


def test_grid_classification_table(grid_rpp):
    reports = classify(grid_rpp)
    assert _report_rows(reports, grid_rpp.diagram) == FT.GRID_COMPONENTS
    assert all(rep.dimension == FT.GRID_WEIGHT for rep in reports)
    assert sum(1 for rep in reports if not rep.smooth) == 7


def test_witness_is_a_support_relation(grid_rpp):
    # every reported witness really annihilates the support matrix
    diagram = grid_rpp.diagram
    nus = indicators(diagram)
    for rep in classify(grid_rpp):
        if rep.relation_witness is None:
            continue
        for box in diagram.boxes:
            total = sum(
                c * nus[k].value(box)
                for k, c in enumerate(rep.relation_witness)
            )
            assert total == 0


def test_dimension_equals_weight(square_rpp, grid_rpp):
    assert component_dimension(square_rpp) == 4
    assert dimension_recursive(square_rpp) == 4
    assert component_dimension(grid_rpp) == FT.GRID_WEIGHT
    assert dimension_recursive(grid_rpp) == FT.GRID_WEIGHT


def test_bijective_but_not_differentially_injective(grid_rpp):
    # exactly one singular component of the grid example is a bijection on
    # points while its differential drops rank
    reports = classify(grid_rpp)
    special = [
        rep
        for rep in reports
        if rep.bijective_on_points and not rep.differential_injective
    ]
    assert len(special) == 1
    assert not special[0].smooth


def test_point_bijectivity_uses_multiplicity_bound(square_rpp):
    # the mixed factorisation carries the relation inside its multiplicity
    # box, so it fails the bijectivity test; doubling only two of the four
    # multiplicities leaves no balanced relation and the test passes
    reports = classify(square_rpp)
    mixed = reports[1].factorization
    ok, witness = bijective_on_points(mixed)
    assert not ok
    assert witness is not None
    assert sum(witness.values()) == 0

    ok_std, none_witness = bijective_on_points(reports[0].factorization)
    assert ok_std
    assert none_witness is None


def test_differential_injectivity_flags(square_rpp):
    reports = classify(square_rpp)
    ok, witness = differential_injective(reports[1].factorization)
    assert not ok
    assert witness is not None
    assert differential_injective(reports[0].factorization) == (True, None)


def test_witness_search_cap(square_rpp):
    nus = indicators(square_rpp.diagram)
    huge = Factorization({nus[1]: 10 ** 6, nus[2]: 1, nus[3]: 1, nus[4]: 10 ** 6})
    with pytest.raises(CapExceeded) as err:
        bijective_on_points(huge)
    assert err.value.code == "search-too-large"


def test_small_weight_is_always_smooth():
    # weight <= 3 leaves no room for a balanced indicator relation
    for text in ("0 1 / 1 3", "1 2 / 2", "0 0 2 / 1"):
        n = RPP.from_text(text)
        assert n.weight() <= 3
        assert all(rep.smooth for rep in classify(n))
