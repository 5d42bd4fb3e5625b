import pytest

from rpphilb import RPP, YoungDiagram

import frozen_tables as FT


@pytest.fixture
def square_diagram():
    return YoungDiagram((2, 2))


@pytest.fixture
def square_rpp():
    return RPP.from_text(FT.SQUARE_TEXT)


@pytest.fixture
def grid_diagram():
    return YoungDiagram((3, 3, 3))


@pytest.fixture
def grid_rpp():
    return RPP.from_text(FT.GRID_TEXT)


@pytest.fixture
def domino_rpp():
    return RPP.from_text(FT.DOMINO_TEXT)
