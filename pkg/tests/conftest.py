from __future__ import annotations

import pytest
from hypothesis import assume
from hypothesis import strategies as st

from kangulate.geom import CollinearTriple, DuplicatePoint, make_point_set

SQUARE_CENTER = [(0, 0), (10, 0), (10, 10), (0, 10), (6, 5)]

# four hull corners, a wheel hub at (4, 5), and a notch vertex at (5, 4)
NOTCHED_SIX = [(0, 0), (10, 1), (9, 9), (1, 10), (5, 4), (4, 5)]

coords = st.integers(min_value=-40, max_value=40)
point = st.tuples(coords, coords)


@st.composite
def general_position_sets(draw, min_size=3, max_size=10):
    """Small integer point sets in general position (rejection sampled)."""
    pts = draw(st.lists(point, min_size=min_size, max_size=max_size, unique=True))
    try:
        return make_point_set(pts)
    except (CollinearTriple, DuplicatePoint):
        assume(False)


@pytest.fixture
def square_center():
    return make_point_set(SQUARE_CENTER)


@pytest.fixture
def notched_six():
    return make_point_set(NOTCHED_SIX)
