import itertools

import numpy as np
import pytest

from jordanspace.planes import (
    CLOSED,
    MIXED,
    OPEN,
    DigitalPlane,
    make_cots,
    make_khalimsky_plane,
    make_marcus_wyse_plane,
)
from jordanspace.poset import dual

from oracles import khalimsky_leq_by_coords


@pytest.mark.parametrize("w,h", [(3, 3), (4, 5), (6, 6)])
@pytest.mark.parametrize("xp,yp", [(0, 0), (0, 1), (1, 0), (1, 1)])
def test_khalimsky_order_matches_coordinate_rule(w, h, xp, yp):
    plane = DigitalPlane(w, h, x_closed_parity=xp, y_closed_parity=yp)
    for p, q in itertools.product(range(len(plane)), repeat=2):
        assert plane.space.leq[p, q] == khalimsky_leq_by_coords(plane.coord(p), plane.coord(q), xp, yp)


def test_cots_alternates():
    c = make_cots(6, OPEN)
    assert [c.is_open_point(k) for k in range(6)] == [True, False] * 3
    with pytest.raises(ValueError):
        make_cots(0)


def test_ids_sort_lexicographically():
    plane = DigitalPlane(4, 3)
    assert [plane.coord(p) for p in range(len(plane))] == sorted(plane.coords())
    assert plane.point(2, 1) == 7


def test_neighbour_counts_and_mixed_isolation():
    plane = make_khalimsky_plane(7, 7)
    for p in plane.inner_points:
        want = 4 if plane.classify(p) == MIXED else 8
        assert len(plane.adjacency(p)) == want
        if plane.classify(p) == MIXED:
            i, j = plane.coord(p)
            four = {plane.point(i + 1, j), plane.point(i - 1, j), plane.point(i, j + 1), plane.point(i, j - 1)}
            assert plane.adjacency(p) == four
            assert all(plane.is_pure(q) for q in four)


def test_pure_diagonal_neighbours_are_comparable():
    plane = make_khalimsky_plane(5, 5)
    c = plane.point(2, 2)
    assert plane.classify(c) == CLOSED
    for d in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        o = plane.point(2 + d[0], 2 + d[1])
        assert plane.classify(o) == OPEN and plane.space.leq[o, c]


def test_marcus_wyse_has_no_mixed_points_and_four_adjacency():
    plane = make_marcus_wyse_plane(5, 5)
    assert {plane.classify(p) for p in range(len(plane))} == {OPEN, CLOSED}
    for p in plane.inner_points:
        assert len(plane.adjacency(p)) == 4
        if plane.classify(p) == CLOSED:
            assert len(plane.space.down_set(p)) == 5
        else:
            assert plane.space.down_set(p) == {p}


@pytest.mark.parametrize(
    "plane,size",
    [
        (DigitalPlane(5, 5, x_closed_parity=1, y_closed_parity=1), 16),
        (DigitalPlane(3, 3), 8),
        (DigitalPlane(4, 4), 10),
        (DigitalPlane(4, 4, x_closed_parity=1), 10),
    ],
)
def test_adjusted_border_size(plane, size):
    border = plane.adjusted_border()
    assert len(border) == size
    assert not any(plane.classify(p) == MIXED and p in plane.raw_border and _is_corner(plane, p) for p in border)


def _is_corner(plane, p):
    i, j = plane.coord(p)
    return i in (0, plane.width - 1) and j in (0, plane.height - 1)


def test_plane_dual_swaps_open_and_closed():
    plane = DigitalPlane(4, 5, x_closed_parity=1)
    flipped = plane.dual()
    assert np.array_equal(dual(plane.space).leq, flipped.space.leq)
    mw = make_marcus_wyse_plane(4, 4)
    assert np.array_equal(dual(mw.space).leq, mw.dual().space.leq)


def test_render_has_top_row_first():
    plane = DigitalPlane(3, 2, x_closed_parity=0, y_closed_parity=0)
    assert plane.render() == "MOM\nCMC"


def test_json_round_trip_and_validation():
    plane = make_marcus_wyse_plane(3, 4, parity=1)
    assert DigitalPlane.from_json(plane.to_json()) == plane
    with pytest.raises(ValueError):
        DigitalPlane.from_json({"width": 3})
    with pytest.raises(ValueError):
        DigitalPlane(3, 3, topology="hex")
    with pytest.raises(ValueError):
        plane.point(5, 0)
