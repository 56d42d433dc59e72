import itertools
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jordanspace.enumerate import enumerate_curves
from jordanspace.jordan import (
    CurveError,
    JordanCurve,
    cyclic_order,
    is_arc_set,
    is_jordan_curve,
    is_jordan_curve_by_arcs,
    lemma_checks,
    minimal_curve,
    render,
    signed_area,
)
from jordanspace.planes import CLOSED, MIXED, OPEN, DigitalPlane, make_marcus_wyse_plane
from jordanspace.poset import components

from oracles import arc_by_permutation

FIVE = DigitalPlane(5, 5, x_closed_parity=1, y_closed_parity=1)
FIVE_CURVES = enumerate_curves(FIVE)
SIX_CURVES = enumerate_curves(DigitalPlane(6, 6))


def test_border_of_open_cornered_plane():
    border = JordanCurve.from_points(FIVE, FIVE.adjusted_border())
    assert len(border) == 16
    assert len(border.interior) == 9
    assert border.exterior == frozenset()


def test_four_by_four_border_is_a_curve():
    plane = DigitalPlane(4, 4)
    border = JordanCurve.from_points(plane, plane.adjusted_border())
    assert len(border) == 10 and len(border.interior) == 4


@pytest.mark.parametrize("kind,size", [(CLOSED, 8), (OPEN, 8), (MIXED, 4)])
def test_minimal_curve_sizes(kind, size):
    centre = next(p for p in FIVE.inner_points if FIVE.classify(p) == kind)
    curve = minimal_curve(FIVE, centre)
    assert len(curve) == size
    assert curve.interior == {centre}
    assert curve.is_minimal()


def test_minimal_curve_rejects_border_and_marcus_wyse():
    with pytest.raises(CurveError):
        minimal_curve(FIVE, FIVE.point(0, 2))
    with pytest.raises(CurveError):
        minimal_curve(make_marcus_wyse_plane(5, 5), 12)


def test_rejects_non_curves():
    with pytest.raises(CurveError):
        JordanCurve.from_points(FIVE, [0, 1, 2])
    # a triangle of comparable points is too short
    c = FIVE.point(1, 1)
    assert not is_jordan_curve(FIVE, [c, FIVE.point(0, 0), FIVE.point(1, 0)])


@given(st.sampled_from(FIVE_CURVES), st.integers(0, 40), st.booleans())
def test_canonical_form_ignores_rotation_and_reflection(curve, shift, flip):
    seq = list(cyclic_order(curve))
    seq = seq[shift % len(seq):] + seq[: shift % len(seq)]
    if flip:
        seq.reverse()
    again = JordanCurve.from_points(FIVE, seq)
    assert again == curve and hash(again) == hash(curve)


@pytest.mark.parametrize("curve", FIVE_CURVES[::7])
def test_cyclic_order_is_clockwise_from_smallest(curve):
    seq = cyclic_order(curve)
    assert seq[0] == min(curve.points)
    assert signed_area([FIVE.coord(p) for p in seq]) < 0
    assert JordanCurve.from_json(json.loads(json.dumps(curve.to_json()))) == curve


@pytest.mark.parametrize("curve", FIVE_CURVES + SIX_CURVES[::5], ids=lambda c: str(len(c)))
def test_structural_checks_hold(curve):
    failures = [c for c in lemma_checks(curve) if not c["holds"]]
    assert failures == []


def test_curves_have_even_length_and_alternate():
    for curve in FIVE_CURVES + SIX_CURVES:
        assert len(curve) % 2 == 0
        kinds = [curve.relatively_closed(p) for p in curve.points]
        assert all(a != b for a, b in zip(kinds, kinds[1:] + kinds[:1]))


def test_border_avoiding_curves_separate_the_plane_in_two():
    seen = 0
    for curve in SIX_CURVES:
        plane = curve.plane
        if curve.point_set & plane.raw_border:
            continue
        seen += 1
        rest = set(range(len(plane))) - curve.point_set
        assert len(components(plane.space, rest)) == 2
        assert curve.interior and curve.exterior
    assert seen > 0


def test_arc_predicate_against_permutations():
    plane = DigitalPlane(3, 3)
    for size in range(1, 6):
        for sub in itertools.combinations(range(9), size):
            assert is_arc_set(plane.space, sub) == arc_by_permutation(plane.space, sub)


def test_deletion_definition_on_small_subsets():
    plane = DigitalPlane(4, 4)
    for size in range(4, 9):
        for sub in itertools.combinations(range(16), size):
            assert is_jordan_curve(plane.space, sub) == is_jordan_curve_by_arcs(plane.space, sub)


def test_interior_containment_for_nested_pairs():
    for outer in FIVE_CURVES:
        hull = outer.point_set | outer.interior
        for inner in FIVE_CURVES:
            if inner.point_set <= hull:
                assert inner.interior <= outer.interior


def test_render_marks_interior():
    centre = FIVE.point(2, 2)
    picture = render(minimal_curve(FIVE, centre))
    assert picture.split("\n")[2] == ".M+M."
    assert picture.count("+") == 1
