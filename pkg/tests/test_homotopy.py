import itertools
import random

import pytest

from jordanspace.curve_space import build_poset
from jordanspace.enumerate import enumerate_curves
from jordanspace.homotopy import (
    CLOSED_CELL,
    GEQ,
    LEQ,
    OPEN_CELL,
    Fence,
    curve_leq,
    default_basepoint,
    minimal_path,
    minimalize,
    morph,
    shrink,
    standard_parameterization,
)
from jordanspace.jordan import CurveError, JordanCurve, minimal_curve
from jordanspace.planes import CLOSED, MIXED, OPEN, DigitalPlane, make_marcus_wyse_plane

from oracles import pointwise_leq_by_atoms

FOUR = DigitalPlane(4, 4, x_closed_parity=1, y_closed_parity=0)
FIVE = DigitalPlane(5, 5, x_closed_parity=1, y_closed_parity=1)
FIVE_CURVES = enumerate_curves(FIVE)

# Point names of the 4x4 Hasse figure, placed on this plane's coordinates.
NAMES = {
    "c1": (1, 2), "m1": (1, 3), "m2": (1, 1), "m3": (0, 2), "m4": (2, 2),
    "o0": (0, 3), "o2": (2, 3), "o3": (0, 1), "o1": (2, 1),
    "c2": (3, 2), "c4": (3, 0), "c3": (1, 0), "m5": (3, 1), "m6": (2, 0), "m7": (3, 3), "m8": (0, 0),
}
FIGURE_CURVES = {
    "a": "c1 m2 c3 m6 c4 m5 c2 m4",
    "b": "o3 c3 m6 c4 m5 c2 m4 c1",
    "c": "c1 m2 c3 m6 c4 m5 c2 o2",
    "d": "c1 o3 c3 m6 c4 m5 c2 o2",
    "e": "c1 o3 c3 o1",
    "f": "o0 m3 o3 c3 m6 c4 m5 c2 o2 m1",
    "g": "o2 c1 o1 c2",
    "h": "o0 m3 o3 c3 o1 c2 o2 m1",
    "i": "o0 m3 o3 c3 o1 m4 o2 m1",
    "j": "o0 m3 o3 m2 o1 c2 o2 m1",
    "k": "o0 m3 o3 m2 o1 m4 o2 m1",
}
# drawn edges, upper curve first
FIGURE_EDGES = {
    ("a", "b"), ("b", "d"), ("d", "f"), ("f", "h"), ("h", "i"), ("i", "k"), ("j", "k"),
    ("h", "j"), ("c", "d"), ("a", "c"), ("b", "e"), ("e", "i"), ("c", "g"), ("g", "j"),
}


def figure_curve(name):
    return JordanCurve.from_coords(FOUR, [NAMES[p] for p in FIGURE_CURVES[name].split()])


def test_figure_point_names_match_classes():
    kinds = {"c": CLOSED, "m": MIXED, "o": OPEN}
    for name, ij in NAMES.items():
        assert FOUR.classify(FOUR.point(*ij)) == kinds[name[0]]


def test_four_by_four_hasse_diagram_matches_figure():
    cs = build_poset(FOUR)
    named = {n: cs.index(figure_curve(n)) for n in FIGURE_CURVES}
    assert sorted(named.values()) == list(range(11))
    back = {k: n for n, k in named.items()}
    edges = {(back[hi], back[lo]) for hi, lo in cs.cover_pairs()}
    assert edges == FIGURE_EDGES


def test_curve_leq_agrees_with_atom_model_on_four_by_four():
    curves = enumerate_curves(FOUR) + enumerate_curves(DigitalPlane(4, 4))
    for a, b in itertools.product(curves, repeat=2):
        if a.plane == b.plane:
            assert curve_leq(a, b) == pointwise_leq_by_atoms(a, b)


def test_curve_leq_agrees_with_atom_model_on_sampled_five_by_five_pairs():
    rng = random.Random(7)
    pairs = [tuple(rng.sample(FIVE_CURVES, 2)) for _ in range(400)]
    cs = build_poset(FIVE)
    # make sure comparable pairs are represented, not only random misses
    pairs += [(cs.curves[lo], cs.curves[hi]) for hi, lo in cs.cover_pairs()]
    for a, b in pairs:
        assert curve_leq(a, b) == pointwise_leq_by_atoms(a, b)


@pytest.mark.parametrize("plane", [FIVE, DigitalPlane(6, 6)])
def test_adjacent_minimal_curves_reverse_the_plane_order(plane):
    space = plane.space
    for p in plane.inner_points:
        for q in space.neighbours[p] & set(plane.inner_points):
            a, b = minimal_curve(plane, p), minimal_curve(plane, q)
            assert curve_leq(a, b) == bool(space.leq[q, p])


def test_named_adjacent_cases():
    plane = DigitalPlane(6, 6)
    c = plane.point(2, 2)
    m = plane.point(3, 2)
    o = plane.point(3, 3)
    assert (plane.classify(c), plane.classify(m), plane.classify(o)) == (CLOSED, MIXED, OPEN)
    # closed below mixed below open once taken to adjacency curves
    assert curve_leq(minimal_curve(plane, c), minimal_curve(plane, m))
    assert curve_leq(minimal_curve(plane, m), minimal_curve(plane, o))
    assert curve_leq(minimal_curve(plane, c), minimal_curve(plane, o))
    assert not curve_leq(minimal_curve(plane, o), minimal_curve(plane, c))


def test_top_of_five_by_five_and_its_covers():
    cs = build_poset(FIVE)
    (top,) = cs.maximal()
    assert cs.curves[top] == minimal_curve(FIVE, FIVE.point(2, 2))
    square = [(1, 1), (2, 1), (3, 1), (3, 2), (3, 3), (2, 3), (1, 3), (1, 2)]
    covers = set()
    for bump, dropped in [((2, 4), (2, 3)), ((0, 2), (1, 2)), ((4, 2), (3, 2)), ((2, 0), (2, 1))]:
        pts = [bump if ij == dropped else ij for ij in square]
        covers.add(cs.index(JordanCurve.from_coords(FIVE, pts)))
    assert set(cs.lower_covers(top)) == covers


def test_marcus_wyse_curves_are_incomparable():
    curves = enumerate_curves(make_marcus_wyse_plane(4, 4))
    assert len(curves) >= 2
    for a, b in itertools.permutations(curves, 2):
        assert not curve_leq(a, b)


def test_standard_parameterization_alternates():
    for curve in FIVE_CURVES:
        f = standard_parameterization(curve)
        f.validate(curve)
        kinds = [k for _, k in f.cells]
        assert set(kinds) == {OPEN_CELL, CLOSED_CELL}
        assert all(a != b for a, b in zip(kinds, kinds[1:] + kinds[:1]))


@pytest.mark.parametrize("curve", [c for c in FIVE_CURVES if not c.is_minimal()][::3])
def test_shrink_step(curve):
    step = shrink(curve)
    q = step.removed
    attach = FIVE.space.neighbours[q] & curve.point_set
    assert len(attach) in ((3,) if FIVE.classify(q) == MIXED else (3, 5, 7))
    assert set(step.attached) == attach
    assert len(step.curve.interior) == len(curve.interior) - 1
    assert q in step.curve and step.weak
    if step.direction == LEQ:
        assert curve_leq(curve, step.curve)
    else:
        assert curve_leq(step.curve, curve)
    # the explicit g really is pointwise comparable to f on every replaced cell
    inner = set(step.attached[1:-1])
    for p in inner:
        assert FIVE.space.leq[p, q] if step.direction == LEQ else FIVE.space.leq[q, p]


def test_shrink_keeps_minimal_curves():
    curve = minimal_curve(FIVE, FIVE.point(1, 1))
    assert shrink(curve).curve == curve
    with pytest.raises(CurveError):
        shrink(curve, FIVE.point(0, 0))


def test_minimalize_reaches_the_basepoint():
    border = JordanCurve.from_points(FIVE, FIVE.adjusted_border())
    base = default_basepoint(border)
    assert FIVE.coord(base) == (1, 1)
    fence, steps = minimalize(border)
    assert len(steps) == 8
    assert fence.curves[-1] == minimal_curve(FIVE, base)
    fence.validate()
    other = FIVE.point(3, 3)
    fence, _ = minimalize(border, other)
    assert fence.curves[-1].interior == {other}


def test_minimal_path_between_adjacent_centres():
    p, q = FIVE.point(2, 2), FIVE.point(2, 3)
    fence = minimal_path(FIVE, p, q)
    assert len(fence) == 2
    fence.validate()


def test_morph_shapes():
    a, b = FIVE_CURVES[3], FIVE_CURVES[60]
    assert len(morph(a, a)) == 1
    fence = morph(a, b)
    assert fence.curves[0] == a and fence.curves[-1] == b
    fence.validate()
    back = morph(b, a)
    back.validate()
    p, q = FIVE.point(1, 1), FIVE.point(1, 2)
    assert len(morph(minimal_curve(FIVE, p), minimal_curve(FIVE, q))) == 2


def test_fence_helpers():
    a, b = minimal_curve(FIVE, FIVE.point(1, 1)), minimal_curve(FIVE, FIVE.point(1, 2))
    fence = Fence((a, b, a), (LEQ, GEQ)) if curve_leq(a, b) else Fence((a, b, a), (GEQ, LEQ))
    assert len(fence.cancel_backtracks()) == 1
    assert fence.reversed().curves == fence.curves[::-1]
    with pytest.raises(AssertionError):
        Fence((a, b), ({LEQ: GEQ, GEQ: LEQ}[fence.directions[0]],)).validate()
