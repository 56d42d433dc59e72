"""Parameterizations, the pointwise order on curves, and fences of curves.

A parameterization of a curve splits the circle into consecutive cells, one
per curve point.  A point that is relatively closed in the curve owns a
closed cell (it also owns the boundary points next to it); the others own
open cells.

``curve_leq(J, K)`` decides whether two such parameterizations ``f`` of ``J``
and ``g`` of ``K`` exist with ``f(s) <= g(s)`` for every ``s``.  On the common
refinement of the two cell structures every open piece carries a pair
``(J[i], K[k])``.  Moving along the circle, a boundary crossed by only ``f``
sits inside a ``K[k]`` cell, so it is covered by the neighbouring pairs.  A
boundary crossed by both at once takes the owning points of each side, which
must also be comparable.  We look for a closed walk in this pair graph that
goes once round each curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .jordan import CurveError, JordanCurve, cyclic_order, maxdist_points, minimal_curve
from .planes import CLOSED, OPEN, DigitalPlane
from .poset import components, is_weak_point, shortest_path

OPEN_CELL = "open_interval"
CLOSED_CELL = "closed_interval"
LEQ, GEQ = "<=", ">="


@dataclass(frozen=True)
class Parameterization:
    """Cells in circular order; each is ``(point, kind)``."""

    cells: tuple[tuple[int, str], ...]

    def points(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.cells)

    def validate(self, curve: JordanCurve) -> None:
        pts = self.points()
        if set(pts) != curve.point_set:
            raise CurveError("cells must cover exactly the curve")
        if len(pts) != len(curve):
            raise CurveError("standard parameterizations have one cell per point")
        n = len(pts)
        for k, (p, kind) in enumerate(self.cells):
            q = pts[(k + 1) % n]
            if q not in curve.plane.space.neighbours[p]:
                raise CurveError("consecutive cells must be comparable")
            want = CLOSED_CELL if curve.relatively_closed(p) else OPEN_CELL
            if kind != want:
                raise CurveError(f"cell kind of {curve.plane.coord(p)} must be {want}")


def standard_parameterization(curve: JordanCurve, order: Sequence[int] | None = None) -> Parameterization:
    seq = list(order) if order is not None else cyclic_order(curve)
    cells = tuple((p, CLOSED_CELL if curve.relatively_closed(p) else OPEN_CELL) for p in seq)
    return Parameterization(cells)


def _owners(curve: JordanCurve, seq: Sequence[int]) -> list[int]:
    """Owner of the boundary between ``seq[k]`` and ``seq[k+1]``."""
    n = len(seq)
    return [seq[k] if curve.relatively_closed(seq[k]) else seq[(k + 1) % n] for k in range(n)]


def _winds_once(adm, diag, n: int, m: int, k0: int) -> bool:
    """Walk from pair ``(0, k0)`` to ``(n, k0 + m)`` on the unrolled torus."""
    if not adm[0][k0]:
        return False
    reach = [[False] * (m + 1) for _ in range(n + 1)]
    reach[0][0] = True
    for i in range(n + 1):
        row = reach[i]
        ii = i % n
        for dk in range(m + 1):
            if not row[dk]:
                continue
            k = (k0 + dk) % m
            k1 = (k + 1) % m
            if dk < m and adm[ii][k1]:
                row[dk + 1] = True
            if i < n:
                i1 = (i + 1) % n
                if adm[i1][k]:
                    reach[i + 1][dk] = True
                if dk < m and adm[i1][k1] and diag[ii][k]:
                    reach[i + 1][dk + 1] = True
    return reach[n][m]


@lru_cache(maxsize=None)
def curve_leq(a: JordanCurve, b: JordanCurve) -> bool:
    """True when ``a`` sits pointwise below ``b`` for some pair of parameterizations."""
    if a.plane != b.plane:
        raise CurveError("curves live in different planes")
    if a == b:
        return True
    leq = a.plane.space.leq
    sa = list(a.points)
    # every point of a must lie below some point of b, and conversely
    sub = leq[sa][:, list(b.points)]
    if not sub.any(axis=1).all() or not sub.any(axis=0).all():
        return False
    own_a = _owners(a, sa)
    n = len(sa)
    for sb in (list(b.points), list(reversed(b.points))):
        m = len(sb)
        own_b = _owners(b, sb)
        adm = [[bool(leq[x, y]) for y in sb] for x in sa]
        diag = [[bool(leq[own_a[i], own_b[k]]) for k in range(m)] for i in range(n)]
        if any(_winds_once(adm, diag, n, m, k0) for k0 in range(m)):
            return True
    return False


def curve_compare(a: JordanCurve, b: JordanCurve) -> str | None:
    if curve_leq(a, b):
        return LEQ
    if curve_leq(b, a):
        return GEQ
    return None


# -- fences --------------------------------------------------------------


@dataclass(frozen=True)
class Fence:
    """Curves ``c[0], ..., c[n]`` with ``directions[k]`` relating ``c[k]`` to ``c[k+1]``."""

    curves: tuple[JordanCurve, ...]
    directions: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.curves)

    def reversed(self) -> "Fence":
        flip = {LEQ: GEQ, GEQ: LEQ}
        return Fence(self.curves[::-1], tuple(flip[d] for d in reversed(self.directions)))

    def __add__(self, other: "Fence") -> "Fence":
        if self.curves[-1] != other.curves[0]:
            raise ValueError("fences do not meet")
        return Fence(self.curves + other.curves[1:], self.directions + other.directions)

    def validate(self) -> None:
        if len(self.directions) != len(self.curves) - 1:
            raise AssertionError("one direction per step")
        for (a, b), d in zip(zip(self.curves, self.curves[1:]), self.directions):
            ok = curve_leq(a, b) if d == LEQ else curve_leq(b, a)
            if not ok:
                raise AssertionError(f"step {a!r} {d} {b!r} fails")

    def cancel_backtracks(self) -> "Fence":
        curves, dirs = [self.curves[0]], []
        for c, d in zip(self.curves[1:], self.directions):
            if len(curves) >= 2 and curves[-2] == c:
                curves.pop()
                dirs.pop()
            else:
                curves.append(c)
                dirs.append(d)
        return Fence(tuple(curves), tuple(dirs))

    def to_json(self) -> dict:
        plane = self.curves[0].plane
        return {
            "plane": plane.to_json(),
            "curves": [[list(plane.coord(p)) for p in cyclic_order(c)] for c in self.curves],
            "directions": list(self.directions),
        }


@dataclass(frozen=True)
class ShrinkStep:
    curve: JordanCurve
    removed: int
    attached: tuple[int, ...]
    direction: str
    parameterization: Parameterization
    weak: bool


def _along_curve(curve: JordanCurve, members: frozenset) -> list[int]:
    """Order a connected proper subset of the curve as it appears along the curve."""
    seq = list(curve.points)
    n = len(seq)
    start = next(k for k in range(n) if seq[k] in members and seq[k - 1] not in members)
    out = []
    k = start
    while seq[k % n] in members:
        out.append(seq[k % n])
        k += 1
    if len(out) != len(members):
        raise AssertionError("attachment set is not connected along the curve")
    return out


def default_basepoint(curve: JordanCurve) -> int:
    inside = curve.interior
    pure = sorted(p for p in inside if curve.plane.is_pure(p))
    if pure:
        return pure[0]
    if len(inside) == 1:
        return next(iter(inside))
    raise CurveError("curve interior has no pure point")


def shrink(curve: JordanCurve, basepoint: int | None = None) -> ShrinkStep:
    """Drop one interior point far from the basepoint, keeping a comparable curve."""
    plane = curve.plane
    space = plane.space
    inside = curve.interior
    if basepoint is None:
        basepoint = default_basepoint(curve)
    if basepoint not in inside:
        raise CurveError("basepoint must lie in the interior")
    f = standard_parameterization(curve)
    if len(inside) == 1:
        return ShrinkStep(curve, -1, (), LEQ, f, False)

    _, far = maxdist_points(curve, basepoint)
    pure = sorted(q for q in far if plane.is_pure(q))
    q = pure[0] if pure else min(far)
    attach = space.neighbours[q] & curve.point_set
    arc = _along_curve(curve, attach)
    inner = set(arc[1:-1])
    if not inner:
        raise AssertionError("removed point must touch at least three curve points")
    region = space.subspace(inside)
    weak = is_weak_point(region, region.index[q])

    new_points = (curve.point_set - inner) | {q}
    new_curve = JordanCurve.from_points(plane, new_points)

    # g agrees with f off the replaced run and is q on it
    cells, placed = [], False
    for p, kind in f.cells:
        if p in inner:
            if not placed:
                cells.append((q, CLOSED_CELL if new_curve.relatively_closed(q) else OPEN_CELL))
                placed = True
            continue
        cells.append((p, kind))
    g = Parameterization(tuple(cells))
    g.validate(new_curve)

    kind = plane.classify(q)
    if kind == CLOSED:
        direction = LEQ
    elif kind == OPEN:
        direction = GEQ
    else:
        (middle,) = inner
        direction = GEQ if plane.classify(middle) == CLOSED else LEQ
    # pointwise check of the explicit pair: every replaced point against q
    below = all(space.leq[p, q] for p in inner)
    above = all(space.leq[q, p] for p in inner)
    if not ((direction == LEQ and below) or (direction == GEQ and above)):
        raise AssertionError("replaced points are not uniformly comparable to the new point")
    return ShrinkStep(new_curve, q, tuple(arc), direction, g, weak)


def minimalize(curve: JordanCurve, basepoint: int | None = None) -> tuple[Fence, list[ShrinkStep]]:
    """Shrink repeatedly until the interior is a single point."""
    if basepoint is None:
        basepoint = default_basepoint(curve)
    curves, dirs, steps = [curve], [], []
    cur = curve
    while len(cur.interior) > 1:
        before = len(cur.interior)
        step = shrink(cur, basepoint)
        if len(step.curve.interior) != before - 1:
            raise AssertionError("interior must shrink by exactly one point")
        steps.append(step)
        curves.append(step.curve)
        dirs.append(step.direction)
        cur = step.curve
    return Fence(tuple(curves), tuple(dirs)), steps


def minimal_path(plane: DigitalPlane, p: int, q: int) -> Fence:
    """Minimal curves around a shortest fence from ``p`` to ``q`` in the inner plane."""
    space = plane.space
    route = shortest_path(space, p, q, plane.inner_points)
    if route is None:
        raise CurveError("centres are not connected in the inner plane")
    curves = tuple(minimal_curve(plane, x) for x in route)
    # a larger centre has the smaller adjacency curve
    dirs = tuple(LEQ if space.leq[b, a] else GEQ for a, b in zip(route, route[1:]))
    return Fence(curves, dirs)


def morph(a: JordanCurve, b: JordanCurve) -> Fence:
    """A fence of pairwise comparable curves from ``a`` to ``b``."""
    if a.plane != b.plane:
        raise CurveError("curves live in different planes")
    if a == b:
        return Fence((a,), ())
    down_a, _ = minimalize(a)
    down_b, _ = minimalize(b)
    p = next(iter(down_a.curves[-1].interior))
    q = next(iter(down_b.curves[-1].interior))
    fence = down_a + minimal_path(a.plane, p, q) + down_b.reversed()
    return fence.cancel_backtracks()


def attachment_components(curve: JordanCurve, q: int) -> list[frozenset]:
    space = curve.plane.space
    return components(space, space.neighbours[q] & curve.point_set)
