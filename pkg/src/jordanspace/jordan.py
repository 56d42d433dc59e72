"""Jordan curves in digital planes: validity, regions and structural checks."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .paths import bfs_distances
from .planes import CLOSED, KHALIMSKY, MIXED, OPEN, DigitalPlane
from .poset import FiniteSpace, components


class CurveError(ValueError):
    """Input does not describe a Jordan curve."""


def _space(obj) -> FiniteSpace:
    return obj if isinstance(obj, FiniteSpace) else obj.space


def is_jordan_curve(space, members: Iterable[int]) -> bool:
    """At least four points whose comparability graph is a single chordless cycle."""
    space = _space(space)
    s = set(members)
    if len(s) < 4:
        return False
    if any(len(space.neighbours[x] & s) != 2 for x in s):
        return False
    return len(components(space, s)) == 1


def is_arc_set(space, members: Iterable[int]) -> bool:
    """The points can be listed so as to form an arc."""
    space = _space(space)
    s = set(members)
    if not s:
        return False
    degrees = [len(space.neighbours[x] & s) for x in s]
    edges = sum(degrees) // 2
    return max(degrees) <= 2 and edges == len(s) - 1 and len(components(space, s)) == 1


def is_jordan_curve_by_arcs(space, members: Iterable[int]) -> bool:
    """Definition by deletion: removing any single point leaves an arc."""
    space = _space(space)
    s = set(members)
    return len(s) >= 4 and all(is_arc_set(space, s - {x}) for x in s)


def cycle_walk(space, members: Iterable[int]) -> list[int]:
    """The points of a cycle in walking order, starting at the smallest id."""
    space = _space(space)
    s = set(members)
    start = min(s)
    prev, cur = None, start
    order = [start]
    while True:
        nxt = min(v for v in space.neighbours[cur] & s if v != prev)
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
        if len(order) > len(s):
            raise CurveError("points do not form a single cycle")
    return order


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically smallest rotation or reflection."""
    n = len(seq)
    best = None
    for base in (list(seq), list(reversed(seq))):
        for r in range(n):
            cand = tuple(base[r:] + base[:r])
            if best is None or cand < best:
                best = cand
    return best


@dataclass(frozen=True)
class JordanCurve:
    plane: DigitalPlane
    points: tuple[int, ...]

    @classmethod
    def from_points(cls, plane: DigitalPlane, points: Iterable[int]) -> "JordanCurve":
        pts = list(points)
        if len(set(pts)) != len(pts):
            raise CurveError("repeated points")
        if not is_jordan_curve(plane.space, pts):
            raise CurveError("points are not a Jordan curve")
        return cls(plane, canonical_cycle(cycle_walk(plane.space, pts)))

    @classmethod
    def from_coords(cls, plane: DigitalPlane, coords: Iterable[Sequence[int]]) -> "JordanCurve":
        return cls.from_points(plane, [plane.point(int(i), int(j)) for i, j in coords])

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p) -> bool:
        return p in self.point_set

    @cached_property
    def point_set(self) -> frozenset:
        return frozenset(self.points)

    @cached_property
    def _regions(self) -> tuple[frozenset, frozenset]:
        space = self.plane.space
        rest = set(range(len(self.plane))) - self.point_set
        border = self.plane.raw_border
        inside, outside = set(), set()
        for comp in components(space, rest):
            (outside if comp & border else inside).update(comp)
        return frozenset(inside), frozenset(outside)

    @property
    def interior(self) -> frozenset:
        return self._regions[0]

    @property
    def exterior(self) -> frozenset:
        return self._regions[1]

    def is_minimal(self) -> bool:
        return len(self.interior) == 1

    def relatively_closed(self, p: int) -> bool:
        return self.plane.space.up_set(p) & self.point_set == {p}

    def relatively_open(self, p: int) -> bool:
        return self.plane.space.down_set(p) & self.point_set == {p}

    def coords(self) -> list[tuple[int, int]]:
        return [self.plane.coord(p) for p in self.points]

    def to_json(self) -> dict:
        return {"plane": self.plane.to_json(), "points": [list(self.plane.coord(p)) for p in cyclic_order(self)]}

    @classmethod
    def from_json(cls, data: dict) -> "JordanCurve":
        if "plane" not in data or "points" not in data:
            raise CurveError("curve JSON needs 'plane' and 'points'")
        plane = DigitalPlane.from_json(data["plane"])
        return cls.from_coords(plane, data["points"])

    def __repr__(self) -> str:
        return f"JordanCurve({self.coords()})"


def signed_area(coords: Sequence[tuple[int, int]]) -> float:
    n = len(coords)
    return 0.5 * sum(coords[k][0] * coords[(k + 1) % n][1] - coords[(k + 1) % n][0] * coords[k][1] for k in range(n))


def cyclic_order(curve: JordanCurve) -> list[int]:
    """Clockwise order starting at the lexicographically smallest point."""
    seq = list(curve.points)
    if signed_area([curve.plane.coord(p) for p in seq]) > 0:
        seq = [seq[0]] + seq[:0:-1]
    return seq


def minimal_curve(plane: DigitalPlane, p: int) -> JordanCurve:
    """The curve of all points adjacent to ``p``."""
    if plane.topology != KHALIMSKY:
        raise CurveError("adjacency sets are Jordan curves only in Khalimsky planes")
    if p in plane.raw_border:
        raise CurveError("the centre must avoid the border")
    return JordanCurve.from_points(plane, plane.adjacency(p))


def curve_components(curve: JordanCurve, members: Iterable[int]) -> list[frozenset]:
    return components(curve.plane.space, set(members) & curve.point_set)


def _arcs(curve: JordanCurve) -> Iterable[frozenset]:
    n = len(curve)
    for start in range(n):
        for length in range(1, n):
            yield frozenset(curve.points[(start + k) % n] for k in range(length))


def maxdist_points(curve: JordanCurve, p: int) -> tuple[int, frozenset]:
    """Largest interior distance from ``p`` and the points attaining it."""
    dist = bfs_distances(curve.plane.space, p, curve.interior)
    far = max(dist.values())
    return far, frozenset(q for q, d in dist.items() if d == far)


def lemma_checks(curve: JordanCurve) -> list[dict]:
    """Structural facts every Jordan curve in a Khalimsky plane should satisfy."""
    plane = curve.plane
    space = plane.space
    inside = curve.interior
    minimal = len(inside) == 1
    out: list[dict] = []

    def record(name: str, applicable: bool, holds: bool, detail: str = "") -> None:
        out.append({"name": name, "applicable": applicable, "holds": bool(holds) if applicable else True, "detail": detail})

    record("even_length", True, len(curve) % 2 == 0, f"|J|={len(curve)}")
    record(
        "alternating_kinds",
        True,
        all(curve.relatively_closed(a) != curve.relatively_closed(b) for a, b in zip(curve.points, curve.points[1:] + curve.points[:1])),
    )
    record("deletion_definition", True, is_jordan_curve_by_arcs(space, curve.points))

    khal = plane.topology == KHALIMSKY
    kinds = {plane.classify(p) for p in inside}
    record(
        "nonminimal_interior_has_pure_and_mixed",
        khal and not minimal and bool(inside),
        (CLOSED in kinds or OPEN in kinds) and MIXED in kinds,
    )

    odd_ok, odd_detail = True, ""
    pure_inside = sorted(p for p in inside if plane.is_pure(p))
    for p in pure_inside:
        for comp in curve_components(curve, space.neighbours[p]):
            if len(comp) % 2 == 0:
                odd_ok, odd_detail = False, f"point {plane.coord(p)}"
    record("pure_adjacency_components_odd", khal and not minimal, odd_ok, odd_detail)

    arcs_ok = all(
        len(curve_components(curve, c)) == len(curve_components(curve, curve.point_set - c)) for c in _arcs(curve)
    )
    record("complement_component_count", True, arcs_ok)

    far_ok, far_detail = True, ""
    if khal and inside:
        for p in pure_inside:
            far, ends = maxdist_points(curve, p)
            pure_far = any(plane.is_pure(q) for q in ends)
            for q in ends:
                touch = space.neighbours[q] & curve.point_set
                if len(curve_components(curve, touch)) != 1:
                    far_ok, far_detail = False, f"{plane.coord(p)}->{plane.coord(q)} disconnected"
                elif (plane.is_pure(q) or not pure_far) and len(touch) < 3:
                    far_ok, far_detail = False, f"{plane.coord(p)}->{plane.coord(q)} touches {len(touch)}"
    record("farthest_point_attachment", khal and bool(pure_inside), far_ok, far_detail)
    return out


def render(curve: JordanCurve) -> str:
    plane = curve.plane
    inside = curve.interior
    rows = []
    for j in range(plane.height - 1, -1, -1):
        row = []
        for i in range(plane.width):
            p = plane.point(i, j)
            row.append(plane.letter(p) if p in curve.point_set else "+" if p in inside else ".")
        rows.append("".join(row))
    return "\n".join(rows)
