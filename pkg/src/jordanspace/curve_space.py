"""The finite space of all Jordan curves of a plane under the pointwise order."""

from __future__ import annotations

import hashlib
import random
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx
import numpy as np

from .enumerate import enumerate_curves
from .homotopy import curve_leq
from .jordan import JordanCurve, cyclic_order, minimal_curve
from .planes import DigitalPlane
from .poset import (
    FiniteSpace,
    components,
    core,
    dual,
    heights,
    is_contractible,
    transitive_closure,
    transitive_reduction,
)


@dataclass
class CurveSpace:
    plane: DigitalPlane
    curves: list[JordanCurve]
    raw: np.ndarray = field(repr=False)

    @cached_property
    def leq(self) -> np.ndarray:
        return transitive_closure(self.raw)

    @cached_property
    def space(self) -> FiniteSpace:
        return FiniteSpace(self.leq, tuple(range(len(self.curves))))

    @cached_property
    def covers(self) -> np.ndarray:
        return transitive_reduction(self.leq)

    @property
    def closure_added(self) -> int:
        return int((self.leq & ~self.raw).sum())

    def index(self, curve: JordanCurve) -> int:
        return self._index[curve]

    @cached_property
    def _index(self) -> dict:
        return {c: k for k, c in enumerate(self.curves)}

    def maximal(self) -> list[int]:
        return [k for k in range(len(self.curves)) if self.leq[k].sum() == 1]

    def minimal(self) -> list[int]:
        return [k for k in range(len(self.curves)) if self.leq[:, k].sum() == 1]

    def lower_covers(self, k: int) -> list[int]:
        return np.flatnonzero(self.covers[:, k]).tolist()

    def cover_pairs(self) -> list[tuple[int, int]]:
        """``(upper, lower)`` pairs."""
        lo, hi = np.nonzero(self.covers)
        return sorted(zip(hi.tolist(), lo.tolist()))


def build_poset(plane: DigitalPlane, curves: list[JordanCurve] | None = None) -> CurveSpace:
    if curves is None:
        curves = enumerate_curves(plane)
    n = len(curves)
    raw = np.eye(n, dtype=bool)
    for a in range(n):
        for b in range(n):
            if a != b and curve_leq(curves[a], curves[b]):
                raw[a, b] = True
    return CurveSpace(plane, curves, raw)


def curve_id(curve: JordanCurve) -> str:
    """Stable short identifier from the canonical coordinate sequence."""
    text = ";".join(f"{i},{j}" for i, j in curve.coords())
    return "c" + hashlib.sha1(text.encode()).hexdigest()[:10]


def space_report(cs: CurveSpace, seeds: int = 5) -> dict:
    space = cs.space
    h = heights(space)
    cores = [core(space, random.Random(s)) for s in range(seeds)]
    core_shapes = {(len(c), tuple(sorted(Counter(heights(space, c).values()).items()))) for c in cores}
    n = len(cs.curves)
    return {
        "elements": n,
        "covers": int(cs.covers.sum()),
        "maximal": len(cs.maximal()),
        "minimal": len(cs.minimal()),
        "height": max(h.values(), default=0),
        "connected": len(components(space)) == 1 if n else False,
        "contractible": is_contractible(space),
        "core_size": len(core(space)),
        "core_order_independent": len(core_shapes) == 1,
        "closure_added": cs.closure_added,
        "antisymmetric": not bool((cs.raw & cs.raw.T & ~np.eye(n, dtype=bool)).any()),
    }


def minimal_curve_space(plane: DigitalPlane) -> dict:
    """Compare the order on adjacency curves with the dual order of their centres."""
    centres = list(plane.inner_points)
    curves = [minimal_curve(plane, p) for p in centres]
    raw = np.array([[curve_leq(a, b) for b in curves] for a in curves], dtype=bool)
    inner_dual = dual(plane.inner_plane.space).leq
    return {
        "elements": len(curves),
        "raw_matches_dual": bool(np.array_equal(raw, inner_dual)),
        "closure_matches_dual": bool(np.array_equal(transitive_closure(raw), inner_dual)),
        "interiors_are_centres": all(c.interior == {p} for c, p in zip(curves, centres)),
    }


def comparability_betti(plane: DigitalPlane) -> dict:
    """First Betti number of the plane's comparability graph, two ways."""
    g = nx.Graph()
    g.add_nodes_from(range(len(plane)))
    for x in range(len(plane)):
        for y in plane.space.neighbours[x]:
            if x < y:
                g.add_edge(x, y)
    parts = nx.number_connected_components(g)
    return {
        "vertices": g.number_of_nodes(),
        "edges": g.number_of_edges(),
        "cycle_basis": len(nx.cycle_basis(g)),
        "formula": g.number_of_edges() - g.number_of_nodes() + parts,
    }


def to_dot(cs: CurveSpace) -> str:
    lines = ["digraph curves {", "  rankdir=TB;"]
    for k, c in enumerate(cs.curves):
        lines.append(f'  {curve_id(c)} [label="{k}"];')
    for hi, lo in cs.cover_pairs():
        lines.append(f"  {curve_id(cs.curves[hi])} -> {curve_id(cs.curves[lo])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(cs: CurveSpace) -> dict:
    plane = cs.plane
    leq = np.argwhere(cs.leq)
    return {
        "plane": plane.to_json(),
        "curves": [[list(plane.coord(p)) for p in cyclic_order(c)] for c in cs.curves],
        "leq_pairs": [[int(a), int(b)] for a, b in leq if a != b],
        "covers": [[hi, lo] for hi, lo in cs.cover_pairs()],
    }


def poset_json(space: FiniteSpace) -> dict:
    return {"points": list(space.points), "leq": [[int(a), int(b)] for a, b in np.argwhere(space.leq)]}


def find_curve(cs: CurveSpace, coords) -> int:
    return cs.index(JordanCurve.from_coords(cs.plane, coords))
