"""Acceptance checks.  Each returns ``(passed, detail)``; ``run`` adds timing."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .curve_space import build_poset, comparability_betti, minimal_curve_space, space_report
from .enumerate import count_3xn, count_grid_cycles, enumerate_curves
from .homotopy import curve_leq, minimalize, morph
from .jordan import is_jordan_curve, is_jordan_curve_by_arcs, minimal_curve
from .paths import distance_matrix, geodesics, is_cots_arc
from .planes import CLOSED, MIXED, OPEN, DigitalPlane, make_cots, make_marcus_wyse_plane
from .poset import components, dual, product

FOUR = DigitalPlane(4, 4, x_closed_parity=1, y_closed_parity=0)
FIVE = DigitalPlane(5, 5, x_closed_parity=1, y_closed_parity=1)

_cache: dict = {}


def _poset(plane: DigitalPlane):
    if plane not in _cache:
        _cache[plane] = build_poset(plane)
    return _cache[plane]


@dataclass
class Criterion:
    number: int
    title: str
    limit: float
    check: Callable[[], tuple[bool, str]]


@dataclass
class Outcome:
    number: int
    title: str
    passed: bool
    seconds: float
    limit: float
    detail: str

    @property
    def ok(self) -> bool:
        return self.passed and self.seconds < self.limit

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        late = "" if self.seconds < self.limit else " (over time limit)"
        return f"[{tag}] {self.number:>2} {self.title}: {self.seconds:.2f}s / {self.limit:g}s{late} | {self.detail}"


def four_by_four() -> tuple[bool, str]:
    cs = _poset(FOUR)
    rep = space_report(cs)
    ok = rep["elements"] == 11 and rep["maximal"] == 1 and rep["contractible"]
    return ok, f"curves={rep['elements']} maximal={rep['maximal']} contractible={rep['contractible']}"


def five_by_five() -> tuple[bool, str]:
    cs = _poset(FIVE)
    rep = space_report(cs)
    top = cs.maximal()
    centre = minimal_curve(FIVE, FIVE.point(2, 2))
    covers = len(cs.lower_covers(top[0])) if len(top) == 1 else -1
    ok = (
        rep["elements"] == 87
        and rep["maximal"] == 1
        and rep["minimal"] == 13
        and covers == 4
        and cs.curves[top[0]] == centre
        and rep["connected"]
        and rep["contractible"]
    )
    detail = (
        f"curves={rep['elements']} maximal={rep['maximal']} minimal={rep['minimal']} "
        f"top_covers={covers} connected={rep['connected']} contractible={rep['contractible']}"
    )
    return ok, detail


def three_by_n() -> tuple[bool, str]:
    closed_ok, open_mismatch = True, []
    for n in range(3, 13):
        want = (n - 1) * (n - 2) // 2
        for lp in (0, 1):
            if count_3xn(n, "closed", lp) != want:
                closed_ok = False
            if count_3xn(n, "open", lp) != want:
                open_mismatch.append((n, lp))
    flag = f"open variant mismatches={open_mismatch}" if open_mismatch else "open variant agrees"
    return closed_ok, f"closed variant n=3..12 {'agrees' if closed_ok else 'disagrees'}; {flag}"


def metric_suite() -> tuple[bool, str]:
    plane = DigitalPlane(9, 9)
    members, d = distance_matrix(plane)
    n = len(members)
    problems = []
    if not np.isfinite(d).all():
        problems.append("disconnected")
    if not np.array_equal(d, d.T):
        problems.append("asymmetric")
    if not ((d == 0) == np.eye(n, dtype=bool)).all():
        problems.append("zero off the diagonal")
    via = (d[:, :, None] + d[None, :, :]).min(axis=1)
    if (d > via).any():
        problems.append("triangle inequality")
    coords = [plane.coord(p) for p in members]
    pure = [p for p in members if plane.is_pure(p)]
    kinds = [plane.classify(p) for p in members]
    for p in pure:
        i, j = coords[p]
        for q in members:
            k, l = coords[q]
            cheb = max(abs(k - i), abs(l - j))
            if plane.is_pure(q) and d[p, q] != cheb:
                problems.append(f"chebyshev {coords[p]} {coords[q]}")
            if cheb > d[p, q]:
                problems.append(f"ball bound {coords[p]} {coords[q]}")
        to_open = {d[p, q] for q in members if kinds[q] == OPEN}
        to_closed = {d[p, q] for q in members if kinds[q] == CLOSED}
        if to_open & to_closed:
            problems.append(f"parity {coords[p]}")
    walks = 0
    for x in members:
        for y in members:
            for g in geodesics(plane, x, y):
                walks += 1
                if len(g) != d[x, y] + 1 or not is_cots_arc(plane, g):
                    problems.append(f"geodesic {coords[x]} {coords[y]}")
                elif any(d[x, c] != k for k, c in enumerate(g)):
                    problems.append(f"geodesic distances {coords[x]} {coords[y]}")
    diagonal = 0
    for p, q in itertools.combinations(pure, 2):
        (i, j), (k, l) = coords[p], coords[q]
        if abs(k - i) == abs(l - j):
            diagonal += 1
            gs = geodesics(plane, p, q)
            if len(gs) != 1:
                problems.append(f"unique {coords[p]} {coords[q]}")
            else:
                on_line = all(abs(a - i) == abs(b - j) for a, b in (plane.coord(c) for c in gs[0]))
                if not on_line:
                    problems.append(f"off diagonal {coords[p]} {coords[q]}")
    return not problems, f"geodesics={walks} diagonal_pairs={diagonal} problems={problems[:3]}"


def shrink_suite() -> tuple[bool, str]:
    problems, steps_seen = [], 0
    for curve in enumerate_curves(FIVE):
        fence, steps = minimalize(curve)
        try:
            fence.validate()
        except AssertionError as err:
            problems.append(str(err))
        base = min(p for p in curve.interior if FIVE.is_pure(p)) if len(curve.interior) > 1 else None
        for prev, step in zip(fence.curves, steps):
            steps_seen += 1
            attach = FIVE.space.neighbours[step.removed] & prev.point_set
            if not is_jordan_curve(FIVE.space, step.curve.points):
                problems.append("invalid curve")
            if len(step.curve.interior) != len(prev.interior) - 1:
                problems.append("interior did not drop by one")
            if len(components(FIVE.space, attach)) != 1 or len(attach) % 2 == 0 or len(attach) < 3:
                problems.append(f"attachment {len(attach)}")
            if not step.weak:
                problems.append("not weak")
        last = fence.curves[-1]
        if not last.is_minimal() or (base is not None and last.interior != {base}):
            problems.append("fence does not end at the basepoint's minimal curve")
    return not problems, f"steps={steps_seen} problems={problems[:3]}"


def morph_suite() -> tuple[bool, str]:
    curves = enumerate_curves(FIVE)
    bad, longest = 0, 0
    for a in curves:
        for b in curves:
            fence = morph(a, b)
            longest = max(longest, len(fence))
            try:
                fence.validate()
                if fence.curves[0] != a or fence.curves[-1] != b:
                    raise AssertionError("endpoints")
            except AssertionError:
                bad += 1
    return bad == 0, f"pairs={len(curves) ** 2} failures={bad} longest={longest}"


def extremal_suite() -> tuple[bool, str]:
    problems = []
    for plane in (FOUR, FIVE):
        cs = _poset(plane)
        n = len(cs.curves)
        if (cs.raw & cs.raw.T & ~np.eye(n, dtype=bool)).any():
            problems.append(f"{plane.width}x{plane.height} antisymmetry")
        top, bottom = set(cs.maximal()), set(cs.minimal())
        for k, c in enumerate(cs.curves):
            kinds = {plane.classify(p) for p in c}
            if OPEN not in kinds and k not in top:
                problems.append(f"no open points but not maximal {c}")
            if CLOSED not in kinds and k not in bottom:
                problems.append(f"no closed points but not minimal {c}")
    return not problems, f"problems={problems[:3]}"


def minimal_curves_suite() -> tuple[bool, str]:
    results = []
    for n in (5, 6, 7):
        rep = minimal_curve_space(DigitalPlane(n, n))
        results.append(rep["raw_matches_dual"] and rep["closure_matches_dual"] and rep["interiors_are_centres"])
    return all(results), f"5x5,6x6,7x7 -> {results}"


def grid_cycles_suite() -> tuple[bool, str]:
    got = [count_grid_cycles(n) for n in range(5)]
    return got == [0, 1, 13, 213, 9349], f"c(0..4)={got}"


def marcus_wyse_suite() -> tuple[bool, str]:
    plane = make_marcus_wyse_plane(5, 5)
    cs = _poset(plane)
    n = len(cs.curves)
    comparable = int((cs.raw & ~np.eye(n, dtype=bool)).sum())
    connected = len(components(cs.space)) == 1
    betti = comparability_betti(plane)
    ok = n >= 2 and comparable == 0 and not connected and betti["cycle_basis"] == betti["formula"]
    return ok, f"curves={n} comparable_pairs={comparable} connected={connected} betti={betti['cycle_basis']}"


def _subset_equivalence(plane: DigitalPlane, max_size: int) -> tuple[int, int, int]:
    """Returns ``(subsets tried, curves found, disagreements)``."""
    tried = found = mismatches = 0
    pts = range(len(plane))
    for size in range(max_size + 1):
        for sub in itertools.combinations(pts, size):
            tried += 1
            cycle = is_jordan_curve(plane.space, sub)
            found += cycle
            mismatches += cycle != is_jordan_curve_by_arcs(plane.space, sub)
    return tried, found, mismatches


def definitions_suite() -> tuple[bool, str]:
    problems, found = [], []
    for plane in (DigitalPlane(4, 4), FOUR):
        tried, hits, mismatches = _subset_equivalence(plane, 12)
        found.append(hits)
        if mismatches or tried != 64839:
            problems.append(f"subset equivalence {plane}")
    curves = enumerate_curves(FIVE)
    for c in curves:
        if not is_jordan_curve_by_arcs(FIVE.space, c.points):
            problems.append("deletion definition")
        if len(c) % 2:
            problems.append("odd length")
    for plane in (FIVE, DigitalPlane(6, 6)):
        for c in enumerate_curves(plane):
            if c.point_set & plane.raw_border:
                continue
            rest = set(range(len(plane))) - c.point_set
            if len(components(plane.space, rest)) != 2:
                problems.append(f"components {c}")
    nested = 0
    for j in curves:
        hull = j.point_set | j.interior
        for k in curves:
            if k.point_set <= hull:
                nested += 1
                if not k.interior <= j.interior:
                    problems.append(f"containment {j} {k}")
    return not problems, f"4x4 curves by subsets={found} nested_pairs={nested} problems={problems[:3]}"


def duality_suite() -> tuple[bool, str]:
    checked, problems = 0, []
    kinds = (CLOSED, OPEN)
    flip = {CLOSED: OPEN, OPEN: CLOSED}
    for a, b in itertools.product(range(3, 7), repeat=2):
        for ka, kb in itertools.product(kinds, repeat=2):
            x, y = make_cots(a, ka), make_cots(b, kb)
            whole = dual(product(x, y))
            checked += 1
            if not np.array_equal(whole.leq, product(dual(x), dual(y)).leq):
                problems.append(f"product {a}x{b}")
            if not np.array_equal(whole.leq, product(make_cots(a, flip[ka]), make_cots(b, flip[kb])).leq):
                problems.append(f"swap {a}x{b}")
            plane = DigitalPlane(a, b, x_closed_parity=kinds.index(ka), y_closed_parity=kinds.index(kb))
            flipped = plane.dual()
            if not np.array_equal(dual(plane.space).leq, flipped.space.leq):
                problems.append(f"plane {a}x{b}")
            swap = {OPEN: CLOSED, CLOSED: OPEN, MIXED: MIXED}
            if any(swap[plane.classify(p)] != flipped.classify(p) for p in range(len(plane))):
                problems.append(f"classes {a}x{b}")
    return not problems, f"pairs={checked} problems={problems[:3]}"


CRITERIA = [
    Criterion(1, "4x4 curve space", 5, four_by_four),
    Criterion(2, "5x5 curve space", 60, five_by_five),
    Criterion(3, "3xn counts", 30, three_by_n),
    Criterion(4, "9x9 metric suite", 60, metric_suite),
    Criterion(5, "shrink and minimalize on 5x5", 60, shrink_suite),
    Criterion(6, "morph on all 5x5 pairs", 300, morph_suite),
    Criterion(7, "antisymmetry and extremal curves", 60, extremal_suite),
    Criterion(8, "minimal curves versus dual inner plane", 10, minimal_curves_suite),
    Criterion(9, "grid cycle counts", 60, grid_cycles_suite),
    Criterion(10, "Marcus-Wyse 5x5", 30, marcus_wyse_suite),
    Criterion(11, "curve definitions and separation", 120, definitions_suite),
    Criterion(12, "duals of products", 5, duality_suite),
]


def run(criterion: Criterion) -> Outcome:
    # time every criterion from a cold start
    _cache.clear()
    curve_leq.cache_clear()
    start = time.perf_counter()
    try:
        passed, detail = criterion.check()
    except Exception as err:  # report, do not crash the table
        passed, detail = False, f"{type(err).__name__}: {err}"
    seconds = time.perf_counter() - start
    return Outcome(criterion.number, criterion.title, passed, seconds, criterion.limit, detail)


def run_all(numbers: list[int] | None = None) -> list[Outcome]:
    return [run(c) for c in CRITERIA if numbers is None or c.number in numbers]
