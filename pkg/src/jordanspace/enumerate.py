"""Enumeration of Jordan curves and of simple cycles in square grids."""

from __future__ import annotations

from collections import defaultdict

from .jordan import JordanCurve, canonical_cycle
from .planes import DigitalPlane

MAX_ENUM_SIDE = 12


class EnumerationLimit(ValueError):
    """Plane too large for exhaustive enumeration."""


def chordless_cycles(neighbours, n: int, min_length: int = 4) -> list[tuple[int, ...]]:
    """Every induced cycle of length at least ``min_length``, each once.

    A cycle is rooted at its smallest vertex and walked so that its second
    vertex is smaller than its last.
    """
    found = []
    for root in range(n):
        higher = [v for v in sorted(neighbours[root]) if v > root]
        for first in higher:
            path = [root, first]
            # blocked[v] counts path vertices (other than the root) adjacent to v
            blocked = defaultdict(int)
            for v in neighbours[first]:
                blocked[v] += 1
            on_path = {root, first}
            _extend(neighbours, root, path, on_path, blocked, found, min_length)
    return found


def _extend(neighbours, root, path, on_path, blocked, found, min_length):
    tail = path[-1]
    for v in sorted(neighbours[tail]):
        if v <= root or v in on_path:
            continue
        # v may touch only the tail among non-root path vertices
        if blocked[v] != 1:
            continue
        closes = root in neighbours[v]
        if closes:
            if len(path) + 1 >= min_length and path[1] < v:
                found.append(tuple(path + [v]))
            continue
        path.append(v)
        on_path.add(v)
        for w in neighbours[v]:
            blocked[w] += 1
        _extend(neighbours, root, path, on_path, blocked, found, min_length)
        for w in neighbours[v]:
            blocked[w] -= 1
        on_path.discard(v)
        path.pop()


def enumerate_curves(plane: DigitalPlane) -> list[JordanCurve]:
    """All Jordan curves of ``plane`` in canonical form, sorted."""
    if plane.width > MAX_ENUM_SIDE or plane.height > MAX_ENUM_SIDE:
        raise EnumerationLimit(f"enumeration is capped at {MAX_ENUM_SIDE}x{MAX_ENUM_SIDE}")
    nb = plane.space.neighbours
    cycles = chordless_cycles(nb, len(plane))
    curves = sorted({canonical_cycle(c) for c in cycles})
    return [JordanCurve(plane, c) for c in curves]


def count_3xn(n: int, endpoint_kind: str = "closed", long_side_parity: int = 0) -> int:
    """Number of curves in the plane with a 3-point side and an ``n``-point side."""
    plane = DigitalPlane(3, n, x_closed_parity=0 if endpoint_kind == "closed" else 1, y_closed_parity=long_side_parity)
    return len(enumerate_curves(plane))


def count_grid_cycles(n: int) -> int:
    """Simple cycles in the grid graph with ``(n+1) x (n+1)`` vertices.

    Row-by-row transfer over vertices.  The state records, for each column,
    which dangling strand (if any) runs down into the next row, plus the
    strand running right from the last processed vertex.  Labels of strands
    are normalised so equal connectivity gives equal states.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    side = n + 1
    total = 0
    # state: (down labels per column, right label); 0 means no strand
    states = {((0,) * side, 0): 1}
    for r in range(side):
        for c in range(side):
            nxt: dict = defaultdict(int)
            for (down, right), ways in states.items():
                up = down[c]
                left = right if c > 0 else 0
                can_right = c + 1 < side
                can_down = r + 1 < side
                base = list(down)
                base[c] = 0
                if up and left:
                    if up == left:
                        # closing the only loop; everything else must be empty
                        if not any(base):
                            total += ways
                        continue
                    merged = [left if x == up else x for x in base]
                    _add(nxt, merged, 0, ways)
                elif up or left:
                    lab = up or left
                    if can_down:
                        b = list(base)
                        b[c] = lab
                        _add(nxt, b, 0, ways)
                    if can_right:
                        _add(nxt, list(base), lab, ways)
                else:
                    _add(nxt, list(base), 0, ways)
                    if can_down and can_right:
                        b = list(base)
                        fresh = max(b + [0]) + 1 + side
                        b[c] = fresh
                        _add(nxt, b, fresh, ways)
            states = nxt
        # a strand pointing right past the last column cannot exist
        states = {k: v for k, v in states.items() if k[1] == 0}
    return total


def _add(table, down, right, ways):
    relabel: dict[int, int] = {}
    out = []
    for x in down + [right]:
        if x and x not in relabel:
            relabel[x] = len(relabel) + 1
        out.append(relabel.get(x, 0))
    table[(tuple(out[:-1]), out[-1])] += ways
