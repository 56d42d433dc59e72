"""Fences, arcs and the path metric of a finite space.

Distance is the fewest comparability steps between two points, optionally
inside a subset.  Unreachable pairs have distance ``math.inf``.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Sequence

import numpy as np

from .poset import FiniteSpace, Subspace

GEODESIC_CAP = 100_000


class GeodesicOverflow(RuntimeError):
    """More geodesics than the enumeration cap."""


def _space(obj) -> FiniteSpace:
    if isinstance(obj, FiniteSpace):
        return obj
    if isinstance(obj, Subspace):
        return obj.parent
    return obj.space


def _allowed(space: FiniteSpace, within) -> set[int]:
    if within is None:
        return set(space.points)
    if isinstance(within, Subspace):
        return set(within.members)
    return set(within)


def bfs_distances(space, source: int, within: Iterable[int] | None = None) -> dict[int, int]:
    space = _space(space)
    allowed = _allowed(space, within)
    if source not in allowed:
        raise ValueError(f"point {source} is not in the subspace")
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in space.neighbours[u]:
            if v in allowed and v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def distance(space, x: int, y: int, within: Iterable[int] | None = None) -> float:
    space = _space(space)
    allowed = _allowed(space, within)
    if y not in allowed:
        raise ValueError(f"point {y} is not in the subspace")
    return bfs_distances(space, x, allowed).get(y, math.inf)


def distance_matrix(space, within: Sequence[int] | None = None) -> tuple[list[int], np.ndarray]:
    """Pairwise distances over ``within`` (sorted); returns ``(members, matrix)``."""
    space = _space(space)
    members = sorted(_allowed(space, within))
    index = {x: k for k, x in enumerate(members)}
    d = np.full((len(members), len(members)), math.inf)
    for x in members:
        for y, n in bfs_distances(space, x, members).items():
            d[index[x], index[y]] = n
    return members, d


def point_set_distance(space, x: int, targets: Iterable[int], within=None) -> float:
    """Largest distance from ``x`` to a point of ``targets``."""
    space = _space(space)
    dist = bfs_distances(space, x, within)
    return max((dist.get(a, math.inf) for a in targets), default=0)


def set_distance(space, a: Iterable[int], b: Iterable[int], within=None) -> float:
    a, b = list(a), list(b)
    if not a or not b:
        raise ValueError("set distance needs nonempty sets")
    ab = max(point_set_distance(space, x, b, within) for x in a)
    ba = max(point_set_distance(space, y, a, within) for y in b)
    return max(ab, ba)


def sphere(space, x: int, n: int, within=None) -> frozenset:
    return frozenset(y for y, d in bfs_distances(space, x, within).items() if d == n)


def disk(space, x: int, n: int, within=None) -> frozenset:
    return frozenset(y for y, d in bfs_distances(space, x, within).items() if d <= n)


def diameter(space, within=None) -> float:
    space = _space(space)
    members = sorted(_allowed(space, within))
    best = 0
    for x in members:
        dist = bfs_distances(space, x, members)
        if len(dist) < len(members):
            return math.inf
        best = max(best, max(dist.values()))
    return best


def geodesics(space, x: int, y: int, within=None, cap: int = GEODESIC_CAP) -> list[list[int]]:
    """All shortest fences from ``x`` to ``y``, sorted; each is an arc."""
    space = _space(space)
    allowed = _allowed(space, within)
    if x not in allowed or y not in allowed:
        raise ValueError("endpoints must lie in the subspace")
    to_y = bfs_distances(space, y, allowed)
    if x not in to_y:
        return []
    out: list[list[int]] = []

    def walk(path: list[int]) -> None:
        u = path[-1]
        if u == y:
            if len(out) >= cap:
                raise GeodesicOverflow(f"more than {cap} geodesics")
            out.append(list(path))
            return
        for v in sorted(space.neighbours[u]):
            if to_y.get(v) == to_y[u] - 1:
                path.append(v)
                walk(path)
                path.pop()

    walk([x])
    for g in out:
        assert is_cots_arc(space, g), "a shortest fence must be an arc"
    return out


def is_cots_path(space, seq: Sequence[int]) -> bool:
    """Consecutive points are equal or comparable."""
    space = _space(space)
    return len(seq) > 0 and all(a == b or b in space.neighbours[a] for a, b in zip(seq, seq[1:]))


def is_cots_arc(space, seq: Sequence[int]) -> bool:
    """Distinct points, consecutive ones comparable, no other pair comparable."""
    space = _space(space)
    n = len(seq)
    if n == 0 or len(set(seq)) != n:
        return False
    for a in range(n):
        for b in range(a + 1, n):
            if (seq[b] in space.neighbours[seq[a]]) != (b == a + 1):
                return False
    return True


def extract_arc(space, seq: Sequence[int]) -> list[int]:
    """Shorten a path to an arc with the same endpoints using its own points."""
    space = _space(space)
    if not is_cots_path(space, seq):
        raise ValueError("input is not a path")
    c = list(seq)
    # erase revisits first so every point occurs once
    k = 0
    while k < len(c):
        last = max(m for m in range(len(c)) if c[m] == c[k])
        c = c[: k + 1] + c[last + 1 :]
        k += 1
    while True:
        members = set(c)
        bad = None
        for i, p in enumerate(c):
            hits = len(space.neighbours[p] & members)
            if hits > (1 if i in (0, len(c) - 1) else 2):
                bad = i
                break
        if bad is None:
            return c
        adj = space.neighbours[c[bad]]
        j = max(m for m in range(bad + 1, len(c)) if c[m] in adj)
        c = c[: bad + 1] + c[j:]
