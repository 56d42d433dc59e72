"""Finite T0 spaces stored as partial orders.

A point ``x`` is below ``y`` when the minimal open set of ``x`` is contained
in that of ``y``.  Down-sets are therefore the minimal open sets and up-sets
are closures.  Points are dense integer ids; the order is a boolean matrix
with ``leq[x, y]`` true iff ``x <= y``.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

MAX_POINTS = 4096


class OrderError(ValueError):
    """Raised when a relation is not a partial order."""


@dataclass(frozen=True, eq=False)
class FiniteSpace:
    leq: np.ndarray
    labels: tuple = field(default=())

    def __post_init__(self):
        leq = np.asarray(self.leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise OrderError("order matrix must be square")
        if leq.shape[0] > MAX_POINTS:
            raise OrderError(f"at most {MAX_POINTS} points supported")
        leq = leq.copy()
        leq.setflags(write=False)
        object.__setattr__(self, "leq", leq)
        if self.labels and len(self.labels) != leq.shape[0]:
            raise OrderError("one label per point required")

    @classmethod
    def from_relation(cls, n: int, pairs: Iterable[tuple[int, int]], labels: Sequence = ()) -> "FiniteSpace":
        """Build from generating pairs ``(x, y)`` meaning ``x <= y``; closes transitively."""
        m = np.eye(n, dtype=bool)
        for x, y in pairs:
            m[x, y] = True
        m = transitive_closure(m)
        space = cls(m, tuple(labels))
        space.validate()
        return space

    def __len__(self) -> int:
        return self.leq.shape[0]

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteSpace) and np.array_equal(self.leq, other.leq)

    def __hash__(self) -> int:
        return hash(self.leq.tobytes())

    @property
    def points(self) -> range:
        return range(len(self))

    def label(self, x: int):
        return self.labels[x] if self.labels else x

    def validate(self) -> None:
        m = self.leq
        if not m.diagonal().all():
            raise OrderError("relation is not reflexive")
        if (m & m.T & ~np.eye(len(self), dtype=bool)).any():
            raise OrderError("relation is not antisymmetric")
        if not np.array_equal(transitive_closure(m), m):
            raise OrderError("relation is not transitive")

    @cached_property
    def comparable(self) -> np.ndarray:
        """Symmetric adjacency: comparable and distinct."""
        return (self.leq | self.leq.T) & ~np.eye(len(self), dtype=bool)

    @cached_property
    def neighbours(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(np.flatnonzero(row).tolist()) for row in self.comparable)

    def down_set(self, x: int) -> frozenset:
        return frozenset(np.flatnonzero(self.leq[:, x]).tolist())

    def up_set(self, x: int) -> frozenset:
        return frozenset(np.flatnonzero(self.leq[x, :]).tolist())

    def adjacency(self, x: int) -> frozenset:
        """Points comparable to ``x`` other than ``x`` itself."""
        return self.neighbours[x]

    def is_open_point(self, x: int) -> bool:
        return int(self.leq[:, x].sum()) == 1

    def is_closed_point(self, x: int) -> bool:
        return int(self.leq[x, :].sum()) == 1

    def is_open_set(self, members: Iterable[int]) -> bool:
        s = set(members)
        return all(self.down_set(x) <= s for x in s)

    def is_closed_set(self, members: Iterable[int]) -> bool:
        s = set(members)
        return all(self.up_set(x) <= s for x in s)

    def subspace(self, members: Iterable[int]) -> "Subspace":
        return Subspace(self, tuple(sorted(set(members))))


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subset of a parent space; the induced order is built on demand."""

    parent: FiniteSpace
    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x) -> bool:
        return x in self.member_set

    @cached_property
    def member_set(self) -> frozenset:
        return frozenset(self.members)

    @cached_property
    def index(self) -> dict[int, int]:
        return {x: k for k, x in enumerate(self.members)}

    @cached_property
    def space(self) -> FiniteSpace:
        idx = np.array(self.members, dtype=int)
        leq = self.parent.leq[np.ix_(idx, idx)] if len(idx) else np.zeros((0, 0), dtype=bool)
        labels = tuple(self.parent.label(x) for x in self.members)
        return FiniteSpace(leq, labels)

    def lift(self, local: Iterable[int]) -> frozenset:
        return frozenset(self.members[k] for k in local)


def transitive_closure(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=bool) | np.eye(len(m), dtype=bool)
    while True:
        f = m.astype(np.float32)
        nxt = (f @ f) > 0
        if np.array_equal(nxt, m):
            return m
        m = nxt


def transitive_reduction(leq: np.ndarray) -> np.ndarray:
    """Cover relation: ``cov[x, y]`` iff ``x < y`` with nothing strictly between."""
    strict = np.asarray(leq, dtype=bool) & ~np.eye(leq.shape[0], dtype=bool)
    s = strict.astype(np.int32)
    through = (s @ s) > 0
    return strict & ~through


def dual(space: FiniteSpace) -> FiniteSpace:
    return FiniteSpace(space.leq.T, space.labels)


def product(a: FiniteSpace, b: FiniteSpace) -> FiniteSpace:
    """Product order; the point ``(x, y)`` gets id ``x * len(b) + y``."""
    leq = np.kron(a.leq.astype(np.uint8), b.leq.astype(np.uint8)) > 0
    labels = tuple((a.label(x), b.label(y)) for x in a.points for y in b.points)
    return FiniteSpace(leq, labels)


def _as_space(space) -> FiniteSpace:
    return space.space if isinstance(space, Subspace) else space


def components(space, members: Iterable[int] | None = None) -> list[frozenset]:
    """Connected components of ``members`` (default: all points) under comparability."""
    space = _as_space(space)
    todo = set(space.points if members is None else members)
    out = []
    while todo:
        seed = min(todo)
        todo.discard(seed)
        comp = {seed}
        queue = deque([seed])
        while queue:
            x = queue.popleft()
            for y in space.neighbours[x]:
                if y in todo:
                    todo.discard(y)
                    comp.add(y)
                    queue.append(y)
        out.append(frozenset(comp))
    out.sort(key=min)
    return out


def is_connected(space, members: Iterable[int] | None = None) -> bool:
    return len(components(space, members)) == 1


def _maximal(leq: np.ndarray, members: np.ndarray) -> np.ndarray:
    sub = leq[np.ix_(members, members)]
    strictly_above = sub & ~np.eye(len(members), dtype=bool)
    return members[~strictly_above.any(axis=1)]


def _minimal(leq: np.ndarray, members: np.ndarray) -> np.ndarray:
    sub = leq[np.ix_(members, members)]
    strictly_below = sub & ~np.eye(len(members), dtype=bool)
    return members[~strictly_below.any(axis=0)]


def _is_beat(leq: np.ndarray, alive: np.ndarray, x: int) -> bool:
    below = np.flatnonzero(alive & leq[:, x])
    below = below[below != x]
    if len(below) and len(_maximal(leq, below)) == 1:
        return True
    above = np.flatnonzero(alive & leq[x, :])
    above = above[above != x]
    return bool(len(above)) and len(_minimal(leq, above)) == 1


def beat_points(space) -> list[int]:
    space = _as_space(space)
    alive = np.ones(len(space), dtype=bool)
    return [x for x in space.points if _is_beat(space.leq, alive, x)]


def core(space, rng: random.Random | None = None) -> frozenset:
    """Remove beat points until none remain.

    Each pass scans in ascending id order, or in an order shuffled by ``rng``.
    Returns the ids of the surviving points.
    """
    space = _as_space(space)
    alive = np.ones(len(space), dtype=bool)
    changed = True
    while changed:
        changed = False
        order = list(np.flatnonzero(alive))
        if rng is not None:
            rng.shuffle(order)
        for x in order:
            if alive.sum() > 1 and _is_beat(space.leq, alive, x):
                alive[x] = False
                changed = True
    return frozenset(np.flatnonzero(alive).tolist())


def heights(space, members: Iterable[int] | None = None) -> dict[int, int]:
    """Length of the longest chain ending at each point, within ``members``."""
    space = _as_space(space)
    pts = sorted(space.points if members is None else members)
    order = sorted(pts, key=lambda x: int(space.leq[:, x].sum()))
    h: dict[int, int] = {}
    for x in order:
        below = [y for y in pts if y != x and space.leq[y, x]]
        h[x] = 1 + max((h[y] for y in below), default=-1)
    return h


def is_contractible(space) -> bool:
    space = _as_space(space)
    return len(space) > 0 and len(core(space)) == 1


def is_weak_point(space, x: int) -> bool:
    """``x`` is weak when its punctured down-set or punctured up-set is contractible."""
    space = _as_space(space)
    down = space.down_set(x) - {x}
    up = space.up_set(x) - {x}
    return any(s and is_contractible(space.subspace(s)) for s in (down, up))


def shortest_path(space, x: int, y: int, members: Iterable[int] | None = None) -> list[int] | None:
    """A shortest fence from ``x`` to ``y`` inside ``members``, ties broken by smallest id."""
    space = _as_space(space)
    allowed = set(space.points if members is None else members)
    if x not in allowed or y not in allowed:
        raise ValueError("endpoints must lie in the subspace")
    prev = {x: None}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        if u == y:
            break
        for v in sorted(space.neighbours[u]):
            if v in allowed and v not in prev:
                prev[v] = u
                queue.append(v)
    if y not in prev:
        return None
    path = [y]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path[::-1]
