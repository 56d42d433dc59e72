"""COTS, Khalimsky planes and Marcus-Wyse planes.

Coordinates are ``(i, j)`` with ``i`` the column and ``j`` the row, origin at
the lower left.  The point ``(i, j)`` has id ``i * height + j`` so ids sort
lexicographically by coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property
from typing import Iterator

import numpy as np

from .poset import FiniteSpace, Subspace, product

KHALIMSKY = "khalimsky"
MARCUS_WYSE = "marcus_wyse"
TOPOLOGIES = (KHALIMSKY, MARCUS_WYSE)

CLOSED, OPEN, MIXED = "closed", "open", "mixed"
MAX_SIDE = 64


def make_cots(length: int, endpoint_kind: str = CLOSED) -> FiniteSpace:
    """A COTS of ``length`` points whose first point is ``endpoint_kind``."""
    if length < 1:
        raise ValueError("a COTS needs at least one point")
    if endpoint_kind not in (CLOSED, OPEN):
        raise ValueError(f"endpoint kind must be {CLOSED!r} or {OPEN!r}")
    first_closed = endpoint_kind == CLOSED
    closed = [(k % 2 == 0) == first_closed for k in range(length)]
    leq = np.eye(length, dtype=bool)
    for a in range(length - 1):
        b = a + 1
        if closed[b]:
            leq[a, b] = True
        else:
            leq[b, a] = True
    return FiniteSpace(leq, tuple(range(length)))


@dataclass(frozen=True)
class DigitalPlane:
    width: int
    height: int
    topology: str = KHALIMSKY
    x_closed_parity: int = 0
    y_closed_parity: int = 0
    mw_closed_parity: int = 0

    def __post_init__(self):
        if self.topology not in TOPOLOGIES:
            raise ValueError(f"unknown topology {self.topology!r}")
        if not (1 <= self.width <= MAX_SIDE and 1 <= self.height <= MAX_SIDE):
            raise ValueError(f"sides must lie in 1..{MAX_SIDE}")
        if self.width * self.height > 4096:
            raise ValueError("at most 4096 points supported")
        for p in (self.x_closed_parity, self.y_closed_parity, self.mw_closed_parity):
            if p not in (0, 1):
                raise ValueError("parities must be 0 or 1")

    # -- coordinates -------------------------------------------------------
    def __len__(self) -> int:
        return self.width * self.height

    def point(self, i: int, j: int) -> int:
        if not self.contains(i, j):
            raise ValueError(f"({i}, {j}) lies outside the {self.width}x{self.height} plane")
        return i * self.height + j

    def coord(self, p: int) -> tuple[int, int]:
        return divmod(p, self.height)

    def contains(self, i: int, j: int) -> bool:
        return 0 <= i < self.width and 0 <= j < self.height

    def coords(self) -> Iterator[tuple[int, int]]:
        for i in range(self.width):
            for j in range(self.height):
                yield i, j

    # -- structure ---------------------------------------------------------
    @cached_property
    def space(self) -> FiniteSpace:
        if self.topology == KHALIMSKY:
            xs = make_cots(self.width, CLOSED if self.x_closed_parity == 0 else OPEN)
            ys = make_cots(self.height, CLOSED if self.y_closed_parity == 0 else OPEN)
            s = product(xs, ys)
            return FiniteSpace(s.leq, tuple(self.coords()))
        leq = np.eye(len(self), dtype=bool)
        for i, j in self.coords():
            if not self._mw_closed(i, j):
                continue
            c = self.point(i, j)
            for a, b in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
                if self.contains(a, b):
                    leq[self.point(a, b), c] = True
        return FiniteSpace(leq, tuple(self.coords()))

    def _mw_closed(self, i: int, j: int) -> bool:
        return (i + j) % 2 == self.mw_closed_parity

    def classify(self, p: int) -> str:
        i, j = self.coord(p)
        if self.topology == MARCUS_WYSE:
            return CLOSED if self._mw_closed(i, j) else OPEN
        xc = i % 2 == self.x_closed_parity
        yc = j % 2 == self.y_closed_parity
        if xc and yc:
            return CLOSED
        if not xc and not yc:
            return OPEN
        return MIXED

    def is_pure(self, p: int) -> bool:
        return self.classify(p) != MIXED

    def adjacency(self, p: int) -> frozenset:
        return self.space.neighbours[p]

    @cached_property
    def raw_border(self) -> frozenset:
        return frozenset(
            self.point(i, j)
            for i, j in self.coords()
            if i in (0, self.width - 1) or j in (0, self.height - 1)
        )

    @cached_property
    def inner_points(self) -> tuple[int, ...]:
        return tuple(p for p in range(len(self)) if p not in self.raw_border)

    @cached_property
    def inner_plane(self) -> Subspace:
        return self.space.subspace(self.inner_points)

    def perimeter(self) -> list[int]:
        """Raw border walked clockwise from the origin."""
        w, h = self.width, self.height
        if w < 2 or h < 2:
            raise ValueError("the border needs both sides at least 2")
        walk = [(0, j) for j in range(h)]
        walk += [(i, h - 1) for i in range(1, w)]
        walk += [(w - 1, j) for j in range(h - 2, -1, -1)]
        walk += [(i, 0) for i in range(w - 2, 0, -1)]
        return [self.point(i, j) for i, j in walk]

    def adjusted_border(self) -> list[int]:
        """Raw border minus its mixed corners, in clockwise order."""
        corners = {self.point(i, j) for i in (0, self.width - 1) for j in (0, self.height - 1)}
        return [p for p in self.perimeter() if not (p in corners and self.classify(p) == MIXED)]

    def dual(self) -> "DigitalPlane":
        return replace(
            self,
            x_closed_parity=1 - self.x_closed_parity,
            y_closed_parity=1 - self.y_closed_parity,
            mw_closed_parity=1 - self.mw_closed_parity,
        )

    def letter(self, p: int) -> str:
        return {CLOSED: "C", OPEN: "O", MIXED: "M"}[self.classify(p)]

    def render(self) -> str:
        """ASCII grid, top row printed first."""
        rows = []
        for j in range(self.height - 1, -1, -1):
            rows.append("".join(self.letter(self.point(i, j)) for i in range(self.width)))
        return "\n".join(rows)

    def to_json(self) -> dict:
        return {
            "width": self.width,
            "height": self.height,
            "topology": self.topology,
            "x_closed_parity": self.x_closed_parity,
            "y_closed_parity": self.y_closed_parity,
            "mw_closed_parity": self.mw_closed_parity,
        }

    @classmethod
    def from_json(cls, data: dict) -> "DigitalPlane":
        keys = ("width", "height", "topology", "x_closed_parity", "y_closed_parity", "mw_closed_parity")
        missing = [k for k in keys if k not in data]
        if missing:
            raise ValueError(f"plane JSON is missing {', '.join(missing)}")
        return cls(**{k: data[k] for k in keys})


def make_khalimsky_plane(width: int, height: int, x_closed_parity: int = 0, y_closed_parity: int = 0) -> DigitalPlane:
    return DigitalPlane(width, height, KHALIMSKY, x_closed_parity, y_closed_parity)


def make_marcus_wyse_plane(width: int, height: int, parity: int = 0) -> DigitalPlane:
    return DigitalPlane(width, height, MARCUS_WYSE, mw_closed_parity=parity)
