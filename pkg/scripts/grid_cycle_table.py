"""Print simple-cycle counts of square grid graphs, with the curve counts of 3 x n planes."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from jordanspace import count_3xn, count_grid_cycles


@dataclass
class TableConfig:
    max_grid: int = 6
    max_strip: int = 12


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-grid", type=int, default=6)
    parser.add_argument("--max-strip", type=int, default=12)
    args = parser.parse_args()
    cfg = TableConfig(args.max_grid, args.max_strip)
    print("n  grid cycles")
    for n in range(cfg.max_grid + 1):
        print(f"{n:<2} {count_grid_cycles(n)}")
    print("\nn  3xn closed  3xn open  (n-1)(n-2)/2")
    for n in range(3, cfg.max_strip + 1):
        print(f"{n:<2} {count_3xn(n, 'closed'):<11} {count_3xn(n, 'open'):<9} {(n - 1) * (n - 2) // 2}")


if __name__ == "__main__":
    main()
