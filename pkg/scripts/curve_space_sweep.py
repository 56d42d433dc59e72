"""Tabulate curve-space statistics for square Khalimsky planes.

    python scripts/curve_space_sweep.py --max-side 5
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass

from jordanspace import DigitalPlane, build_poset, space_report


@dataclass
class SweepConfig:
    min_side: int = 3
    max_side: int = 5
    parities: tuple[int, ...] = (0, 1)


def sweep(cfg: SweepConfig) -> list[dict]:
    rows = []
    for side in range(cfg.min_side, cfg.max_side + 1):
        for parity in cfg.parities:
            plane = DigitalPlane(side, side, x_closed_parity=parity, y_closed_parity=parity)
            start = time.perf_counter()
            rep = space_report(build_poset(plane))
            rep.update(side=side, parity=parity, seconds=round(time.perf_counter() - start, 2))
            rows.append(rep)
    return rows


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--min-side", type=int, default=3)
    parser.add_argument("--max-side", type=int, default=5)
    args = parser.parse_args()
    cfg = SweepConfig(args.min_side, args.max_side)
    print(json.dumps(asdict(cfg)))
    for row in sweep(cfg):
        print(json.dumps(row))


if __name__ == "__main__":
    main()
