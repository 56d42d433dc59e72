"""Write Hasse diagrams (DOT) and ASCII pictures of every curve for small planes."""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from pathlib import Path

from jordanspace import DigitalPlane, build_poset
from jordanspace.curve_space import curve_id, to_dot
from jordanspace.jordan import render


@dataclass
class FigureConfig:
    out_dir: Path = Path("figures")
    planes: list[DigitalPlane] = field(
        default_factory=lambda: [
            DigitalPlane(4, 4, x_closed_parity=1, y_closed_parity=0),
            DigitalPlane(5, 5, x_closed_parity=1, y_closed_parity=1),
        ]
    )


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--out-dir", type=Path, default=Path("figures"))
    cfg = FigureConfig(out_dir=parser.parse_args().out_dir)
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    for plane in cfg.planes:
        cs = build_poset(plane)
        stem = f"curves_{plane.width}x{plane.height}"
        (cfg.out_dir / f"{stem}.dot").write_text(to_dot(cs))
        pictures = [f"{k} {curve_id(c)}\n{render(c)}" for k, c in enumerate(cs.curves)]
        (cfg.out_dir / f"{stem}.txt").write_text("\n\n".join(pictures) + "\n")
        print(f"{stem}: {len(cs.curves)} curves, {len(cs.cover_pairs())} covers")


if __name__ == "__main__":
    main()
