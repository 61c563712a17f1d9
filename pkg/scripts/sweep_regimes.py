"""Normalised shadow bound and best construction across densities, for several n.

    python scripts/sweep_regimes.py --ns 100 1000 --step 0.005 --out-dir sweeps/

Writes one CSV per n (same columns as ``shadowbound sweep``) and prints the
largest gap between construction and bound, in units of n.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

from shadowbound.cli import sweep_rows


@dataclass
class SweepConfig:
    ns: list[int] = field(default_factory=lambda: [100, 1000])
    d_from: str = "0.25"
    d_to: str = "0.99"
    step: str = "0.01"
    out_dir: str = "sweeps"


def run(cfg: SweepConfig) -> dict[int, float]:
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    worst = {}
    for n in cfg.ns:
        pairs = math.comb(n, 2)
        rows = list(sweep_rows(n, cfg.d_from, cfg.d_to, cfg.step))
        with open(out / f"sweep_n{n}.csv", "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["d", "regime", "bound/C(n,2)", "construction_size/C(n,2)", "construction"])
            for d, regime, b, c, kind in rows:
                w.writerow([f"{d:.12g}", regime, f"{b:.12g}", "" if c is None else f"{c:.12g}", kind])
        gaps = [(c - b) * pairs / n for _, _, b, c, _ in rows if c is not None]
        worst[n] = max(gaps) if gaps else math.nan
    return worst


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--ns", type=int, nargs="+", default=SweepConfig().ns)
    p.add_argument("--d-from", default=SweepConfig.d_from)
    p.add_argument("--d-to", default=SweepConfig.d_to)
    p.add_argument("--step", default=SweepConfig.step)
    p.add_argument("--out-dir", default=SweepConfig.out_dir)
    cfg = SweepConfig(**vars(p.parse_args(argv)))
    print(cfg, file=sys.stderr)
    for n, gap in run(cfg).items():
        print(f"n={n}: max (construction - bound) = {gap:.4f} n")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
