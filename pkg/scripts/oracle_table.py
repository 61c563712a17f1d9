"""Exact minimum edge counts for small n next to the lower bound and the best construction.

    python scripts/oracle_table.py --max-n 8 --out oracle_table.csv
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from dataclasses import asdict, dataclass

from shadowbound.bounds import BoundParams, edge_lower_bound
from shadowbound.constructions import best_construction, construction_size
from shadowbound.oracle import MAX_N_GRAPH, min_edges_graph


@dataclass
class TableConfig:
    min_n: int = 4
    max_n: int = 7
    workers: int = 1
    out: str = "oracle_table.csv"


def rows(cfg: TableConfig):
    for n in range(cfg.min_n, min(cfg.max_n, MAX_N_GRAPH) + 1):
        for T in range(1, math.comb(n - 1, 2) + 1):
            res = min_edges_graph(n, T, workers=cfg.workers)
            t = BoundParams.from_threshold(n, T).t
            bound = edge_lower_bound(n, threshold=T) if n / 2 - 1 <= t <= n - 1 else None
            spec = best_construction(n, threshold=T)
            yield {
                "n": n,
                "threshold": T,
                "t": f"{t:.6f}",
                "minimum": res.minimum,
                "witnesses": len(res.witnesses),
                "bound": "" if bound is None else f"{bound.value:.6f}",
                "regime": "" if bound is None else bound.regime.value,
                "construction": spec.kind.value if spec else "",
                "construction_size": construction_size(spec) if spec else "",
                "seconds": f"{res.wall_time:.3f}",
            }


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, val in asdict(TableConfig()).items():
        p.add_argument("--" + name.replace("_", "-"), type=type(val), default=val)
    cfg = TableConfig(**vars(p.parse_args(argv)))
    print(cfg, file=sys.stderr)
    table = list(rows(cfg))
    with open(cfg.out, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=list(table[0]))
        w.writeheader()
        w.writerows(table)
    for r in table:
        print(f"n={r['n']} T={r['threshold']:>2} min={r['minimum']:>2} bound={r['bound'] or '-':>10} "
              f"best={r['construction_size']!s:>3} ({r['construction'] or '-'})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
