"""Build the mu1(1, n) table and write the CSV that plotting tools consume.

    python scripts/mobius_plot_data.py --limit 1000000 --out data/mu1_1e6.csv
"""

import argparse
import time
from dataclasses import dataclass
from pathlib import Path

from floorq import mobius as mb


@dataclass
class Config:
    limit: int = 10**6
    out: Path = Path("data/mu1.csv")
    betas: tuple = (0.5, 0.6, 0.7)


def run(cfg: Config):
    t0 = time.perf_counter()
    table = mb.mu1_initial_table(cfg.limit)
    built = time.perf_counter() - t0
    cfg.out.parent.mkdir(parents=True, exist_ok=True)
    with open(cfg.out, "w", newline="\n", encoding="utf-8") as fh:
        mb.write_table_csv(table, fh)
    g = mb.growth_scan(table)
    run_ = mb.longest_sign_run(table)
    print(f"table to {cfg.limit} built in {built:.2f}s -> {cfg.out}")
    print(f"max |mu1| = {g.max_abs} at n = {g.argmax_n}")
    print(f"longest constant-sign run: [{run_.start}, {run_.end}] sign {run_.sign:+d}")
    for beta in cfg.betas:
        above = mb.exceeds_power(table, beta)
        first = above[0] if above else "-"
        print(f"beta {beta}: {len(above)} n with |mu1| > n^beta, first {first}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--limit", type=int, default=Config.limit)
    ap.add_argument("--out", type=Path, default=Config.out)
    a = ap.parse_args()
    run(Config(limit=a.limit, out=a.out))
