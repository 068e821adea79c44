"""Sizes |Q[a, a*w]| for a range of a, with a unimodality report (data only)."""

import argparse

from floorq.intervals import scan_width


def descents_then_ascents(sizes):
    # a sequence is unimodal iff it never rises again after it starts falling
    falling = False
    for prev, cur in zip(sizes, sizes[1:]):
        if cur < prev:
            falling = True
        elif cur > prev and falling:
            return False
    return True


ap = argparse.ArgumentParser()
ap.add_argument("--widths", type=int, nargs="+", default=[10, 100, 1000, 10_000])
ap.add_argument("--a-max", type=int, default=200)
args = ap.parse_args()

for w in args.widths:
    sizes = [m for _, m in scan_width(w, args.a_max)]
    peak = max(sizes)
    print(
        f"w={w}: sizes[1..{args.a_max}] peak {peak} at a={sizes.index(peak) + 1}, "
        f"last {sizes[-1]}, unimodal on this range: {descents_then_ascents(sizes)}"
    )
