"""Print the sign-change sequence of mu1(1, n) with the step bound 2 l^2 - 2."""

import argparse

from floorq.mobius import sign_change_sequence

ap = argparse.ArgumentParser()
ap.add_argument("--limit", type=int, default=10**6)
limit = ap.parse_args().limit

seq = sign_change_sequence(limit)
print("l,mu1,bound_for_next")
for ell, v in zip(seq.entries, seq.values):
    print(f"{ell},{v},{2 * ell * ell - 2}")
