"""Brute-force reference implementations, independent of the library code paths."""

from fractions import Fraction
from functools import lru_cache

import numpy as np


def fq(d, n):
    """d is a floor quotient of n, by scanning every k <= n."""
    return any(n // k == d for k in range(1, n + 1))


def quotients(n):
    return sorted({n // k for k in range(1, n + 1)})


def brute_interval(d, n):
    return [e for e in range(d, n + 1) if fq(d, e) and fq(e, n)]


def chains(d, n):
    """All chains d = a0 < a1 < ... < ak = n, by depth-first enumeration."""
    if not fq(d, n):
        return []
    elems = brute_interval(d, n)
    out = []

    def walk(path):
        last = path[-1]
        if last == n:
            out.append(tuple(path))
            return
        for e in elems:
            if e > last and fq(last, e):
                walk(path + [e])

    walk([d])
    return out


def mobius_matrix(elements):
    """Moebius function on a finite poset as the inverse of its zeta matrix."""
    m = len(elements)
    z = np.array([[1 if fq(a, b) else 0 for b in elements] for a in elements], dtype=object)
    # zeta is unitriangular in additive order: back-substitute exactly in integers
    mu = [[0] * m for _ in range(m)]
    for i in range(m):
        mu[i][i] = 1
        for j in range(i + 1, m):
            mu[i][j] = -sum(mu[i][k] * z[k][j] for k in range(i, j))
    return mu


def brute_mu1(d, n):
    elems = brute_interval(d, n)
    if not elems:
        return 0
    return mobius_matrix(elems)[0][-1]


@lru_cache(maxsize=None)
def classical_mu(n):
    if n == 1:
        return 1
    result, m, p = 1, n, 2
    while m > 1:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    return result


def sigma0(k):
    return sum(1 for j in range(1, k + 1) if k % j == 0)


def incidence_pairs(a_set, b_set):
    return sum(1 for a in a_set for b in b_set if fq(a, b))
