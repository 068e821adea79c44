"""The floor quotient relation ``d <=_1 n`` (``d == n // k`` for some ``k >= 1``).

All predicates are exact integer computations. Inputs with ``d > n`` are
legal and simply unrelated.
"""

from dataclasses import dataclass
from enum import Enum

from ._int64 import checked_mul, pos_int


class Characterization(Enum):
    CUTTING = "cutting"
    COVERING = "covering"
    INTERSECTION = "intersection"
    STRONG_REMAINDER = "strong_remainder"
    TIPPING_POINT = "tipping_point"
    RECIPROCAL_DUALITY = "reciprocal_duality"


@dataclass(frozen=True)
class QuotientWitness:
    """Cutting set of ``(d, n)`` as the half-open range ``(k_lo, k_hi]``.

    Every ``k`` in the range satisfies ``n // k == d``; the range is empty
    exactly when ``d`` is not a floor quotient of ``n``.
    """

    d: int
    n: int
    k_lo: int
    k_hi: int

    @property
    def cardinality(self) -> int:
        return self.k_hi - self.k_lo

    @property
    def related(self) -> bool:
        return self.k_hi > self.k_lo

    def members(self) -> range:
        return range(self.k_lo + 1, self.k_hi + 1)


def is_floor_quotient(d: int, n: int) -> bool:
    """Tipping-point test: ``n // d > n // (d + 1)``."""
    d = pos_int(d, "d")
    n = pos_int(n, "n")
    return n // d > n // (d + 1)


def _cutting(d: int, n: int) -> bool:
    # direct definition, scanning every possible cutting length
    for k in range(1, n // d + 1):
        if n // k == d:
            return True
    return False


def _covering(d: int, n: int) -> bool:
    # k*[d, d+1) contains [n, n+1)  <=>  k*d <= n and n + 1 <= k*(d + 1)
    for k in range(1, n // d + 1):
        if k * d <= n and n + 1 <= k * (d + 1):
            return True
    return False


def _intersection(d: int, n: int) -> bool:
    # [k*d, k*d + k) meets [n, n + 1)  <=>  k*d < n + 1 and n < k*d + k
    for k in range(1, n // d + 1):
        if k * d < n + 1 and n < k * d + k:
            return True
    return False


def _strong_remainder(d: int, n: int) -> bool:
    k, r = divmod(n, d)
    return k >= 1 and r < min(d, k)


def _tipping_point(d: int, n: int) -> bool:
    return n // d > n // (d + 1)


def _reciprocal_duality(d: int, n: int) -> bool:
    k = n // d
    return k >= 1 and n // k == d


_VARIANTS = {
    Characterization.CUTTING: _cutting,
    Characterization.COVERING: _covering,
    Characterization.INTERSECTION: _intersection,
    Characterization.STRONG_REMAINDER: _strong_remainder,
    Characterization.TIPPING_POINT: _tipping_point,
    Characterization.RECIPROCAL_DUALITY: _reciprocal_duality,
}


def characterization(d: int, n: int, variant: Characterization | str) -> bool:
    """Evaluate one of the six equivalent characterizations independently.

    The cutting, covering and intersection variants scan ``k <= n // d``
    and so cost ``O(n / d)``; the other three are constant time.
    """
    d = pos_int(d, "d")
    n = pos_int(n, "n")
    variant = Characterization(variant)
    return _VARIANTS[variant](d, n)


def all_characterizations(d: int, n: int) -> dict[Characterization, bool]:
    return {v: characterization(d, n, v) for v in Characterization}


def cutting_set(d: int, n: int) -> QuotientWitness:
    d = pos_int(d, "d")
    n = pos_int(n, "n")
    return QuotientWitness(d=d, n=n, k_lo=n // (d + 1), k_hi=n // d)


def floor_reciprocal(n: int, k: int) -> int:
    """The map ``J_n: k -> n // k`` on ``{1, ..., n}``."""
    n = pos_int(n, "n")
    k = pos_int(k, "k")
    if k > n:
        raise ValueError(f"floor_reciprocal needs k <= n, got k={k} > n={n}")
    return n // k


def canonical_cutting_length(d: int, n: int) -> int | None:
    """``n // d`` when ``d <=_1 n`` (the largest cutting length), else ``None``."""
    d = pos_int(d, "d")
    n = pos_int(n, "n")
    k = n // d
    if k >= 1 and n // k == d:
        return k
    return None


def dilated_floor_commute_check(n: int, k: int, l: int) -> bool:
    """Check ``(n // l) // k == (n // k) // l == n // (k * l)``.

    This holds for all positive integers; it is kept as an executable
    regression oracle. ``k * l`` is computed with a 64-bit overflow check.
    """
    n = pos_int(n, "n")
    k = pos_int(k, "k")
    l = pos_int(l, "l")
    kl = checked_mul(k, l)
    return (n // l) // k == (n // k) // l == n // kl
