"""Floor quotient intervals ``Q[d, n] = {e : d <=_1 e <=_1 n}``.

Every interval is a subset of the initial interval ``Q[1, n]``, which has
fewer than ``2 sqrt(n)`` elements: the small quotients ``1..s`` and the large
quotients ``n // k`` for ``k <= s``, where ``s = isqrt(n)``. All routines here
start from that list.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

import numpy as np

from ._int64 import INT64_MAX, checked_mul, pos_int
from .relation import is_floor_quotient

MAX_HASSE_N = 10**6
MAX_INCIDENCE_N = 10**8
MAX_CHAIN_N = 10**12  # building Q[1, n] costs about 2 sqrt(n)
MAX_CHAIN_ELEMENTS = 20_000  # the predecessor scan is quadratic in |Q[d, n]|
# int64 count ceiling used by the chain DP; the float shadow check keeps a 2x margin
_CHAIN_CEILING = float(2**62)


@dataclass(frozen=True)
class IntervalView:
    lo: int
    hi: int
    elements: tuple[int, ...]
    index: dict[int, int] = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, e) -> bool:
        return e in self.index

    @classmethod
    def from_elements(cls, lo: int, hi: int, elements) -> "IntervalView":
        elements = tuple(int(e) for e in elements)
        return cls(lo, hi, elements, {e: i for i, e in enumerate(elements)})


@dataclass(frozen=True)
class InitialSplit:
    """``Q[1, n]`` as the union of small quotients and large quotients.

    ``overlap`` is ``s`` when the two halves share it (``s**2 <= n < s*(s+1)``)
    and ``None`` otherwise.
    """

    n: int
    s: int
    q_minus: tuple[int, ...]
    q_plus: tuple[int, ...]
    overlap: int | None


@dataclass(frozen=True)
class IncidenceStats:
    """Incidence counts ``Z(A, B) = #{(a, b) in A x B : a <=_1 b}`` on ``Q[1, n]``.

    ``z_minus`` and ``z_plus`` count pairs inside the small / large halves,
    ``z_cross_minus_plus`` counts small-to-large pairs and
    ``z_cross_plus_minus`` large-to-small pairs (0 or 1).
    """

    n: int
    z_total: int
    z_minus: int
    z_plus: int
    z_cross_minus_plus: int
    z_cross_plus_minus: int


@dataclass(frozen=True)
class SetDelta:
    n: int
    removed: tuple[int, ...]
    added: tuple[int, ...]

    def apply(self, elements) -> set[int]:
        return (set(elements) - set(self.removed)) | set(self.added)


@dataclass(frozen=True)
class ChainCount:
    """Number of chains ``d = a_0 < a_1 < ... < a_k = n``; ``by_length[k]`` counts length ``k``."""

    d: int
    n: int
    total: int
    by_length: tuple[int, ...]


def initial_interval(n: int) -> IntervalView:
    n = pos_int(n, "n")
    s = isqrt(n)
    large = [n // k for k in range(s, 0, -1)]
    if large[0] == s:
        large = large[1:]
    return IntervalView.from_elements(1, n, list(range(1, s + 1)) + large)


def split(n: int) -> InitialSplit:
    n = pos_int(n, "n")
    s = isqrt(n)
    q_minus = tuple(range(1, s + 1))
    q_plus = tuple(n // k for k in range(s, 0, -1))
    overlap = s if n < s * (s + 1) else None
    return InitialSplit(n=n, s=s, q_minus=q_minus, q_plus=q_plus, overlap=overlap)


def _multiple_mask(d: int, values: np.ndarray) -> np.ndarray:
    # d <=_1 e  <=>  e >= d*d, or e = k*d + j with j < k
    return (values >= d * d) | (values % d < values // d)


def interval(d: int, n: int) -> IntervalView:
    d = pos_int(d, "d")
    n = pos_int(n, "n")
    if not is_floor_quotient(d, n):
        return IntervalView.from_elements(d, n, ())
    # elements of Q[1, n] that are >= d: the small ones d..s, then n // k for k <= n // d
    s = isqrt(n)
    k_top = min(s, n // d)
    large = n // np.arange(k_top, 0, -1, dtype=np.int64)
    small = np.arange(d, s + 1, dtype=np.int64)
    if len(small) and len(large) and large[0] == s:
        large = large[1:]
    base = np.concatenate([small, large])
    return IntervalView.from_elements(d, n, base[_multiple_mask(d, base)].tolist())


def interval_size(d: int, n: int) -> int:
    return len(interval(d, n))


def quotient_interval_sizes(n: int) -> dict[int, int]:
    """``|Q[d, n]|`` for every ``d`` in ``Q[1, n]`` (all other ``d`` give 0)."""
    n = pos_int(n, "n")
    e = np.fromiter(initial_interval(n).elements, dtype=np.int64)
    d = e[:, None]
    mask = (e[None, :] >= d * d) | (e[None, :] % d < e[None, :] // d)
    return dict(zip(e.tolist(), mask.sum(axis=1).tolist()))


def gap(d: int, n: int) -> int:
    """Distance from ``d`` down to the next smaller floor quotient of ``n`` (0 counts below 1)."""
    d = pos_int(d, "d")
    n = pos_int(n, "n")
    if not is_floor_quotient(d, n):
        raise ValueError(f"gap({d}, {n}) is undefined: {d} is not a floor quotient of {n}")
    return d - n // (n // d + 1)


def multiplicity(d: int, n: int) -> int:
    """Size of the cutting set of ``(d, n)``."""
    d = pos_int(d, "d")
    n = pos_int(n, "n")
    if not is_floor_quotient(d, n):
        raise ValueError(
            f"multiplicity({d}, {n}) is undefined: {d} is not a floor quotient of {n}"
        )
    return n // d - n // (d + 1)


def width(d: int, n: int) -> Fraction:
    return Fraction(pos_int(n, "n"), pos_int(d, "d"))


def _below_mask(lower: np.ndarray, e: int) -> np.ndarray:
    """Vectorized ``a <=_1 e`` for every ``a`` in ``lower``."""
    return e // lower > e // (lower + 1)


def _predecessors(elements: np.ndarray):
    """Yield, for each position ``j``, indices ``i < j`` with ``elements[i] <=_1 elements[j]``.

    Uses that ``Q[d, e]`` is contained in ``Q[d, n]`` for every ``e`` there, so
    predecessors are found among earlier (additively smaller) elements.
    """
    for j in range(len(elements)):
        yield np.flatnonzero(_below_mask(elements[:j], int(elements[j])))


def covering_edges(view: IntervalView) -> list[tuple[int, int]]:
    """Hasse diagram edges ``(a, b)``: ``a <_1 b`` with nothing strictly between."""
    if len(view) == 0:
        raise ValueError("covering_edges needs a nonempty interval")
    if view.hi > MAX_HASSE_N:
        raise ValueError(f"Hasse output is limited to n <= {MAX_HASSE_N}")
    elems = np.fromiter(view.elements, dtype=np.int64)
    edges = []
    for j, preds in enumerate(_predecessors(elems)):
        if len(preds) == 0:
            continue
        p = elems[preds]
        # a is covered by b iff no other predecessor c of b lies above a
        above = (p[None, :] // p[:, None]) > (p[None, :] // (p[:, None] + 1))
        np.fill_diagonal(above, False)
        b = int(elems[j])
        edges.extend((int(a), b) for a in p[~above.any(axis=1)])
    edges.sort()
    return edges


def divisor_summatory(x: int) -> int:
    """``sum_{k <= x} sigma_0(k)``, evaluated as ``sum_{j <= x} x // j``."""
    return sum(x // j for j in range(1, x + 1))


def incidence_stats(n: int) -> IncidenceStats:
    n = pos_int(n, "n")
    if n > MAX_INCIDENCE_N:
        raise ValueError(f"incidence_stats is limited to n <= {MAX_INCIDENCE_N} (got {n})")
    sp = split(n)
    elems = np.fromiter(initial_interval(n).elements, dtype=np.int64)
    is_minus = elems <= sp.s
    is_plus = np.isin(elems, np.fromiter(sp.q_plus, dtype=np.int64))

    z_total = z_mm = z_pp = z_mp = z_pm = 0
    block = max(1, 4_000_000 // len(elems))
    for start in range(0, len(elems), block):
        a = elems[start : start + block]
        rel = (elems[None, :] // a[:, None]) > (elems[None, :] // (a[:, None] + 1))
        rows_m = is_minus[start : start + block]
        rows_p = is_plus[start : start + block]
        z_total += int(rel.sum())
        z_mm += int(rel[rows_m][:, is_minus].sum())
        z_pp += int(rel[rows_p][:, is_plus].sum())
        z_mp += int(rel[rows_m][:, is_plus].sum())
        z_pm += int(rel[rows_p][:, is_minus].sum())

    expected_pp = divisor_summatory(sp.s)
    if z_pp != expected_pp:
        raise RuntimeError(
            f"incidence count on large quotients of {n} is {z_pp}, divisor sum gives {expected_pp}"
        )
    return IncidenceStats(
        n=n,
        z_total=z_total,
        z_minus=z_mm,
        z_plus=z_pp,
        z_cross_minus_plus=z_mp,
        z_cross_plus_minus=z_pm,
    )


def count_chains(d: int, n: int) -> ChainCount:
    """Count chains from ``d`` to ``n``, in total and stratified by length.

    Runs the recursion ``TC(d, e) = sum TC(d, f)`` over ``f <_1 e`` in
    ``Q[d, n]`` bottom-up in additive order. Each strict step at least halves
    the element, so lengths never exceed ``log2(n / d)``.
    """
    d = pos_int(d, "d")
    n = pos_int(n, "n")
    if not is_floor_quotient(d, n):
        return ChainCount(d=d, n=n, total=0, by_length=())
    if n > MAX_CHAIN_N:
        raise ValueError(f"count_chains is limited to n <= {MAX_CHAIN_N}")
    elems = np.fromiter(interval(d, n).elements, dtype=np.int64)
    if len(elems) > MAX_CHAIN_ELEMENTS:
        raise ValueError(
            f"count_chains is limited to intervals of at most {MAX_CHAIN_ELEMENTS} elements"
        )
    max_len = (n // d).bit_length() - 1
    counts = np.zeros((len(elems), max_len + 1), dtype=np.int64)
    totals = np.zeros(len(elems), dtype=np.float64)
    counts[0, 0] = 1
    totals[0] = 1.0
    for j, preds in enumerate(_predecessors(elems)):
        if j == 0:
            continue
        bound = totals[preds].sum()
        if bound > _CHAIN_CEILING:
            raise OverflowError(
                f"chain count from {d} to {int(elems[j])} exceeds the 64-bit range"
            )
        counts[j, 1:] = counts[preds, :-1].sum(axis=0)
        totals[j] = bound
    by_length = [int(c) for c in counts[-1]]
    while len(by_length) > 1 and by_length[-1] == 0:
        by_length.pop()
    total = sum(by_length)
    if total > INT64_MAX:
        raise OverflowError(f"chain count from {d} to {n} exceeds the 64-bit range")
    return ChainCount(d=d, n=n, total=total, by_length=tuple(by_length))


def consecutive_delta(n: int) -> SetDelta:
    """Elements leaving and entering when passing from ``Q[1, n-1]`` to ``Q[1, n]``.

    The entering elements are the divisors of ``n`` above ``sqrt(n)`` (plus
    ``s`` when ``n == s*s``); each such divisor ``e`` pushes out ``e - 1``,
    except that ``s`` stays when ``n == s*(s+1)``.
    """
    n = pos_int(n, "n")
    if n < 2:
        raise ValueError("consecutive_delta needs n >= 2")
    s = isqrt(n)
    big_divisors = sorted(n // k for k in range(1, s + 1) if n % k == 0 and (n // k) ** 2 > n)
    removed = {e - 1 for e in big_divisors}
    added = set(big_divisors)
    if n == s * s:
        added.add(s)
    elif n == s * (s + 1):
        removed.discard(s)
    return SetDelta(n=n, removed=tuple(sorted(removed)), added=tuple(sorted(added)))


def scan_width(w: int, a_max: int) -> list[tuple[int, int]]:
    """Sizes ``|Q[a, a*w]|`` for ``a = 1..a_max``."""
    w = pos_int(w, "w")
    a_max = pos_int(a_max, "a_max")
    checked_mul(a_max, w)
    return [(a, interval_size(a, a * w)) for a in range(1, a_max + 1)]


def to_dot(view: IntervalView, edges=None, name: str | None = None) -> str:
    """DOT digraph of the Hasse diagram, nodes and edges in additive order."""
    if edges is None:
        edges = covering_edges(view)
    title = name or f"Q[{view.lo},{view.hi}]"
    lines = [f'digraph "{title}" {{', "  rankdir=BT;"]
    lines.extend(f"  {e};" for e in view.elements)
    lines.extend(f"  {a} -> {b};" for a, b in edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_csv(view: IntervalView) -> str:
    return "element\n" + "".join(f"{e}\n" for e in view.elements)
