"""Moebius functions: the classical ``mu`` and the floor quotient ``mu1(d, n)``.

Three independent routes to ``mu1`` live here:

* :func:`mu1` runs the defining recursion over ``Q[d, n]`` with a memo,
  short-circuiting to the classical ``mu(n // d)`` whenever ``d*d >= n``;
* :func:`mu1_initial_table` builds ``mu1(1, n)`` for all ``n <= N`` from the
  differenced function ``delta(n) = mu1(1, n) - mu1(1, n - 1)`` with a
  forward sieve over divisors;
* :func:`hall_chain_sum` sums ``(-1)**len`` over all chains.
"""

import io
import math
from dataclasses import dataclass

import numpy as np

from ._int64 import INT64_MAX, pos_int
from .intervals import _below_mask, count_chains, initial_interval, interval
from .relation import is_floor_quotient

MAX_TABLE = 10**8
CSV_HEADER = "n,mu1,delta_mu1"


@dataclass(frozen=True)
class ClassicalMobiusTable:
    """``mu[n]`` for ``1 <= n <= limit``; ``mu[0]`` is an unused 0."""

    limit: int
    mu: np.ndarray

    def __getitem__(self, n):
        return self.mu[n]


@dataclass(frozen=True)
class MobiusTable:
    """Dense ``mu1(1, n)`` and ``delta(n)`` for ``0 <= n <= limit`` (index 0 holds 0)."""

    limit: int
    mu1: np.ndarray
    delta: np.ndarray

    def __eq__(self, other):
        if not isinstance(other, MobiusTable):
            return NotImplemented
        return (
            self.limit == other.limit
            and np.array_equal(self.mu1, other.mu1)
            and np.array_equal(self.delta, other.delta)
        )


@dataclass(frozen=True)
class SignChangeSequence:
    entries: tuple[int, ...]
    values: tuple[int, ...]


@dataclass(frozen=True)
class GrowthSummary:
    argmax_n: int
    max_abs: int
    beta: float
    max_ratio: float
    argmax_ratio: int


@dataclass(frozen=True)
class SignRun:
    start: int
    end: int
    sign: int

    @property
    def length(self) -> int:
        return self.end - self.start + 1


def classical_mu(k: int) -> int:
    """Classical Moebius function of a single integer, by trial division."""
    k = pos_int(k, "k")
    result = 1
    p = 2
    while p * p <= k:
        if k % p == 0:
            k //= p
            if k % p == 0:
                return 0
            result = -result
        p += 1
    return -result if k > 1 else result


def classical_mobius(limit: int) -> ClassicalMobiusTable:
    limit = pos_int(limit, "limit")
    if limit > MAX_TABLE:
        raise MemoryError(f"classical_mobius is limited to limit <= {MAX_TABLE}")
    mu = np.ones(limit + 1, dtype=np.int8)
    mu[0] = 0
    composite = np.zeros(limit + 1, dtype=bool)
    for p in range(2, limit + 1):
        if composite[p]:
            continue
        composite[p * p :: p] = True
        mu[p::p] *= -1
        mu[p * p :: p * p] = 0
    return ClassicalMobiusTable(limit=limit, mu=mu)


class MobiusContext:
    """Memo for :func:`mu1`, keyed by ``(d, e)``. Owned by one caller; not thread-safe."""

    def __init__(self):
        self.cache: dict[tuple[int, int], int] = {}

    def __len__(self):
        return len(self.cache)


def mu1(d: int, n: int, ctx: MobiusContext | None = None, shortcut: bool = True) -> int:
    """Two-variable Moebius function of the floor quotient order.

    With ``shortcut=False`` the classical-``mu`` reduction for ``d*d >= e`` is
    never taken and every value comes from the plain recursion; the cache then
    has to be a separate context, since keys do not record the route.
    """
    d = pos_int(d, "d")
    n = pos_int(n, "n")
    if not is_floor_quotient(d, n):
        return 0
    if d == n:
        return 1
    if shortcut and d * d >= n:
        return classical_mu(n // d)
    if ctx is None:
        ctx = MobiusContext()
    cache = ctx.cache
    if (d, n) in cache:
        return cache[(d, n)]

    elems = np.fromiter(interval(d, n).elements, dtype=np.int64)
    values = np.zeros(len(elems), dtype=np.int64)
    for j in range(len(elems)):
        e = int(elems[j])
        hit = cache.get((d, e))
        if hit is not None:
            values[j] = hit
            continue
        if e == d:
            v = 1
        elif shortcut and d * d >= e:
            v = classical_mu(e // d)
        else:
            terms = values[:j][_below_mask(elems[:j], e)]
            if float(np.abs(terms).sum(dtype=np.float64)) > 2.0**62:
                raise OverflowError(f"mu1({d}, {e}) overflows the 64-bit range")
            v = -int(terms.sum())
            cache[(d, e)] = v
        values[j] = v
    return int(values[-1])


def _value_guard(limit: int) -> int:
    # no cell receives more than `limit` pushes, so values below this bound can never wrap
    return INT64_MAX // (limit + 1)


def mu1_initial_table(limit: int) -> MobiusTable:
    """Build ``mu1(1, n)`` for ``n <= limit`` via the differenced recursion.

    For ``n >= 3``, ``delta(n) = -sum delta(e)`` over divisors ``e`` of ``n``
    with ``sqrt(n) < e < n``, minus ``mu1(1, s)`` when ``n`` is ``s*s`` or
    ``s*(s+1)``. The sieve finalizes ``delta(e)`` in ascending order and
    pushes it onto ``e*k`` for ``2 <= k < e``; the correction for ``s*s`` and
    ``s*(s+1)`` is pushed as soon as ``mu1(1, s)`` is known.
    Total work is ``O(limit log limit)``.
    """
    limit = pos_int(limit, "limit")
    if limit > MAX_TABLE:
        raise MemoryError(f"mu1_initial_table is limited to limit <= {MAX_TABLE}")
    guard = _value_guard(limit)
    delta = np.zeros(limit + 1, dtype=np.int64)
    mu = np.zeros(limit + 1, dtype=np.int64)
    delta[1] = 1  # mu1(1) = 1 and mu1(0) = 0
    if limit >= 2:
        delta[2] = -2  # mu1(2) = -1; the differenced recursion starts at n = 3
    running = 0
    for n in range(1, limit + 1):
        v = int(delta[n])
        running += v
        if abs(v) > guard or abs(running) > guard:
            raise OverflowError(f"mu1 table value at n={n} exceeds the overflow guard {guard}")
        mu[n] = running
        kmax = min(n - 1, limit // n)
        if v and kmax >= 2:
            delta[2 * n : n * kmax + 1 : n] -= v
        if running and n >= 2:
            sq = n * n
            if sq <= limit:
                delta[sq] -= running
                if sq + n <= limit:
                    delta[sq + n] -= running
    return MobiusTable(limit=limit, mu1=mu, delta=delta)


def hall_chain_sum(d: int, n: int) -> int:
    counts = count_chains(d, n).by_length
    return sum(c if length % 2 == 0 else -c for length, c in enumerate(counts))


def sign_change_sequence(limit: int, table: MobiusTable | None = None) -> SignChangeSequence:
    """Sign changes ``l_1 = 2 < l_2 < ...`` of ``mu1(1, .)`` with ``l_{j+1} <= 2 l_j**2 - 2``.

    Each step takes the smallest ``m`` in ``(l_j, 2 l_j**2 - 2]`` with
    ``m <=_1 2 l_j**2 - 2``, ``m`` not ``<=_1 l_j**2 - 1`` and sign opposite to
    ``mu1(1, l_j)``. Stops once the next search window passes ``limit``.
    """
    limit = pos_int(limit, "limit")
    if table is None:
        table = mu1_initial_table(limit)
    elif table.limit < limit:
        raise ValueError(f"table covers n <= {table.limit}, need {limit}")
    mu = table.mu1
    ell = 2
    entries = [ell]
    values = [int(mu[ell])]
    while 2 * ell * ell - 2 <= limit:
        top = 2 * ell * ell - 2
        sign = 1 if mu[ell] > 0 else -1
        nxt = None
        for m in initial_interval(top).elements:
            if m <= ell or is_floor_quotient(m, ell * ell - 1):
                continue
            if sign * int(mu[m]) < 0:
                nxt = m
                break
        if nxt is None:
            raise RuntimeError(f"no sign change found after l = {ell}; table is inconsistent")
        ell = nxt
        entries.append(ell)
        values.append(int(mu[ell]))
    return SignChangeSequence(entries=tuple(entries), values=tuple(values))


def growth_scan(table: MobiusTable, beta: float = 0.0) -> GrowthSummary:
    """Largest ``|mu1(1, n)|`` and largest ``|mu1(1, n)| / n**beta`` over ``n >= 2``."""
    a = np.abs(table.mu1)
    argmax = int(np.argmax(a))
    if table.limit < 2:
        return GrowthSummary(argmax, int(a[argmax]), beta, float(a[argmax]), argmax)
    ns = np.arange(2, table.limit + 1, dtype=np.float64)
    ratio = a[2:] / ns**beta
    r = int(np.argmax(ratio))
    return GrowthSummary(
        argmax_n=argmax,
        max_abs=int(a[argmax]),
        beta=beta,
        max_ratio=float(ratio[r]),
        argmax_ratio=r + 2,
    )


def exceeds_power(table: MobiusTable, beta: float) -> list[int]:
    """All ``n >= 2`` with ``|mu1(1, n)| > n**beta``, compared exactly in integers
    via ``|mu1|**q > n**p`` for ``beta = p/q`` given as a decimal."""
    from fractions import Fraction

    frac = Fraction(str(beta)).limit_denominator(1000)
    p, q = frac.numerator, frac.denominator
    a = np.abs(table.mu1)
    # float prefilter with slack, exact confirmation on the survivors
    ns = np.arange(table.limit + 1, dtype=np.float64)
    with np.errstate(divide="ignore"):
        cand = np.flatnonzero(a * 1.0000001 > ns**beta)
    return [int(n) for n in cand if n >= 2 and int(a[n]) ** q > int(n) ** p]


def longest_sign_run(table: MobiusTable) -> SignRun:
    """Longest stretch of ``n`` over which ``mu1(1, n)`` never strictly changes sign.

    Zeros do not break a run; the run's sign is that of its nonzero values.
    """
    best = SignRun(1, 1, 1)
    start, sign, last_nonzero = 1, 0, 0
    mu = table.mu1
    for n in range(1, table.limit + 1):
        v = int(mu[n])
        if v:
            s = 1 if v > 0 else -1
            if sign and s != sign:
                start = last_nonzero + 1
            sign, last_nonzero = s, n
        if n - start + 1 > best.length:
            best = SignRun(start, n, sign)
    return best


def envelope(d: int, n: int, a0: float) -> float:
    return math.exp(a0 * math.log(n / d))


def write_table_csv(table: MobiusTable, fh) -> None:
    """Write ``n,mu1,delta_mu1`` rows for ``n = 1..limit`` with LF line endings."""
    fh.write(CSV_HEADER + "\n")
    mu, delta = table.mu1, table.delta
    step = 1 << 16
    for start in range(1, table.limit + 1, step):
        stop = min(start + step, table.limit + 1)
        fh.write(
            "".join(
                f"{n},{m},{dd}\n"
                for n, m, dd in zip(
                    range(start, stop), mu[start:stop].tolist(), delta[start:stop].tolist()
                )
            )
        )


def table_to_csv(table: MobiusTable) -> str:
    buf = io.StringIO()
    write_table_csv(table, buf)
    return buf.getvalue()


def read_table_csv(fh) -> MobiusTable:
    header = fh.readline().rstrip("\n")
    if header != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header!r}")
    rows = [line.split(",") for line in fh.read().splitlines() if line]
    limit = len(rows)
    mu = np.zeros(limit + 1, dtype=np.int64)
    delta = np.zeros(limit + 1, dtype=np.int64)
    for i, (n, m, dd) in enumerate(rows, start=1):
        if int(n) != i:
            raise ValueError(f"row {i} has n={n}; rows must be consecutive from 1")
        mu[i] = int(m)
        delta[i] = int(dd)
    return MobiusTable(limit=limit, mu1=mu, delta=delta)
