"""Named property checks over bounded ranges, driven by ``floorq verify``.

Each check returns a :class:`CheckResult` holding how many instances were
examined and up to ``MAX_EXAMPLES`` counterexamples. Table-based checks accept
an explicit :class:`~floorq.mobius.MobiusTable` so that a corrupted table can
be fed in and caught.
"""

import math
import random
import time
from dataclasses import dataclass, field
from math import isqrt

import numpy as np

from . import intervals as iv
from . import mobius as mb
from . import relation as rel
from . import semigroup as sg
from .zeta import alpha0

MAX_EXAMPLES = 5


@dataclass(frozen=True)
class Budget:
    name: str
    characterizations: int  # all d, n up to this
    order_scan: int  # exhaustive scans over n
    long_scan: int  # cheap per-n scans (sizes, fixed points, deltas)
    size_scan: int  # initial-interval size sandwich
    semigroup_d: int
    generator_d: int
    duality_n: int
    lower_bound_n: int
    random_pairs: int
    random_n: int
    commute_triples: int
    recursion_n: int
    hall_n: int
    reduction_n: int
    table_n: int
    vanishing_n: int
    incidence_samples: tuple[int, ...]
    cancellation_n: int
    sign_table: int
    seed: int = 20240601


QUICK = Budget(
    name="quick",
    characterizations=200,
    order_scan=500,
    long_scan=2000,
    size_scan=2000,
    semigroup_d=25,
    generator_d=15,
    duality_n=2000,
    lower_bound_n=2000,
    random_pairs=400,
    random_n=2000,
    commute_triples=10_000,
    recursion_n=300,
    hall_n=120,
    reduction_n=2000,
    table_n=2000,
    vanishing_n=2000,
    incidence_samples=(16, 100, 999, 1000, 1024, 1056, 2000),
    cancellation_n=200,
    sign_table=2000,
)

FULL = Budget(
    name="full",
    characterizations=500,
    order_scan=2000,
    long_scan=10_000,
    size_scan=100_000,
    semigroup_d=60,
    generator_d=40,
    duality_n=5000,
    lower_bound_n=10_000,
    random_pairs=10_000,
    random_n=100_000,
    commute_triples=100_000,
    recursion_n=1500,
    hall_n=300,
    reduction_n=10_000,
    table_n=100_000,
    vanishing_n=100_000,
    incidence_samples=(10**4, 10**4 + 1, 99_999, 10**5, 123_456, 998_001, 998_002, 10**6),
    cancellation_n=500,
    sign_table=10**6,
)

BUDGETS = {"quick": QUICK, "full": FULL}


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    counterexamples: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def fail(self, example):
        if len(self.counterexamples) < MAX_EXAMPLES:
            self.counterexamples.append(example)
        else:
            self.counterexamples[-1] = "..."


def _fq(d, n):
    return n // d > n // (d + 1)


def check_characterizations(b: Budget) -> CheckResult:
    r = CheckResult("six characterizations agree")
    for n in range(1, b.characterizations + 1):
        for d in range(1, b.characterizations + 1):
            vals = set(rel.all_characterizations(d, n).values())
            r.checked += 1
            if len(vals) != 1:
                r.fail((d, n))
    return r


def check_partial_order(b: Budget) -> CheckResult:
    r = CheckResult("reflexive, antisymmetric, transitive")
    rng = random.Random(b.seed)
    for n in range(1, b.order_scan + 1):
        r.checked += 1
        if not rel.is_floor_quotient(n, n):
            r.fail(("reflexivity", n))
    for _ in range(20 * b.order_scan):
        n = rng.randint(1, b.order_scan)
        q = iv.initial_interval(n).elements
        m = rng.choice(q)
        d = rng.choice(iv.initial_interval(m).elements)
        x = rng.randint(1, b.order_scan)
        r.checked += 1
        if not rel.is_floor_quotient(d, n):
            r.fail(("transitivity", d, m, n))
        if rel.is_floor_quotient(x, n) and rel.is_floor_quotient(n, x) and x != n:
            r.fail(("antisymmetry", x, n))
    return r


def check_sandwich(b: Budget) -> CheckResult:
    r = CheckResult("divisibility implies floor quotient implies <=")
    for n in range(1, b.order_scan + 1):
        for d in range(1, b.order_scan + 1):
            r.checked += 1
            q = _fq(d, n)
            if (n % d == 0 and not q) or (q and d > n):
                r.fail((d, n))
    return r


def check_involution(b: Budget) -> CheckResult:
    r = CheckResult("J_n is an involution exactly on floor quotients")
    for n in range(1, b.order_scan + 1):
        for k in range(1, n + 1):
            r.checked += 1
            back = n // (n // k)
            if _fq(k, n):
                if back != k:
                    r.fail((n, k))
            elif back <= k:
                r.fail((n, k))
    return r


def check_cutting_partition(b: Budget) -> CheckResult:
    r = CheckResult("cutting sets partition 1..n")
    for n in range(1, b.order_scan + 1):
        r.checked += 1
        seen = []
        for d in iv.initial_interval(n).elements:
            w = rel.cutting_set(d, n)
            if w.cardinality != n // d - n // (d + 1):
                r.fail(("cardinality", d, n))
            seen.extend(w.members())
        if sorted(seen) != list(range(1, n + 1)):
            r.fail(("partition", n))
    return r


def check_commute(b: Budget) -> CheckResult:
    r = CheckResult("dilated floor functions commute")
    rng = random.Random(b.seed + 1)
    for _ in range(b.commute_triples):
        k = rng.randint(1, 2**16)
        l = rng.randint(1, 2**31 // k)
        n = rng.randint(1, 10**12)
        r.checked += 1
        if not rel.dilated_floor_commute_check(n, k, l):
            r.fail((n, k, l))
    return r


def check_semigroup(b: Budget) -> CheckResult:
    r = CheckResult("floor multiples: closed form, closure, Frobenius number")
    for d in range(1, b.semigroup_d + 1):
        info = sg.describe(d)
        members = [m for m in range(1, d * d + 1) if sg.is_floor_multiple(d, m)]
        ms = set(members) | set(range(d * d, 2 * d * d + 1))
        for m in range(1, 2 * d * d + 1):
            r.checked += 1
            if sg.is_floor_multiple(d, m) != _fq(d, m):
                r.fail(("closed form", d, m))
        for i, a in enumerate(members):
            for c in members[i:]:
                r.checked += 1
                if a + c not in ms:
                    r.fail(("closure", d, a, c))
        if d > 1:
            f = info.frobenius
            if sg.is_floor_multiple(d, f) or not all(
                sg.is_floor_multiple(d, f + t) for t in range(1, d * d + 1)
            ):
                r.fail(("frobenius", d))
        if len(sg.enumerate_gaps(d)) != info.gap_count:
            r.fail(("gap count", d))
    return r


def check_generators(b: Budget) -> CheckResult:
    r = CheckResult("generators span the semigroup and are minimal")
    for d in range(1, b.generator_d + 1):
        gens = sg.describe(d).generators
        reach = sg.representable(gens, 2 * d * d)
        for m in range(1, 2 * d * d + 1):
            r.checked += 1
            if reach[m] != _fq(d, m):
                r.fail(("span", d, m))
        for i, g in enumerate(gens):
            if sg.representable(gens[:i], g)[g]:
                r.fail(("minimal", d, g))
    return r


def check_initial_sizes(b: Budget) -> CheckResult:
    r = CheckResult("2 sqrt(n) - 2 < |Q[1,n]| < 2 sqrt(n)")
    for n in range(1, b.size_scan + 1):
        m = len(iv.initial_interval(n))
        r.checked += 1
        # integer forms of both strict inequalities
        if not (m * m < 4 * n < (m + 2) ** 2):
            r.fail((n, m))
    return r


def _random_pairs(b: Budget, n_max: int, seed: int):
    """Pairs with half the ``d`` drawn from ``Q[1, n]`` so most intervals are nonempty."""
    rng = random.Random(seed)
    for _ in range(b.random_pairs):
        n = rng.randint(1, n_max)
        if rng.random() < 0.5:
            d = rng.randint(1, n)
        else:
            d = rng.choice(iv.initial_interval(n).elements)
        yield d, n


def check_interval_upper(b: Budget) -> CheckResult:
    r = CheckResult("|Q[d,n]| <= (3/2)(n/d)^(2/3)")
    for d, n in _random_pairs(b, 10 * b.random_n, b.seed + 2):
        m = iv.interval_size(d, n)
        r.checked += 1
        if 8 * m**3 * d * d > 27 * n * n:
            r.fail((d, n, m))
    return r


def check_exact_family(b: Budget) -> CheckResult:
    r = CheckResult("|Q[d,d^4]| = (3/2)d^2 - d/2")
    for d in range(1, 51):
        r.checked += 1
        if 2 * iv.interval_size(d, d**4) != 3 * d * d - d:
            r.fail(d)
    return r


def check_lower_bounds(b: Budget) -> CheckResult:
    r = CheckResult("interval size lower bounds by range of d")
    for n in range(1, b.lower_bound_n + 1):
        sizes = iv.quotient_interval_sizes(n)
        s = isqrt(n)
        divisors_of = {}
        for k in range(1, s + 1):
            divisors_of.setdefault(n // k, k)
        for d, m in sizes.items():
            r.checked += 1
            x = n / (d * d)
            ok = True
            if d**4 <= n:
                ok &= m >= 1.5 * math.sqrt(n) - 0.5 * n**0.25 - 1 - 1e-9
            if n <= d**4 and d * d <= n:
                ok &= m >= 1.5 * x - 1.5 * math.sqrt(x) - 1e-9
            if d * d >= n:
                k = divisors_of[d]
                ok &= m == sum(1 for j in range(1, k + 1) if k % j == 0)
            if not ok:
                r.fail((d, n, m))
    return r


def check_anti_isomorphism(b: Budget) -> CheckResult:
    r = CheckResult("large quotients are anti-isomorphic to divisibility")
    for n in range(1, b.duality_n + 1):
        s = isqrt(n)
        k = np.arange(1, s + 1)
        q = n // k
        lo, hi = q[:, None], q[None, :]  # lo = n // j (rows), hi = n // l (cols)
        related = (hi // lo) > (hi // (lo + 1))
        divides = (k[:, None] % k[None, :]) == 0  # l | j
        r.checked += s * s
        bad = np.argwhere(related != divides)
        for j, l in bad[:MAX_EXAMPLES]:
            r.fail((n, int(l) + 1, int(j) + 1))
    return r


def check_never_order_preserving(b: Budget) -> CheckResult:
    r = CheckResult("J_n is never order-preserving")
    for n in range(1, b.order_scan + 1):
        e = np.fromiter(iv.initial_interval(n).elements, dtype=np.int64)
        related = (e[None, :] // e[:, None]) > (e[None, :] // (e[:, None] + 1))
        np.fill_diagonal(related, False)
        je = n // e
        jrel = (je[None, :] // je[:, None]) > (je[None, :] // (je[:, None] + 1))
        r.checked += int(related.sum())
        for i, j in np.argwhere(related & jrel)[:MAX_EXAMPLES]:
            r.fail((n, int(e[i]), int(e[j])))
    return r


def check_gap_multiplicity(b: Budget) -> CheckResult:
    r = CheckResult("gaps and multiplicities interchange under J_n")
    for n in range(1, b.duality_n + 1):
        for d in iv.initial_interval(n).elements:
            r.checked += 1
            j = n // d
            if iv.gap(j, n) != iv.multiplicity(d, n) or iv.multiplicity(j, n) != iv.gap(d, n):
                r.fail((d, n))
    return r


def check_fixed_points(b: Budget) -> CheckResult:
    r = CheckResult("fixed points of J_n")
    for n in range(1, b.long_scan + 1):
        s = isqrt(n)
        fixed = [d for d in iv.initial_interval(n).elements if n // d == d]
        expected = [s] if n < s * (s + 1) else []
        r.checked += 1
        if fixed != expected:
            r.fail(n)
    return r


def check_consecutive(b: Budget) -> CheckResult:
    r = CheckResult("consecutive intervals differ by the divisor delta")
    prev = iv.initial_interval(1).elements
    for n in range(2, b.long_scan + 1):
        cur = iv.initial_interval(n).elements
        r.checked += 1
        if iv.consecutive_delta(n).apply(prev) != set(cur):
            r.fail(n)
        prev = cur
    return r


def check_consecutive_posets(b: Budget) -> CheckResult:
    r = CheckResult("consecutive large-quotient posets are isomorphic")
    for n in range(2, b.order_scan + 1):
        s = isqrt(n)
        if s * s == n:
            continue
        k = np.arange(1, s + 1)
        before, after = (n - 1) // k, n // k
        rel_before = (before[None, :] // before[:, None]) > (before[None, :] // (before[:, None] + 1))
        rel_after = (after[None, :] // after[:, None]) > (after[None, :] // (after[:, None] + 1))
        r.checked += 1
        if not np.array_equal(rel_before, rel_after):
            r.fail(n)
    return r


def check_incidences(b: Budget) -> CheckResult:
    r = CheckResult("incidence counts: divisor-sum identity and decomposition")
    for n in b.incidence_samples:
        st = iv.incidence_stats(n)
        sp = iv.split(n)
        r.checked += 1
        if st.z_plus != iv.divisor_summatory(sp.s):
            r.fail(("z_plus", n))
        if st.z_cross_plus_minus != (1 if sp.overlap else 0):
            r.fail(("z_cross_plus_minus", n))
        # sum of |Q[1,e]| over e in Q[1,n] counts every pair once
        if st.z_total != sum(len(iv.initial_interval(e)) for e in iv.initial_interval(n)):
            r.fail(("z_total", n))
    return r


def check_chain_bound(b: Budget) -> CheckResult:
    r = CheckResult("TC(d,n) <= (n/d)^alpha0 and |mu1(d,n)| <= (n/d)^alpha0")
    a0 = alpha0()
    ctx = mb.MobiusContext()
    for d, n in _random_pairs(b, b.random_n, b.seed + 3):
        bound = mb.envelope(d, n, a0)
        r.checked += 1
        tc = iv.count_chains(d, n).total
        m = mb.mu1(d, n, ctx)
        if tc > bound or abs(m) > bound:
            r.fail((d, n, tc, m))
    return r


def check_recursions(b: Budget) -> CheckResult:
    r = CheckResult("Moebius recursion and dual recursion vanish")
    ctx = mb.MobiusContext()
    for n in range(2, b.recursion_n + 1):
        q = iv.initial_interval(n).elements
        for d in q[:-1]:
            elems = iv.interval(d, n).elements
            r.checked += 1
            if sum(mb.mu1(d, e, ctx) for e in elems) != 0:
                r.fail(("recursion", d, n))
            if sum(mb.mu1(e, n, ctx) for e in elems) != 0:
                r.fail(("dual", d, n))
    return r


def check_hall(b: Budget) -> CheckResult:
    r = CheckResult("Hall chain sum equals mu1")
    ctx = mb.MobiusContext()
    for n in range(1, b.hall_n + 1):
        for d in iv.initial_interval(n).elements:
            r.checked += 1
            if mb.hall_chain_sum(d, n) != mb.mu1(d, n, ctx):
                r.fail((d, n))
    return r


def check_reduction(b: Budget) -> CheckResult:
    r = CheckResult("mu1(d,n) = mu(n // d) when d^2 >= n")
    ctx = mb.MobiusContext()
    cl = mb.classical_mobius(b.reduction_n)
    for n in range(1, b.reduction_n + 1):
        for d in iv.initial_interval(n).elements:
            if d * d < n:
                continue
            r.checked += 1
            if mb.mu1(d, n, ctx, shortcut=False) != cl.mu[n // d]:
                r.fail((d, n))
    return r


def check_upper_grid(b: Budget) -> CheckResult:
    r = CheckResult("mu1 on large quotients is mu of the index ratio")
    ns = (1000, 9999, 10**4) if b is FULL else (1000,)
    for n in ns:
        s = isqrt(n)
        cl = mb.classical_mobius(s)
        ctx = mb.MobiusContext()
        for k in range(1, s + 1):
            for l in range(1, k + 1):
                r.checked += 1
                expected = int(cl.mu[k // l]) if k % l == 0 else 0
                if mb.mu1(n // k, n // l, ctx, shortcut=False) != expected:
                    r.fail((n, k, l))
    return r


def check_table_matches_recursion(b: Budget, table: mb.MobiusTable | None = None) -> CheckResult:
    r = CheckResult("sieve table matches the memoized recursion")
    n_max = min(b.table_n, 2000)
    table = table if table is not None else mb.mu1_initial_table(n_max)
    ctx = mb.MobiusContext()
    for n in range(1, min(n_max, table.limit) + 1):
        r.checked += 1
        if int(table.mu1[n]) != mb.mu1(1, n, ctx):
            r.fail(n)
        if int(table.delta[n]) != int(table.mu1[n]) - int(table.mu1[n - 1]):
            r.fail(("delta", n))
    return r


def _largest_prime_factor(limit: int) -> np.ndarray:
    lpf = np.arange(limit + 1, dtype=np.int64)
    lpf[:2] = 1
    for p in range(2, limit + 1):
        if lpf[p] == p:
            lpf[p::p] = p  # later (larger) primes overwrite
    return lpf


def check_vanishing(b: Budget, table: mb.MobiusTable | None = None) -> CheckResult:
    r = CheckResult("differenced mu1 vanishes on odd squarefree n and large prime factors")
    table = table if table is not None else mb.mu1_initial_table(b.vanishing_n)
    limit = min(table.limit, b.vanishing_n)
    mu = mb.classical_mobius(limit).mu
    lpf = _largest_prime_factor(limit)
    for n in range(3, limit + 1):
        p = int(lpf[n])
        odd_sqfree = n % 2 == 1 and mu[n] != 0
        big_prime = (p - 1) ** 2 >= n  # p >= sqrt(n) + 1
        if odd_sqfree or big_prime:
            r.checked += 1
            if table.delta[n] != 0:
                r.fail(n)
    return r


def check_cancellation(b: Budget) -> CheckResult:
    r = CheckResult("mu1(1,2n) cancellation recursion")
    ctx = mb.MobiusContext()
    for n in range(2, b.cancellation_n + 1):
        s = 0
        for m in iv.initial_interval(2 * n).elements:
            if m * m > n and m < 2 * n and not _fq(m, n):
                s += mb.mu1(1, m, ctx)
        r.checked += 1
        if mb.mu1(1, 2 * n, ctx) != -s:
            r.fail(n)
    return r


def check_sign_changes(b: Budget, table: mb.MobiusTable | None = None) -> CheckResult:
    r = CheckResult("mu1(1,n) changes sign within 2 l^2 - 2")
    table = table if table is not None else mb.mu1_initial_table(b.sign_table)
    try:
        seq = mb.sign_change_sequence(table.limit, table)
    except RuntimeError as exc:
        r.fail(str(exc))
        return r
    e, v = seq.entries, seq.values
    r.checked = len(e)
    if e[0] != 2 or v[0] != -1:
        r.fail(("start", e[0], v[0]))
    for j in range(1, len(e)):
        if not (e[j - 1] < e[j] <= 2 * e[j - 1] ** 2 - 2) or v[j] * v[j - 1] >= 0:
            r.fail((e[j - 1], e[j]))
    return r


def check_classical(b: Budget) -> CheckResult:
    r = CheckResult("classical mu divisor sums vanish")
    limit = b.long_scan
    mu = mb.classical_mobius(limit).mu.astype(np.int64)
    sums = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        sums[d::d] += mu[d]
    r.checked = limit
    for n in np.flatnonzero(sums[2:] != 0)[:MAX_EXAMPLES]:
        r.fail(int(n) + 2)
    if sums[1] != 1:
        r.fail(1)
    return r


CHECKS = [
    check_characterizations,
    check_partial_order,
    check_sandwich,
    check_involution,
    check_cutting_partition,
    check_commute,
    check_semigroup,
    check_generators,
    check_initial_sizes,
    check_interval_upper,
    check_exact_family,
    check_lower_bounds,
    check_anti_isomorphism,
    check_never_order_preserving,
    check_gap_multiplicity,
    check_fixed_points,
    check_consecutive,
    check_consecutive_posets,
    check_incidences,
    check_chain_bound,
    check_recursions,
    check_hall,
    check_reduction,
    check_upper_grid,
    check_table_matches_recursion,
    check_vanishing,
    check_cancellation,
    check_sign_changes,
    check_classical,
]

TABLE_CHECKS = {check_table_matches_recursion, check_vanishing, check_sign_changes}


def run_checks(budget: Budget | str = "quick", table: mb.MobiusTable | None = None, only=None):
    """Run every check (or the named subset); yields results as they finish."""
    if isinstance(budget, str):
        budget = BUDGETS[budget]
    for check in CHECKS:
        if only is not None and check.__name__ not in only:
            continue
        t = time.perf_counter()
        if check in TABLE_CHECKS and table is not None:
            res = check(budget, table=table)
        else:
            res = check(budget)
        res.seconds = time.perf_counter() - t
        yield res
