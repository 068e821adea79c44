import math
import random
from fractions import Fraction
from math import isqrt

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from floorq.intervals import (
    consecutive_delta,
    count_chains,
    covering_edges,
    divisor_summatory,
    gap,
    incidence_stats,
    initial_interval,
    interval,
    interval_size,
    multiplicity,
    quotient_interval_sizes,
    scan_width,
    split,
    to_csv,
    to_dot,
    width,
)
from oracles import brute_interval, chains, fq, incidence_pairs, quotients, sigma0

HASSE16_EDGES = [(1, 2), (1, 3), (2, 4), (2, 5), (3, 16), (4, 8), (5, 16), (8, 16)]
Q168 = [*range(1, 13), 14, 15, 16, 18, 21, 24, 28, 33, 42, 56, 84, 168]

# frozen from tests/oracles.chains over n = 1..40
TC_1N = [1, 1, 1, 2, 2, 3, 3, 4, 5, 5, 5, 8, 8, 8, 8, 11, 11, 13, 13, 15,
         15, 15, 15, 20, 22, 22, 23, 23, 23, 26, 26, 30, 30, 30, 30, 39, 39, 39, 39, 42]


def test_initial_interval_examples():
    assert initial_interval(16).elements == (1, 2, 3, 4, 5, 8, 16)
    assert initial_interval(10).elements == (1, 2, 3, 5, 10)
    assert initial_interval(1).elements == (1,)
    assert list(initial_interval(168).elements) == Q168


def test_initial_interval_matches_brute():
    for n in range(1, 1500):
        assert list(initial_interval(n).elements) == quotients(n)


def test_interval_view_protocol():
    v = initial_interval(16)
    assert len(v) == 7 and 5 in v and 6 not in v
    assert list(v) == list(v.elements)
    assert v.index[8] == 5


@pytest.mark.parametrize(
    "n, minus, plus, overlap",
    [
        (12, {1, 2, 3}, {4, 6, 12}, None),
        (11, {1, 2, 3}, {3, 5, 11}, 3),
        (168, set(range(1, 13)), {14, 15, 16, 18, 21, 24, 28, 33, 42, 56, 84, 168}, None),
        (1, {1}, {1}, 1),
    ],
)
def test_split_examples(n, minus, plus, overlap):
    sp = split(n)
    assert set(sp.q_minus) == minus
    assert set(sp.q_plus) == plus
    assert sp.overlap == overlap


def test_split_union_and_overlap():
    for n in range(1, 3000):
        sp = split(n)
        s = isqrt(n)
        assert set(sp.q_minus) | set(sp.q_plus) == set(initial_interval(n).elements)
        inter = set(sp.q_minus) & set(sp.q_plus)
        assert inter == ({s} if s * s <= n < s * (s + 1) else set())
        assert sp.overlap == (s if inter else None)


@pytest.mark.parametrize(
    "d, n, elems",
    [(2, 20, [2, 4, 5, 6, 10, 20]), (9, 90, [9, 18, 45, 90]), (3, 30, None), (6, 16, [])],
)
def test_interval_examples(d, n, elems):
    got = list(interval(d, n).elements)
    assert got == brute_interval(d, n)
    if elems is not None:
        assert got == elems


def test_interval_size_example():
    assert interval_size(10, 10000) == 145


def test_interval_matches_brute():
    for n in range(1, 150):
        for d in range(1, n + 1):
            assert list(interval(d, n).elements) == brute_interval(d, n)
    for n in (360, 1000, 1001):
        for d in quotients(n):
            assert list(interval(d, n).elements) == brute_interval(d, n)


def test_quotient_interval_sizes():
    for n in (1, 2, 16, 97, 168, 1000):
        sizes = quotient_interval_sizes(n)
        assert set(sizes) == set(quotients(n))
        for d, m in sizes.items():
            assert m == interval_size(d, n)


@pytest.mark.parametrize("a, size", [(1, 5), (2, 6), (3, 6), (4, 5), (9, 4)])
def test_width_ten_family(a, size):
    assert interval_size(a, 10 * a) == size


def test_scan_width():
    assert [m for _, m in scan_width(10, 4)] == [5, 6, 6, 5]
    assert all(m == 1 for _, m in scan_width(1, 30))
    assert scan_width(1000, 10)[-1] == (10, 145)
    with pytest.raises(OverflowError):
        scan_width(2**62, 4)


def test_width():
    assert width(10, 10000) == 1000
    assert width(7, 7) == 1
    assert width(3, 30) == Fraction(10)
    assert width(4, 10) == Fraction(5, 2)


def test_gap_multiplicity_examples():
    assert gap(5, 10) == 2
    assert multiplicity(2, 10) == 2
    assert multiplicity(10, 10) == 1
    assert all(gap(1, n) == 1 for n in range(1, 200))


def test_gap_multiplicity_brute():
    for n in range(1, 400):
        q = quotients(n)
        for i, d in enumerate(q):
            assert gap(d, n) == d - (q[i - 1] if i else 0)
            assert multiplicity(d, n) == sum(1 for k in range(1, n + 1) if n // k == d)


def test_gap_multiplicity_interchange():
    for n in range(1, 2000):
        for d in initial_interval(n).elements:
            assert gap(n // d, n) == multiplicity(d, n)
            assert multiplicity(n // d, n) == gap(d, n)


@pytest.mark.parametrize("fn", [gap, multiplicity])
def test_gap_multiplicity_off_quotient(fn):
    with pytest.raises(ValueError, match="not a floor quotient"):
        fn(6, 16)
    with pytest.raises(ValueError):
        fn(17, 16)


def test_covering_edges_small():
    assert covering_edges(initial_interval(16)) == HASSE16_EDGES
    assert covering_edges(initial_interval(9)) == [(1, 2), (1, 3), (2, 4), (3, 9), (4, 9)]
    assert covering_edges(initial_interval(1)) == []
    assert covering_edges(interval(7, 7)) == []


def _brute_covers(elems):
    out = []
    for a in elems:
        for b in elems:
            if a < b and fq(a, b) and not any(a < c < b and fq(a, c) and fq(c, b) for c in elems):
                out.append((a, b))
    return sorted(out)


def test_covering_edges_brute():
    for n in list(range(1, 120)) + [168, 360, 1000]:
        assert covering_edges(initial_interval(n)) == _brute_covers(quotients(n))
    for d, n in [(2, 20), (3, 100), (5, 300), (10, 10000)]:
        v = interval(d, n)
        assert covering_edges(v) == _brute_covers(list(v.elements))


def test_covering_edges_guards():
    with pytest.raises(ValueError):
        covering_edges(interval(6, 16))
    with pytest.raises(ValueError):
        covering_edges(initial_interval(10**6 + 1))


def test_to_dot():
    dot = to_dot(initial_interval(16))
    assert dot.startswith('digraph "Q[1,16]" {')
    assert dot.rstrip().endswith("}")
    assert dot.count("{") == dot.count("}") == 1
    edges = [line for line in dot.splitlines() if "->" in line]
    assert edges == [f"  {a} -> {b};" for a, b in HASSE16_EDGES]
    single = to_dot(initial_interval(1))
    assert "->" not in single and "  1;" in single


def test_to_csv():
    assert to_csv(initial_interval(10)) == "element\n1\n2\n3\n5\n10\n"


@pytest.mark.parametrize(
    "n, total", [(1, 1), (2, 3), (10, 13), (12, 18), (16, 22), (100, 116)]
)
def test_incidence_totals(n, total):
    # frozen from tests/oracles.incidence_pairs
    assert incidence_stats(n).z_total == total


def test_incidence_brute():
    for n in list(range(1, 200)) + [999, 1000, 1056, 1089, 1122]:
        st_ = incidence_stats(n)
        sp = split(n)
        assert st_.z_total == incidence_pairs(quotients(n), quotients(n))
        assert st_.z_minus == incidence_pairs(sp.q_minus, sp.q_minus)
        assert st_.z_plus == incidence_pairs(sp.q_plus, sp.q_plus)
        assert st_.z_cross_minus_plus == incidence_pairs(sp.q_minus, sp.q_plus)
        assert st_.z_cross_plus_minus == incidence_pairs(sp.q_plus, sp.q_minus)
        assert st_.z_plus == sum(sigma0(k) for k in range(1, sp.s + 1))
        assert st_.z_cross_plus_minus in (0, 1)
        assert st_.z_cross_plus_minus == (1 if sp.overlap else 0)


def test_incidence_decomposition():
    # with overlap {s}: inclusion-exclusion over the shared element
    for n in range(1, 3000):
        st_ = incidence_stats(n)
        sp = split(n)
        parts = st_.z_minus + st_.z_plus + st_.z_cross_minus_plus + st_.z_cross_plus_minus
        if sp.overlap is None:
            assert st_.z_total == parts
        else:
            s = sp.overlap
            minus_s = incidence_pairs(sp.q_minus, [s]) + incidence_pairs([s], sp.q_minus)
            plus_s = incidence_pairs(sp.q_plus, [s]) + incidence_pairs([s], sp.q_plus)
            assert st_.z_total == parts - minus_s - plus_s + 1


def test_incidence_guard():
    with pytest.raises(ValueError):
        incidence_stats(10**8 + 1)


def test_divisor_summatory():
    for x in range(0, 300):
        assert divisor_summatory(x) == sum(sigma0(k) for k in range(1, x + 1))


def test_count_chains_examples():
    assert count_chains(7, 7).total == 1 and count_chains(7, 7).by_length == (1,)
    c = count_chains(1, 4)
    assert c.total == 2 and c.by_length == (0, 1, 1)
    c = count_chains(1, 16)
    assert c.total == 11 and c.by_length == (0, 1, 5, 4, 1)
    assert count_chains(6, 16).total == 0


def test_count_chains_frozen():
    assert [count_chains(1, n).total for n in range(1, 41)] == TC_1N


def test_count_chains_brute():
    for n in range(1, 90):
        for d in quotients(n):
            got = count_chains(d, n)
            want = chains(d, n)
            assert got.total == len(want)
            hist = [0] * (max(len(c) for c in want))
            for c in want:
                hist[len(c) - 1] += 1
            assert got.by_length == tuple(hist)


def test_count_chains_large():
    c = count_chains(1, 10**6)
    assert c.total == 1187446086
    assert c.total <= (10**6) ** 1.7287
    assert len(c.by_length) <= (10**6).bit_length()


def test_count_chains_overflow(monkeypatch):
    import floorq.intervals as iv

    monkeypatch.setattr(iv, "_CHAIN_CEILING", 1000.0)
    with pytest.raises(OverflowError, match="exceeds the 64-bit range"):
        count_chains(1, 10**4)


def test_count_chains_work_guards():
    with pytest.raises(ValueError):
        count_chains(1, 10**12 + 1)
    with pytest.raises(ValueError):
        count_chains(1, 10**9)
    assert count_chains(10**5, 10**12).total > 0


def test_consecutive_delta_examples():
    d2 = consecutive_delta(2)
    assert d2.added == (2,) and d2.removed == ()
    d9 = consecutive_delta(9)
    assert set(d9.added) == {3, 9} and set(d9.removed) == {8}
    d12 = consecutive_delta(12)
    assert set(d12.apply(initial_interval(11).elements)) == {1, 2, 3, 4, 6, 12}
    assert 3 not in d12.removed
    with pytest.raises(ValueError):
        consecutive_delta(1)


def test_consecutive_delta_reconstruction():
    prev = set(quotients(1))
    for n in range(2, 3000):
        cur = set(quotients(n))
        d = consecutive_delta(n)
        assert set(d.removed) == prev - cur
        assert set(d.added) == cur - prev
        prev = cur


@given(st.integers(1, 10**5))
def test_size_sandwich_property(n):
    m = len(initial_interval(n))
    assert 2 * math.sqrt(n) - 2 < m < 2 * math.sqrt(n)


@settings(max_examples=300)
@given(st.integers(1, 10**6), st.data())
def test_upper_bound_property(n, data):
    d = data.draw(st.one_of(st.integers(1, n), st.sampled_from(initial_interval(n).elements)))
    m = interval_size(d, n)
    assert 8 * m**3 * d * d <= 27 * n * n


@settings(max_examples=200)
@given(st.integers(2, 10**5), st.data())
def test_interval_subset_property(n, data):
    d = data.draw(st.sampled_from(initial_interval(n).elements))
    view = interval(d, n)
    assert view.elements[0] == d and view.elements[-1] == n
    for e in view.elements:
        assert fq(d, e) if e < 300 else (e // d > e // (d + 1))


def test_exact_family():
    for d in range(1, 51):
        assert 2 * interval_size(d, d**4) == 3 * d * d - d


def test_lower_bounds_small():
    for n in range(1, 10**4 + 1, 7):
        s = isqrt(n)
        for d, m in quotient_interval_sizes(n).items():
            x = n / (d * d)
            if d**4 <= n:
                assert m >= 1.5 * math.sqrt(n) - 0.5 * n**0.25 - 1 - 1e-9
            if n <= d**4 and d * d <= n:
                assert m >= 1.5 * x - 1.5 * math.sqrt(x) - 1e-9
            if d * d >= n:
                k = n // d
                assert fq(k, n) or n < 300
                assert m == sigma0(k)
        assert s >= 1


def test_anti_isomorphism():
    for n in range(1, 1200):
        s = isqrt(n)
        for j in range(1, s + 1):
            for l in range(1, s + 1):
                a, b = n // j, n // l
                assert (b // a > b // (a + 1)) == (j % l == 0)


def test_never_order_preserving():
    for n in range(1, 500):
        q = quotients(n)
        for a in q:
            for b in q:
                if a < b and fq(a, b):
                    assert not fq(n // a, n // b)


def test_fixed_points():
    for n in range(1, 10**4):
        s = isqrt(n)
        fixed = [d for d in initial_interval(n).elements if n // d == d]
        assert fixed == ([s] if n < s * (s + 1) else [])


def _plus_relation(n):
    q = n // np.arange(1, isqrt(n) + 1)
    return (q[None, :] // q[:, None]) > (q[None, :] // (q[:, None] + 1))


def test_consecutive_poset_isomorphism():
    rng = random.Random(3)
    for n in list(range(2, 2000)) + [rng.randint(2, 10**6) for _ in range(100)]:
        s = isqrt(n)
        if s * s == n:
            continue
        assert np.array_equal(_plus_relation(n - 1), _plus_relation(n))
