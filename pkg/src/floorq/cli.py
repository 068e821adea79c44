"""``floorq`` command-line front end.

Exit codes: 0 success, 1 verification failure or runtime error, 2 usage error.
"""

import argparse
import contextlib
import sys
import time

from . import intervals as iv
from . import mobius as mb
from . import relation as rel
from . import semigroup as sg
from ._int64 import INT64_MAX
from .verify import BUDGETS, run_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MAX_SCAN = 10**7
_SCANNING = {
    rel.Characterization.CUTTING,
    rel.Characterization.COVERING,
    rel.Characterization.INTERSECTION,
}


class UsageError(Exception):
    pass


def _pos64(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a decimal integer, got {text!r}") from None
    if not 1 <= value <= INT64_MAX:
        raise argparse.ArgumentTypeError(f"{value} is outside 1..2^63-1")
    return value


@contextlib.contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
        return
    try:
        fh = open(path, "w", newline="\n", encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot open {path}: {exc.strerror}") from exc
    with fh:
        yield fh


def _require_format(args, allowed, default):
    fmt = args.format or default
    if fmt not in allowed:
        raise UsageError(f"{args.cmd} supports --format {'/'.join(allowed)}, not {fmt}")
    return fmt


def _fmt_set(items) -> str:
    return "{" + ", ".join(str(i) for i in items) + "}"


def cmd_rel(args) -> int:
    d, n = args.d, args.n
    w = rel.cutting_set(d, n)
    k_star = rel.canonical_cutting_length(d, n)
    if w.cardinality <= 12:
        ks = _fmt_set(w.members())
    else:
        ks = f"({w.k_lo}, {w.k_hi}]"
    verdict = f"{d} ⪯₁ {n}" if w.related else f"{d} ⋠₁ {n}"
    print(f"{verdict}; K = {ks}; k* = {k_star if k_star is not None else 'none'}")
    print(f"cutting set: ({w.k_lo}, {w.k_hi}], cardinality {w.cardinality}")
    for variant in rel.Characterization:
        if variant in _SCANNING and n // d > MAX_SCAN:
            print(f"  {variant.value:<20} skipped (scan over {n // d} lengths)")
            continue
        print(f"  {variant.value:<20} {rel.characterization(d, n, variant)}")
    return EXIT_OK


def cmd_semigroup(args) -> int:
    info = sg.describe(args.d)
    print(f"M({info.d}): frobenius {info.frobenius}, gaps {info.gap_count}")
    gens = info.generators
    shown = gens if len(gens) <= 20 else gens[:10] + ("...",) + gens[-3:]
    print(f"generators: <{', '.join(str(g) for g in shown)}>")
    if args.gaps:
        print("gap set: " + _fmt_set(sg.enumerate_gaps(args.d)))
    return EXIT_OK


def cmd_interval(args) -> int:
    fmt = _require_format(args, ("csv", "plain"), "plain")
    view = iv.interval(args.d, args.n)
    with _output(args.out) as fh:
        if fmt == "csv":
            fh.write(iv.to_csv(view))
        else:
            fh.write(f"Q[{args.d},{args.n}] size {len(view)}: {_fmt_set(view.elements)}\n")
    return EXIT_OK


def cmd_split(args) -> int:
    sp = iv.split(args.n)
    print(f"Q-({sp.n}) = {_fmt_set(sp.q_minus)}")
    print(f"Q+({sp.n}) = {_fmt_set(sp.q_plus)}")
    print(f"overlap: {sp.overlap if sp.overlap is not None else 'none'}")
    return EXIT_OK


def cmd_hasse(args) -> int:
    _require_format(args, ("dot",), "dot")
    if args.n > iv.MAX_HASSE_N:
        raise UsageError(f"hasse is limited to n <= {iv.MAX_HASSE_N}")
    view = iv.initial_interval(args.n)
    with _output(args.out) as fh:
        fh.write(iv.to_dot(view))
    return EXIT_OK


def cmd_incidences(args) -> int:
    st = iv.incidence_stats(args.n)
    main = 16 / 3 * args.n**0.75
    print(
        f"Z(Q[1,{st.n}]) = {st.z_total}  (16/3 n^(3/4) = {main:.1f}, ratio {st.z_total / main:.4f})"
    )
    print(f"Z(Q-) = {st.z_minus}, Z(Q+) = {st.z_plus}")
    print(f"Z(Q-,Q+) = {st.z_cross_minus_plus}, Z(Q+,Q-) = {st.z_cross_plus_minus}")
    return EXIT_OK


def cmd_chains(args) -> int:
    cc = iv.count_chains(args.d, args.n)
    print(f"TC({cc.d},{cc.n}) = {cc.total}")
    print("by length: " + ", ".join(f"{i}:{c}" for i, c in enumerate(cc.by_length)))
    return EXIT_OK


def cmd_mu1(args) -> int:
    print(mb.mu1(args.d, args.n))
    return EXIT_OK


def cmd_mobius_table(args) -> int:
    fmt = _require_format(args, ("csv", "plain"), "csv")
    if args.limit > mb.MAX_TABLE:
        raise UsageError(f"table limit is capped at {mb.MAX_TABLE}")
    t0 = time.perf_counter()
    table = mb.mu1_initial_table(args.limit)
    elapsed = time.perf_counter() - t0
    to_stdout = args.out is None or args.out == "-"
    if fmt == "csv":
        with _output(args.out) as fh:
            mb.write_table_csv(table, fh)
    g = mb.growth_scan(table, args.beta)
    run = mb.longest_sign_run(table)
    above = mb.exceeds_power(table, args.beta)
    report = sys.stderr if (fmt == "csv" and to_stdout) else sys.stdout
    print(
        f"limit {table.limit}: max |mu1| = {g.max_abs} at n = {g.argmax_n}; "
        f"longest constant-sign run [{run.start}, {run.end}] (length {run.length}, sign {run.sign:+d}); "
        f"{len(above)} n with |mu1| > n^{args.beta}"
        + (f" (first {above[0]})" if above else "")
        + f"; built in {elapsed:.2f}s",
        file=report,
    )
    return EXIT_OK


def cmd_signs(args) -> int:
    seq = mb.sign_change_sequence(args.limit)
    for ell, v in zip(seq.entries, seq.values):
        print(f"{ell},{v}")
    return EXIT_OK


def cmd_scan_width(args) -> int:
    rows = iv.scan_width(args.w, args.a_max)
    with _output(args.out) as fh:
        fh.write("a,size\n")
        fh.writelines(f"{a},{m}\n" for a, m in rows)
    return EXIT_OK


def cmd_verify(args) -> int:
    failed = 0
    for res in run_checks(BUDGETS[args.budget]):
        status = "PASS" if res.passed else "FAIL"
        print(f"{status} {res.name} [{res.checked} checked, {res.seconds:.2f}s]")
        if not res.passed:
            failed += 1
            print(f"     counterexamples: {res.counterexamples}")
    print(f"{'all checks passed' if not failed else f'{failed} check(s) failed'}")
    return EXIT_OK if not failed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="floorq", description="Floor quotient order toolkit")
    p.add_argument("--out", help="output file for CSV/DOT (default stdout)")
    p.add_argument("--format", choices=("csv", "dot", "plain"))
    sub = p.add_subparsers(dest="cmd", required=True)

    def add(name, func, *params, help=None):
        sp = sub.add_parser(name, help=help)
        for param in params:
            sp.add_argument(param, type=_pos64)
        sp.add_argument("--out", default=argparse.SUPPRESS)
        sp.add_argument("--format", choices=("csv", "dot", "plain"), default=argparse.SUPPRESS)
        sp.set_defaults(func=func)
        return sp

    add("rel", cmd_rel, "d", "n", help="test d <=_1 n with all characterizations")
    add("semigroup", cmd_semigroup, "d", help="floor-multiple semigroup M(d)").add_argument(
        "--gaps", action="store_true"
    )
    add("interval", cmd_interval, "d", "n", help="elements of Q[d,n]")
    add("split", cmd_split, "n", help="small/large quotient halves of Q[1,n]")
    add("hasse", cmd_hasse, "n", help="Hasse diagram of Q[1,n] as DOT")
    add("incidences", cmd_incidences, "n", help="incidence counts on Q[1,n]")
    add("chains", cmd_chains, "d", "n", help="chain counts from d to n")
    add("mu1", cmd_mu1, "d", "n", help="Moebius value mu1(d,n)")
    add("mobius-table", cmd_mobius_table, "limit", help="mu1(1,n) table as CSV").add_argument(
        "--beta", type=float, default=0.6
    )
    add("signs", cmd_signs, "limit", help="sign-change sequence of mu1(1,n)")
    add("scan-width", cmd_scan_width, "w", "a_max", help="sizes |Q[a, a*w]| for a = 1..a_max")
    v = sub.add_parser("verify", help="run the property-check suite")
    v.add_argument("--budget", choices=tuple(BUDGETS), default="quick")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, TypeError) as exc:
        print(f"floorq {args.cmd}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OverflowError, MemoryError, OSError) as exc:
        print(f"floorq {args.cmd}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
