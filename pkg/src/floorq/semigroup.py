"""The numerical semigroup ``M(d)`` of floor multiples of ``d``."""

from dataclasses import dataclass

from ._int64 import pos_int

MAX_GAP_D = 2**16


@dataclass(frozen=True)
class SemigroupInfo:
    """Closed-form description of ``M(d) = {n : d <=_1 n}``.

    ``frobenius`` is ``d**2 - 1``; for ``d == 1`` the semigroup is all of the
    positive integers and ``frobenius`` is reported as 0 to keep the field
    non-negative.
    """

    d: int
    frobenius: int
    gap_count: int
    generators: tuple[int, ...]


def is_floor_multiple(d: int, n: int) -> bool:
    d = pos_int(d, "d")
    n = pos_int(n, "n")
    if n >= d * d:
        return True
    k, j = divmod(n, d)
    return j < k


def describe(d: int) -> SemigroupInfo:
    d = pos_int(d, "d")
    return SemigroupInfo(
        d=d,
        frobenius=d * d - 1 if d > 1 else 0,
        gap_count=(d - 1) * (d + 2) // 2,
        generators=tuple(i * (d + 1) - 1 for i in range(1, d + 1)),
    )


def enumerate_gaps(d: int) -> list[int]:
    d = pos_int(d, "d")
    if d > MAX_GAP_D:
        raise ValueError(f"enumerate_gaps is limited to d <= {MAX_GAP_D} (got {d})")
    # below d**2, n = k*d + j is a gap exactly when j >= k
    return [k * d + j for k in range(d) for j in range(k, d) if k * d + j >= 1]


def representable(generators, limit: int) -> list[bool]:
    """Table ``t`` with ``t[m]`` true iff ``m`` is a non-negative integer
    combination of ``generators`` (``0 <= m <= limit``)."""
    table = [False] * (limit + 1)
    table[0] = True
    for g in generators:
        for m in range(g, limit + 1):
            if table[m - g]:
                table[m] = True
    return table
