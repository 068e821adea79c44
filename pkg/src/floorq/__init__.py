"""Exact computations on the floor quotient order ``d <=_1 n`` (``d == n // k``)."""

from .intervals import (
    ChainCount,
    IncidenceStats,
    InitialSplit,
    IntervalView,
    SetDelta,
    consecutive_delta,
    count_chains,
    covering_edges,
    gap,
    incidence_stats,
    initial_interval,
    interval,
    multiplicity,
    split,
    width,
)
from .mobius import (
    MobiusContext,
    MobiusTable,
    classical_mobius,
    hall_chain_sum,
    mu1,
    mu1_initial_table,
    sign_change_sequence,
)
from .relation import (
    Characterization,
    QuotientWitness,
    canonical_cutting_length,
    characterization,
    cutting_set,
    dilated_floor_commute_check,
    floor_reciprocal,
    is_floor_quotient,
)
from .semigroup import SemigroupInfo, describe, enumerate_gaps, is_floor_multiple
from .zeta import alpha0

__version__ = "0.1.0"
