"""Closed-form Sperner quantities and optimal antichain constructions.

The minimum ground size t1(n) admitting n pairwise-incomparable subsets is
min{t : C(t, floor(t/2)) >= n}; the optimal family takes the first n
floor(t/2)-subsets in lexicographic order.  All binomials are exact integer
arithmetic via math.comb.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, islice
from math import comb

from .core import IncidenceMatrix
from .errors import InvalidInputError
from .graphs import Graph, chromatic_number


def t1(n: int) -> int:
    """Smallest t >= 1 with C(t, floor(t/2)) >= n."""
    if n < 1:
        raise InvalidInputError(f"need n >= 1, got {n}")
    t = 1
    while comb(t, t // 2) < n:
        t += 1
    return t


def nbar(n: int) -> int:
    """Smallest central binomial coefficient >= n."""
    if n < 1:
        raise InvalidInputError(f"need n >= 1, got {n}")
    return comb(t1(n), t1(n) // 2)


def doubling_increment(n: int) -> int:
    """Predicted t1(2n) - t1(n): 1 below the half-next-central-binomial knee, else 2."""
    if n < 2:
        raise InvalidInputError(f"need n >= 2, got {n}")
    knee = nbar(nbar(n) + 1) // 2
    return 1 if n <= knee else 2


@dataclass(frozen=True)
class SpernerProfile:
    """The closed-form quantities for one family size, bundled."""

    n: int
    t1: int
    nbar: int
    doubling_increment: int


def profile(n: int) -> SpernerProfile:
    return SpernerProfile(n, t1(n), nbar(n), doubling_increment(n))


def half_subsets(t: int):
    """All floor(t/2)-subsets of [1, t] in lexicographic order, as bitmasks."""
    for combo in combinations(range(1, t + 1), t // 2):
        yield sum(1 << (x - 1) for x in combo)


def optimal_1cff(n: int) -> IncidenceMatrix:
    """Minimum-ground 1-disjunct matrix: first n half-size subsets of [1, t1(n)]."""
    if n < 2:
        raise InvalidInputError(f"need n >= 2, got {n}")
    t = t1(n)
    cols = tuple(islice(half_subsets(t), n))
    return IncidenceMatrix(t, cols)


def t_s(g: Graph) -> int:
    """Minimum rows of a g-Sperner matrix: t1 of the chromatic number.

    Isolated vertices carry no Sperner condition, so they are harmless here
    (their columns can repeat any class column).
    """
    if g.loops:
        raise InvalidInputError("Sperner quantities are defined for simple graphs")
    return t1(chromatic_number(g))


def g_sperner_witness(g: Graph) -> IncidenceMatrix:
    """A t_s(g)-row g-Sperner matrix: color classes get distinct half-size subsets."""
    if g.loops:
        raise InvalidInputError("Sperner quantities are defined for simple graphs")
    chi, coloring = chromatic_number(g, with_witness=True)
    t = t1(chi)
    class_cols = list(islice(half_subsets(t), chi))
    return IncidenceMatrix(t, tuple(class_cols[coloring[v]] for v in range(g.n)))
