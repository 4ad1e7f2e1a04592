"""Theorem-backed lower/upper bounds for the minimum ground size of a
cover-free family on a graph, plus the small-n table of 2-disjunct optima
and the maximum-product partition function.

Each bound carries the quantity it constrains ("t" for the full property,
"t_e" for the edge-only variant, "t_s" for the Sperner-only variant), a
short source tag, and an exactness flag.  A report aggregates the menu of
applicable theorems; consumers take max of lowers / min of uppers.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from math import comb
from typing import Optional

from .errors import InvalidInputError
from .graphs import Graph, chromatic_number
from .graycode import cycle_cff_rows
from .sperner import doubling_increment, t1

# ---------------------------------------------------------------------------
# Known minimum ground sizes for 2-disjunct matrices with n columns.
# Exact entries are literature values; the rest are upper bounds only.
# ---------------------------------------------------------------------------

_T2_TABLE: list[tuple[int, int, bool]] = [
    (3, 3, True), (4, 4, True), (5, 5, True), (6, 6, True), (7, 7, True),
    (8, 8, True), (9, 9, True), (10, 9, True), (11, 9, True), (12, 9, True),
    (13, 10, True), (17, 11, True), (20, 12, False), (26, 13, False),
    (28, 14, False), (42, 15, False), (48, 16, False), (68, 17, False),
    (69, 18, False), (76, 19, False), (90, 20, False), (120, 21, False),
    (176, 22, False), (253, 23, False),
]


def t2_upper(n: int) -> tuple[int, bool]:
    """Best known upper bound on the 2-disjunct minimum for n columns.

    Table entries interpolate by adding one row per extra column; beyond the
    table the 5.512*log2(n) estimate caps the growth.  The flag is True only
    for literature-exact entries.
    """
    if n < 3:
        raise InvalidInputError("2-disjunct minimum needs n >= 3")
    for m, v, exact in _T2_TABLE:
        if m == n:
            return v, exact
    best = None
    for m, v, _ in _T2_TABLE:
        cand = v if m >= n else v + (n - m)
        best = cand if best is None else min(best, cand)
    if n > _T2_TABLE[-1][0]:
        best = min(best, math.ceil(5.512 * math.log2(n)))
    return best, False


def t2_lower(n: int) -> int:
    """Valid lower bound on the 2-disjunct minimum: monotonicity from the
    largest exact table entry at or below n, and the 1-disjunct floor."""
    if n < 3:
        raise InvalidInputError("2-disjunct minimum needs n >= 3")
    best = t1(n)
    for m, v, exact in _T2_TABLE:
        if exact and m <= n:
            best = max(best, v)
    return best


def max_product_partition(m: int) -> tuple[int, tuple[int, ...]]:
    """Maximum product over integer partitions of m: all 3s with at most one
    4 or one 2 (OEIS A000792)."""
    if m < 2:
        raise InvalidInputError("need m >= 2")
    k, r = divmod(m, 3)
    if r == 0:
        parts = (3,) * k
    elif r == 1:
        parts = (3,) * (k - 1) + (4,)
    else:
        parts = (2,) + (3,) * k
    return math.prod(parts), parts


# ---------------------------------------------------------------------------
# Bound reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Bound:
    quantity: str  # "t" | "t_e" | "t_s"
    kind: str  # "lower" | "upper"
    value: int
    source: str
    exact: bool = False


@dataclass(frozen=True)
class BoundsReport:
    graph_id: str
    bounds: tuple[Bound, ...]

    def lower(self, quantity: str = "t") -> Optional[int]:
        vals = [b.value for b in self.bounds if b.quantity == quantity and b.kind == "lower"]
        return max(vals) if vals else None

    def upper(self, quantity: str = "t") -> Optional[int]:
        vals = [b.value for b in self.bounds if b.quantity == quantity and b.kind == "upper"]
        return min(vals) if vals else None

    def exact_value(self, quantity: str = "t") -> Optional[int]:
        lo, up = self.lower(quantity), self.upper(quantity)
        return lo if lo is not None and lo == up else None

    def is_consistent(self) -> bool:
        for q in ("t", "t_e", "t_s"):
            lo, up = self.lower(q), self.upper(q)
            if lo is not None and up is not None and lo > up:
                return False
        return True


def _pair(quantity: str, value: int, source: str) -> list[Bound]:
    """An exact value expressed as a matching lower/upper pair."""
    return [
        Bound(quantity, "lower", value, source, exact=True),
        Bound(quantity, "upper", value, source, exact=True),
    ]


def _central_binomial_x(n: int) -> Optional[int]:
    """x with n = C(x, floor(x/2)), if n is a central binomial coefficient."""
    x = 1
    while comb(x, x // 2) < n:
        x += 1
    return x if comb(x, x // 2) == n else None


# -- paths and cycles -------------------------------------------------------

def _short_ground_floor(n: int) -> Optional[int]:
    """Lower bounds from the exhaustive short-ground lemmas: a path CFF on
    4 ground points has at most 4 blocks, on 5 at most 6."""
    if n >= 7:
        return 6
    if n >= 5:
        return 5
    return None


def _path_interval(n: int) -> tuple[int, int]:
    lo = t1(n)
    x = _central_binomial_x(n)
    if x is not None and x >= 4:
        lo = max(lo, x + 1)
    floor = _short_ground_floor(n)
    if floor is not None:
        lo = max(lo, floor)
    up = cycle_cff_rows(n)
    if n <= 10:
        up = min(up, 6)  # explicit ten-block witness on six points
    return lo, up


def _cycle_interval(n: int) -> tuple[int, int]:
    lo, _ = _path_interval(n)  # a path is a subgraph of the cycle
    return lo, cycle_cff_rows(n)


def _path_bounds(n: int) -> list[Bound]:
    out: list[Bound] = [Bound("t", "lower", t1(n), "trivial-sperner")]
    x = _central_binomial_x(n)
    if x is not None and x >= 4:
        out.append(Bound("t", "lower", x + 1, "central-binomial"))
    floor = _short_ground_floor(n)
    if floor is not None:
        out.append(Bound("t", "lower", floor, "short-ground-lemma"))
    out.append(Bound("t", "upper", cycle_cff_rows(n), "gray-cycle"))
    if n <= 10:
        out.append(Bound("t", "upper", 6, "explicit-path10"))
    lo, up = _path_interval(n)
    if lo == up:
        out.append(Bound("t", "lower", lo, "interval", exact=True))
        out.append(Bound("t", "upper", up, "interval", exact=True))
    return out


def _cycle_bounds(n: int) -> list[Bound]:
    lo_path, _ = _path_interval(n)
    out = [
        Bound("t", "lower", t1(n), "trivial-sperner"),
        Bound("t", "lower", lo_path, "path-subgraph"),
        Bound("t", "upper", cycle_cff_rows(n), "gray-cycle"),
    ]
    x = _central_binomial_x(n)
    if x is not None and x >= 4:
        out.append(Bound("t", "lower", x + 1, "central-binomial"))
    lo, up = _cycle_interval(n)
    if lo == up:
        out.append(Bound("t", "lower", lo, "interval", exact=True))
        out.append(Bound("t", "upper", up, "interval", exact=True))
    return out


def _wheel_bounds(n: int) -> list[Bound]:
    """Wheel on n vertices: hub plus a rim cycle of length n-1."""
    rim = n - 1
    rim_lo, rim_up = _cycle_interval(rim)
    next_lo, _ = _cycle_interval(n)
    out = [
        Bound("t", "lower", t1(rim) + 1, "universal-vertex-lower"),
        Bound("t", "lower", rim_lo, "rim-subgraph"),
        Bound("t", "lower", next_lo, "hamilton-cycle"),
        Bound("t", "upper", rim_up + 1, "universal-vertex-upper"),
    ]
    # When the rim value is exact and sits one above its Sperner floor, the
    # universal-vertex increment is forced.
    if rim_lo == rim_up and rim_lo == t1(rim) + 1:
        out += _pair("t", rim_up + 1, "universal-increment-exact")
    return out


# -- family dispatch --------------------------------------------------------

def _star_bounds(n: int) -> list[Bound]:
    out = _pair("t", t1(n - 1) + 1, "star-exact")
    out += _pair("t_e", t1(n - 1), "star-ecff-exact")
    out += _pair("t_s", t1(2), "sperner-chromatic")
    out.append(Bound("t", "lower", t1(n), "trivial-sperner"))
    return out


def _matching_bounds(n: int) -> list[Bound]:
    m = n // 2
    out = [
        Bound("t", "lower", t1(n), "trivial-sperner"),
        Bound("t", "upper", t1(m) + 2, "pendant-two-rows"),
    ]
    x = _central_binomial_x(n)
    if x is not None and x >= 4:
        out.append(Bound("t", "lower", x + 1, "central-binomial"))
    if m >= 2:
        out += _pair("t_e", t1(m), "disjoint-edge-ecff-exact")
        if doubling_increment(m) == 2:
            out += _pair("t", t1(m) + 2, "doubling-gap-exact")
    out += _pair("t_s", t1(2), "sperner-chromatic")
    return out


def _windmill_bounds(k: int, n: int) -> list[Bound]:
    total = n * (k - 1) + 1
    out = [
        Bound("t", "lower", t1(total), "trivial-sperner"),
        Bound("t", "lower", t1((k - 1) * n) + 1, "star-subgraph"),
    ]
    if k == 3:
        out.append(Bound("t", "lower", t1(2 * n) + 1, "star-subgraph"))
        out.append(Bound("t", "upper", t1(n) + 3, "windmill-construction"))
        if doubling_increment(n) == 2:
            out += _pair("t", t1(n) + 3, "friendship-exact")
    else:
        v, exact = t2_upper(k - 1)
        out.append(Bound("t", "upper", t1(n) + v + 1, "windmill-construction"))
    out += _pair("t_s", t1(k), "sperner-chromatic")
    return out


def _complete_bounds(n: int) -> list[Bound]:
    if n < 3:
        return _pair("t", 2, "two-incomparable") if n == 2 else []
    v, exact = t2_upper(n)
    out = [
        Bound("t", "upper", v, "two-disjunct-table", exact=exact),
        Bound("t", "lower", t2_lower(n), "two-disjunct-table", exact=exact),
        Bound("t_e", "upper", v, "complete-ecff", exact=exact),
        Bound("t_e", "lower", t2_lower(n), "complete-ecff", exact=exact),
    ]
    out += _pair("t_s", t1(n), "sperner-chromatic")
    return out


def _bipartite_bounds(n1: int, n2: int) -> list[Bound]:
    if 1 in (n1, n2):
        return _star_bounds(n1 + n2)
    n = n1 + n2
    out = [
        Bound("t", "lower", t1(n), "trivial-sperner"),
        Bound("t", "upper", t1(n1) + t1(n2), "coloring-construction"),
    ]
    x = _central_binomial_x(n)
    if x is not None and x >= 4:
        out.append(Bound("t", "lower", x + 1, "central-binomial"))
    out += _pair("t_s", t1(2), "sperner-chromatic")
    return out


def _hamming_bounds(dims: tuple[int, ...]) -> list[Bound]:
    n = math.prod(dims)
    cyc_lo, _ = _cycle_interval(n) if n >= 3 else (None, None)
    out = [
        Bound("t", "lower", t1(n), "trivial-sperner"),
        Bound("t", "upper", sum(dims), "gray-transversal"),
    ]
    if cyc_lo is not None:
        out.append(Bound("t", "lower", cyc_lo, "hamilton-cycle"))
    x = _central_binomial_x(n)
    if x is not None and x >= 4:
        out.append(Bound("t", "lower", x + 1, "central-binomial"))
    out += _pair("t_s", t1(max(dims)), "sperner-chromatic")
    return out


def _known_chi(name: str, args: tuple[int, ...]) -> Optional[int]:
    if name == "path":
        return 2
    if name == "cycle":
        return 2 if args[0] % 2 == 0 else 3
    if name in ("star", "bipartite", "matching"):
        return 2
    if name == "complete":
        return args[0]
    if name == "wheel":
        n = args[0]
        if n == 3:
            return 3
        return 3 if (n - 1) % 2 == 0 else 4
    if name == "windmill":
        return args[0]
    if name == "sperner":
        z = args[0]
        return comb(z, z // 2)
    if name == "hamming":
        return max(args)
    return None


_TAG_RE = re.compile(r"^([a-z]+)\(([0-9,]+)\)$")


def _parse_tag(tag: Optional[str]) -> Optional[tuple[str, tuple[int, ...]]]:
    if not tag:
        return None
    m = _TAG_RE.match(tag)
    if not m:
        inner = None
        if tag.startswith("universal(") and tag.endswith(")"):
            inner = _parse_tag(tag[len("universal("):-1])
        return ("universal", inner) if inner else None
    return m.group(1), tuple(int(x) for x in m.group(2).split(","))


def _single_edge_component(g: Graph) -> bool:
    """Does g have a connected component that is exactly one edge?"""
    seen = [False] * g.n
    for s in range(g.n):
        if seen[s] or g.degree(s) == 0:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        if len(comp) == 2:
            return True
    return False


def bounds_for(g: Graph) -> BoundsReport:
    """All applicable theorem bounds for the graph.

    Family-tagged graphs get their family's menu; untagged simple graphs get
    the trivial bounds, the minimum-degree relations between the full and
    edge-only quantities, and the chromatic Sperner value when the exact
    coloring solver can reach the graph.
    """
    graph_id = g.family or f"graph(n={g.n},m={len(g.edges)})"
    parsed = _parse_tag(g.family)

    if parsed and parsed[0] == "loops" and not g.edges:
        b = _pair("t", t1(g.n), "loops-exact") + _pair("t_e", t1(g.n), "loops-exact")
        return BoundsReport(graph_id, tuple(b))

    if g.loops:
        return BoundsReport(graph_id, ())

    if g.isolated_vertices:
        stripped, _ = g.without_isolated()
        if stripped.n < 3:
            return BoundsReport(graph_id, ())
        inner = bounds_for(stripped)
        return BoundsReport(graph_id, inner.bounds)

    n = g.n
    out: list[Bound] = []
    name_args = parsed if parsed else (None, None)
    name, args = name_args

    if name == "universal":
        inner_name, inner_args = args
        if inner_name == "star":
            sn = inner_args[0]
            out += _pair("t", t1(sn - 1) + 2, "star-universal-exact")
        elif inner_name == "cycle":
            out += _wheel_bounds(inner_args[0] + 1)
        elif inner_name == "complete":
            out += _complete_bounds(inner_args[0] + 1)
        else:
            name = None
    elif name == "path":
        out += _path_bounds(n)
        out += _pair("t_s", t1(2), "sperner-chromatic")
    elif name == "cycle":
        out += _cycle_bounds(n)
        out += _pair("t_s", t1(_known_chi("cycle", args)), "sperner-chromatic")
    elif name == "wheel" and n == 3:
        out += _complete_bounds(3)
    elif name == "wheel":
        out += _wheel_bounds(n)
        out += _pair("t_s", t1(_known_chi("wheel", args)), "sperner-chromatic")
    elif name == "star":
        out += _star_bounds(n)
    elif name == "complete":
        out += _complete_bounds(n)
    elif name == "bipartite":
        out += _bipartite_bounds(*args)
    elif name == "matching":
        out += _matching_bounds(n)
    elif name == "windmill":
        k = args[0]
        if k == 2:
            out += _star_bounds(n)
        else:
            out += _windmill_bounds(*args)
    elif name == "sperner":
        out += _pair("t_s", args[0], "sperner-graph-exact")
        if not g.isolated_vertices:
            out.append(Bound("t", "lower", t1(n), "trivial-sperner"))
    elif name == "hamming":
        out += _hamming_bounds(args)

    generic = name is None
    if generic:
        out.append(Bound("t", "lower", t1(n), "trivial-sperner"))
        if n >= 3:
            v, exact = t2_upper(n)
            out.append(Bound("t", "upper", v, "trivial-two-disjunct", exact=False))
        x = _central_binomial_x(n)
        if x is not None and x >= 4:
            out.append(Bound("t", "lower", x + 1, "central-binomial"))
        if n <= 16:
            try:
                out += _pair("t_s", t1(chromatic_number(g)), "sperner-chromatic")
            except Exception:
                pass

    # Minimum-degree relations between the full and edge-only quantities.
    t_lo = max((b.value for b in out if b.quantity == "t" and b.kind == "lower"), default=None)
    t_up = min((b.value for b in out if b.quantity == "t" and b.kind == "upper"), default=None)
    has_te = any(b.quantity == "t_e" for b in out)
    if not has_te and g.edges:
        if t_up is not None:
            out.append(Bound("t_e", "upper", t_up, "ecff-below-cff"))
        if t_lo is not None:
            if g.min_degree() >= 2:
                out.append(Bound("t_e", "lower", t_lo, "min-degree-two"))
            elif not _single_edge_component(g):
                out.append(Bound("t_e", "lower", t_lo - 1, "pendant-one-row"))
            else:
                out.append(Bound("t_e", "lower", t_lo - 2, "pendant-two-rows"))

    return BoundsReport(graph_id, tuple(out))
