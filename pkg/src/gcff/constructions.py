"""Explicit cover-free-family constructions beyond the Gray-code route.

Layout conventions shared with the graph generators: hub vertices occupy
column 0, clique/leaf columns follow in vertex order, and stacked blocks
appear top-down in construction order, so test fixtures can be bit-exact.
"""

from __future__ import annotations

from typing import Optional

from .core import (
    IncidenceMatrix,
    SetSystem,
    is_d_disjunct,
    is_g_cff,
    matrix_from_sets,
)
from .errors import InvalidInputError
from .graphs import Graph, chromatic_number, matching, path
from .sperner import optimal_1cff


def _ones(t: int) -> int:
    return (1 << t) - 1


def from_coloring(g: Graph, coloring: Optional[list[int]] = None) -> IncidenceMatrix:
    """Block-diagonal construction over the color classes of a proper coloring.

    Each class of size n_i > 1 contributes an optimal 1-disjunct block on its
    own rows; singleton classes contribute one row with a single 1.  Without
    an explicit coloring the exact chromatic witness is used.  Classes are
    laid out largest first, ties broken by lowest vertex id.
    """
    if g.loops:
        raise InvalidInputError("coloring construction needs a simple graph")
    if coloring is None:
        _, coloring = chromatic_number(g, with_witness=True)
    if len(coloring) != g.n:
        raise InvalidInputError("coloring must assign a color to every vertex")
    for u, v in g.edges:
        if coloring[u] == coloring[v]:
            raise InvalidInputError(f"coloring is not proper on edge ({u},{v})")

    classes: dict[int, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(coloring[v], []).append(v)
    ordered = sorted(classes.values(), key=lambda vs: (-len(vs), min(vs)))

    cols = [0] * g.n
    row = 0
    for vs in ordered:
        if len(vs) == 1:
            cols[vs[0]] |= 1 << row
            row += 1
            continue
        block = optimal_1cff(len(vs))
        for j, v in enumerate(sorted(vs)):
            cols[v] |= block.cols[j] << row
        row += block.t
    return IncidenceMatrix(row, tuple(cols))


def star_cff(n: int) -> IncidenceMatrix:
    """Optimal star CFF: zero hub column over an optimal 1-disjunct leaf block,
    plus one row that is 1 only at the hub."""
    if n < 3:
        raise InvalidInputError("star construction needs n >= 3")
    leaves = optimal_1cff(n - 1)
    t = leaves.t
    cols = [1 << t] + [c for c in leaves.cols]
    return IncidenceMatrix(t + 1, tuple(cols))


def add_universal(m: IncidenceMatrix, g: Graph) -> IncidenceMatrix:
    """Extend a verified g-CFF to one for g plus a universal vertex (column 0)."""
    if g.loops or g.isolated_vertices:
        raise InvalidInputError("universal extension needs a simple graph with no isolated vertex")
    if not is_g_cff(m, g):
        raise InvalidInputError("input matrix fails g-CFF verification")
    cols = [1 << m.t] + [c for c in m.cols]
    return IncidenceMatrix(m.t + 1, tuple(cols))


def _double(m: IncidenceMatrix) -> IncidenceMatrix:
    t = m.t
    cols = [c | (1 << t) for c in m.cols]
    cols += [c | (1 << (t + 1)) for c in reversed(m.cols)]
    return IncidenceMatrix(t + 2, tuple(cols))


def double_cycle(m: IncidenceMatrix) -> IncidenceMatrix:
    """From a C_n-CFF to a C_2n-CFF: [A | reversed A] over two marker rows
    that split the old columns from the new."""
    from .graphs import cycle

    if not is_g_cff(m, cycle(m.n)):
        raise InvalidInputError("input matrix fails cycle-CFF verification")
    return _double(m)


def double_path(m: IncidenceMatrix) -> IncidenceMatrix:
    """Same doubling for paths: a P_n-CFF becomes a P_2n-CFF."""
    if not is_g_cff(m, path(m.n)):
        raise InvalidInputError("input matrix fails path-CFF verification")
    return _double(m)


def inner_identity_optimal(k: int) -> bool:
    """Whether the identity inner block of the windmill construction already
    meets the known minimum for 2-disjunct matrices (it does up to 8 columns)."""
    return k - 1 <= 8


def windmill_cff(k: int, n: int, inner: Optional[IncidenceMatrix] = None) -> IncidenceMatrix:
    """CFF for n copies of K_k glued at a hub.

    Stacks three bands: blades share a 1-disjunct column per blade, blade
    members get distinct columns of a 2-disjunct inner block, and a final row
    isolates the hub.  Rows: t1(n) + rows(inner) + 1.
    """
    if k < 3 or n < 2:
        raise InvalidInputError("windmill construction needs k >= 3, n >= 2")
    if inner is None:
        inner = IncidenceMatrix.identity(2 if k == 3 else k - 1)
    if inner.n != k - 1:
        raise InvalidInputError(f"inner matrix needs {k - 1} columns, got {inner.n}")
    need_d = 1 if k == 3 else 2
    if not is_d_disjunct(inner, need_d):
        raise InvalidInputError(f"inner matrix is not {need_d}-disjunct")

    blades = optimal_1cff(n)
    t_a, t_m = blades.t, inner.t
    cols = [0] * (n * (k - 1) + 1)
    for i in range(n):
        for j in range(k - 1):
            v = 1 + i * (k - 1) + j
            cols[v] = blades.cols[i] | (inner.cols[j] << t_a)
    cols[0] = 1 << (t_a + t_m)
    return IncidenceMatrix(t_a + t_m + 1, tuple(cols))


def with_isolated_vertices(m: IncidenceMatrix, g: Graph) -> IncidenceMatrix:
    """Extend a CFF on g minus its isolated vertices to all of g by giving
    each isolated vertex an all-ones column."""
    isolated = g.isolated_vertices
    if g.n - len(isolated) < 3:
        raise InvalidInputError("need at least 3 non-isolated vertices")
    if m.n != g.n - len(isolated):
        raise InvalidInputError(
            f"matrix has {m.n} columns but g has {g.n - len(isolated)} non-isolated vertices"
        )
    cols = []
    next_col = 0
    for v in range(g.n):
        if v in isolated:
            cols.append(_ones(m.t))
        else:
            cols.append(m.cols[next_col])
            next_col += 1
    return IncidenceMatrix(m.t, tuple(cols))


# ---------------------------------------------------------------------------
# Cataloged explicit instances
# ---------------------------------------------------------------------------

_E8_BLOCKS = [
    {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5},
]

_P10_BLOCKS = [
    {1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 5, 6}, {1, 3, 5},
    {3, 4, 5}, {2, 3, 5}, {2, 3, 6}, {2, 4, 6}, {4, 5, 6},
]


def catalog(name: str) -> tuple[Graph, IncidenceMatrix]:
    """Hand-listed optimal instances: the 5x8 matching-CFF and the 6x10 path-CFF."""
    key = name.strip().upper()
    if key == "E8":
        g = matching(8)
        m = matrix_from_sets(SetSystem(5, tuple(frozenset(b) for b in _E8_BLOCKS)))
    elif key == "P10":
        g = path(10)
        m = matrix_from_sets(SetSystem(6, tuple(frozenset(b) for b in _P10_BLOCKS)))
    else:
        raise InvalidInputError(f"unknown catalog entry {name!r}")
    assert is_g_cff(m, g), f"catalog entry {name} failed verification"
    return g, m
