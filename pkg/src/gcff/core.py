"""Binary incidence matrices, set systems, and the verification predicates.

A family of n subsets of the ground set [1, t] is stored column-wise: column
j is a t-bit integer whose bit i (0-based) is set iff ground element i+1
belongs to block j.  Columns are indexed by graph vertices 0..n-1, in label
order.  Keeping each column in one machine word makes every containment test
a single AND/compare, which is what the exhaustive solver lives on.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .errors import InvalidInputError
from .graphs import Graph

#: Columns must fit in one machine word.
GROUND_CAP = 64


@dataclass(frozen=True)
class IncidenceMatrix:
    """A t x n binary matrix, column j <-> vertex j."""

    t: int
    cols: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.t < 1:
            raise InvalidInputError(f"need at least one row, got t={self.t}")
        if self.t > GROUND_CAP:
            raise InvalidInputError(f"ground set capped at {GROUND_CAP}, got t={self.t}")
        if not self.cols:
            raise InvalidInputError("need at least one column")
        full = (1 << self.t) - 1
        for j, c in enumerate(self.cols):
            if c < 0 or c & ~full:
                raise InvalidInputError(f"column {j} has bits outside rows 1..{self.t}")

    @property
    def n(self) -> int:
        return len(self.cols)

    @property
    def labels(self) -> range:
        """Column labels: vertex ids, fixed to 0..n-1 in column order."""
        return range(len(self.cols))

    def entry(self, row: int, col: int) -> int:
        """Entry in row `row` (0-based) and the column of vertex `col`."""
        return (self.cols[col] >> row) & 1

    def row_string(self, row: int) -> str:
        return "".join(str((c >> row) & 1) for c in self.cols)

    def column_weight(self, col: int) -> int:
        return bin(self.cols[col]).count("1")

    def restrict_columns(self, keep: Iterable[int]) -> "IncidenceMatrix":
        return IncidenceMatrix(self.t, tuple(self.cols[j] for j in keep))

    def to_text(self) -> str:
        lines = [f"{self.t} {self.n}"]
        lines.extend(self.row_string(i) for i in range(self.t))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "IncidenceMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip() != ""]
        if not lines:
            raise InvalidInputError("empty matrix file")
        head = lines[0].split()
        if len(head) != 2:
            raise InvalidInputError(f"bad header {lines[0]!r}, expected 't n'")
        try:
            t, n = int(head[0]), int(head[1])
        except ValueError:
            raise InvalidInputError(f"bad header {lines[0]!r}") from None
        if len(lines) != t + 1:
            raise InvalidInputError(f"expected {t} matrix rows, got {len(lines) - 1}")
        cols = [0] * n
        for i, line in enumerate(lines[1:]):
            row = line.strip()
            if len(row) != n or set(row) - {"0", "1"}:
                raise InvalidInputError(f"row {i + 1} is not {n} characters of 0/1: {row!r}")
            for j, ch in enumerate(row):
                if ch == "1":
                    cols[j] |= 1 << i
        return cls(t, tuple(cols))

    @classmethod
    def from_rows(cls, rows: list[str]) -> "IncidenceMatrix":
        """Build from a list of equal-length 0/1 strings (top row first)."""
        return cls.from_text(f"{len(rows)} {len(rows[0])}\n" + "\n".join(rows))

    @classmethod
    def identity(cls, n: int) -> "IncidenceMatrix":
        return cls(n, tuple(1 << i for i in range(n)))

    def stack(self, other: "IncidenceMatrix") -> "IncidenceMatrix":
        """Vertical concatenation: self on top, other below."""
        if self.n != other.n:
            raise InvalidInputError("stacked matrices must have equal column counts")
        cols = tuple(a | (b << self.t) for a, b in zip(self.cols, other.cols))
        return IncidenceMatrix(self.t + other.t, cols)


@dataclass(frozen=True)
class SetSystem:
    """n blocks over the ground set [1, t]; block i corresponds to vertex i."""

    ground_size: int
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.ground_size < 1:
            raise InvalidInputError("ground set must be non-empty")
        for i, b in enumerate(self.blocks):
            for x in b:
                if not 1 <= x <= self.ground_size:
                    raise InvalidInputError(
                        f"block {i} contains {x}, outside [1, {self.ground_size}]"
                    )


def matrix_from_sets(s: SetSystem) -> IncidenceMatrix:
    cols = tuple(sum(1 << (x - 1) for x in b) for b in s.blocks)
    return IncidenceMatrix(s.ground_size, cols)


def sets_from_matrix(m: IncidenceMatrix) -> SetSystem:
    blocks = tuple(
        frozenset(i + 1 for i in range(m.t) if (c >> i) & 1) for c in m.cols
    )
    return SetSystem(m.t, blocks)


# ---------------------------------------------------------------------------
# Verification predicates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    """First failure found by a verifier, for debugging constructions.

    kind is one of "sperner", "cover", "loop"; `edge` is the offending edge
    (or (v, v) for a loop) and `column` the covered/contained vertex, when
    one is involved.
    """

    kind: str
    edge: tuple[int, int]
    column: Optional[int] = None

    def __str__(self) -> str:
        if self.kind == "sperner":
            return f"not Sperner for edge {self.edge}"
        if self.kind == "loop":
            return f"column {self.column} contained in loop vertex {self.edge[0]}"
        return f"column {self.column} covered by edge {self.edge}"


def _check_vertex(m: IncidenceMatrix, v: int) -> None:
    if not 0 <= v < m.n:
        raise InvalidInputError(f"vertex {v} is not a column label (n={m.n})")


def _check_graph(m: IncidenceMatrix, g: Graph) -> None:
    if g.n != m.n:
        raise InvalidInputError(
            f"graph has {g.n} vertices but matrix has {m.n} columns"
        )


def is_sperner_for_edge(m: IncidenceMatrix, a: int, b: int) -> bool:
    """Neither endpoint's block contains the other's."""
    _check_vertex(m, a)
    _check_vertex(m, b)
    if a == b:
        raise InvalidInputError("Sperner test needs a proper edge, got a loop")
    ca, cb = m.cols[a], m.cols[b]
    return bool(ca & ~cb) and bool(cb & ~ca)


def is_coverfree_for_edge(m: IncidenceMatrix, a: int, b: int) -> bool:
    """No other block is contained in the union of the two endpoint blocks."""
    _check_vertex(m, a)
    _check_vertex(m, b)
    if a == b:
        raise InvalidInputError("cover test needs a proper edge, got a loop")
    u = m.cols[a] | m.cols[b]
    for v, c in enumerate(m.cols):
        if v != a and v != b and (c & ~u) == 0:
            return False
    return True


def find_sperner_violation(m: IncidenceMatrix, g: Graph) -> Optional[Violation]:
    _check_graph(m, g)
    cols = m.cols
    for a, b in g.edges:
        ca, cb = cols[a], cols[b]
        if not (ca & ~cb) or not (cb & ~ca):
            return Violation("sperner", (a, b))
    return None


def find_cover_violation(m: IncidenceMatrix, g: Graph) -> Optional[Violation]:
    _check_graph(m, g)
    cols = m.cols
    for a, b in g.edges:
        u = cols[a] | cols[b]
        for v, c in enumerate(cols):
            if v != a and v != b and (c & ~u) == 0:
                return Violation("cover", (a, b), v)
    # A loop on v forbids any other column from being contained in column v.
    for v in g.loops:
        cv = cols[v]
        for w, c in enumerate(cols):
            if w != v and (c & ~cv) == 0:
                return Violation("loop", (v, v), w)
    return None


def find_violation(m: IncidenceMatrix, g: Graph, prop: str = "cff") -> Optional[Violation]:
    """First violation of `prop` in {"cff", "ecff", "sperner"}, or None."""
    if prop == "sperner":
        return find_sperner_violation(m, g)
    if prop == "ecff":
        return find_cover_violation(m, g)
    if prop == "cff":
        return find_cover_violation(m, g) or find_sperner_violation(m, g)
    raise InvalidInputError(f"unknown property {prop!r}")


def is_g_sperner(m: IncidenceMatrix, g: Graph) -> bool:
    return find_sperner_violation(m, g) is None


def is_g_disjunct(m: IncidenceMatrix, g: Graph) -> bool:
    return find_cover_violation(m, g) is None


def is_g_cff(m: IncidenceMatrix, g: Graph) -> bool:
    return find_cover_violation(m, g) is None and find_sperner_violation(m, g) is None


def is_d_disjunct(m: IncidenceMatrix, d: int) -> bool:
    """No column contained in the union of any d others (exact, exponential in d)."""
    if d < 1:
        raise InvalidInputError(f"d must be positive, got {d}")
    if d >= m.n:
        raise InvalidInputError(f"d={d} must be smaller than the column count {m.n}")
    cols = m.cols
    idx = range(m.n)
    for chosen in combinations(idx, d):
        u = 0
        for j in chosen:
            u |= cols[j]
        chosen_set = set(chosen)
        for v in idx:
            if v not in chosen_set and (cols[v] & ~u) == 0:
                return False
    return True
