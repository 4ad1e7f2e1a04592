"""Graph families from the problem domain plus small exact graph solvers.

Vertices are 0-based; hub vertices (star, wheel, windmill) are vertex 0,
paths and cycles are numbered in traversal order.  Generated graphs carry a
`family` tag such as "cycle(8)" so downstream bound computations can
recognize them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Optional

from .errors import InvalidInputError, ResourceLimitError

#: Exact chromatic/clique solvers refuse larger instances.
EXACT_VERTEX_LIMIT = 20
#: Homomorphism search refuses |V(g)| * |V(h)| beyond this.
HOM_PAIR_LIMIT = 2048


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph, optionally with loop edges."""

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()
    loops: frozenset[int] = frozenset()
    family: Optional[str] = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidInputError("graph needs at least one vertex")
        for u, v in self.edges:
            if u == v:
                raise InvalidInputError(f"loop ({u},{u}) must go in `loops`, not `edges`")
            if not (0 <= u < self.n and 0 <= v < self.n) or u > v:
                raise InvalidInputError(f"bad edge ({u},{v}) for n={self.n}")
        for v in self.loops:
            if not 0 <= v < self.n:
                raise InvalidInputError(f"bad loop vertex {v} for n={self.n}")

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbr: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbr[u].add(v)
            nbr[v].add(u)
        return tuple(frozenset(s) for s in nbr)

    def degree(self, v: int) -> int:
        return len(self.adj[v]) + (1 if v in self.loops else 0)

    @property
    def is_simple(self) -> bool:
        return not self.loops

    @cached_property
    def isolated_vertices(self) -> frozenset[int]:
        return frozenset(v for v in range(self.n) if self.degree(v) == 0)

    def min_degree(self) -> int:
        return min(self.degree(v) for v in range(self.n))

    def max_degree(self) -> int:
        return max(self.degree(v) for v in range(self.n))

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def subgraph_of(self, other: "Graph") -> bool:
        return (
            self.n == other.n
            and self.edges <= other.edges
            and self.loops <= other.loops
        )

    def without_isolated(self) -> tuple["Graph", tuple[int, ...]]:
        """Drop isolated vertices; also return the kept (old) vertex labels."""
        keep = [v for v in range(self.n) if self.degree(v) > 0]
        relabel = {v: i for i, v in enumerate(keep)}
        edges = frozenset(_norm_edge(relabel[u], relabel[v]) for u, v in self.edges)
        loops = frozenset(relabel[v] for v in self.loops)
        return Graph(len(keep), edges, loops, self.family), tuple(keep)

    def to_text(self) -> str:
        lines = [f"{self.n} {len(self.edges) + len(self.loops)}"]
        lines.extend(f"{u} {v}" for u, v in sorted(self.edges))
        lines.extend(f"{v} {v}" for v in sorted(self.loops))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Graph":
        lines = [ln for ln in text.splitlines() if ln.strip() != ""]
        if not lines:
            raise InvalidInputError("empty graph file")
        head = lines[0].split()
        if len(head) != 2:
            raise InvalidInputError(f"bad header {lines[0]!r}, expected 'n m'")
        n, m = int(head[0]), int(head[1])
        if len(lines) != m + 1:
            raise InvalidInputError(f"expected {m} edge lines, got {len(lines) - 1}")
        edges: set[tuple[int, int]] = set()
        loops: set[int] = set()
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise InvalidInputError(f"bad edge line {ln!r}")
            u, v = int(parts[0]), int(parts[1])
            if u == v:
                loops.add(u)
            else:
                edges.add(_norm_edge(u, v))
        return cls(n, frozenset(edges), frozenset(loops), family="file")


# ---------------------------------------------------------------------------
# Family generators
# ---------------------------------------------------------------------------

def path(n: int) -> Graph:
    if n < 2:
        raise InvalidInputError("path needs n >= 2")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)), family=f"path({n})")


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidInputError("cycle needs n >= 3")
    edges = {(i, i + 1) for i in range(n - 1)} | {(0, n - 1)}
    return Graph(n, frozenset(edges), family=f"cycle({n})")


def star(n: int) -> Graph:
    """K_{1,n-1}: hub 0 joined to leaves 1..n-1."""
    if n < 2:
        raise InvalidInputError("star needs n >= 2")
    return Graph(n, frozenset((0, i) for i in range(1, n)), family=f"star({n})")


def complete(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)), family=f"complete({n})")


def wheel(n: int) -> Graph:
    """Hub 0 joined to a cycle 1..n-1.  n=3 degenerates to a triangle."""
    if n < 3:
        raise InvalidInputError("wheel needs n >= 3")
    if n == 3:
        return Graph(3, frozenset({(0, 1), (0, 2), (1, 2)}), family="wheel(3)")
    rim = {_norm_edge(i, i % (n - 1) + 1) for i in range(1, n)}
    hub = {(0, i) for i in range(1, n)}
    return Graph(n, frozenset(rim | hub), family=f"wheel({n})")


def complete_bipartite(n1: int, n2: int) -> Graph:
    if n1 < 1 or n2 < 1:
        raise InvalidInputError("bipartite parts must be non-empty")
    edges = frozenset((a, n1 + b) for a in range(n1) for b in range(n2))
    return Graph(n1 + n2, edges, family=f"bipartite({n1},{n2})")


def matching(n: int) -> Graph:
    """n vertices, n/2 disjoint edges 2i -- 2i+1."""
    if n < 2 or n % 2:
        raise InvalidInputError("matching needs even n >= 2")
    return Graph(n, frozenset((2 * i, 2 * i + 1) for i in range(n // 2)), family=f"matching({n})")


def windmill(k: int, n: int) -> Graph:
    """n copies of K_k glued at the shared universal vertex 0."""
    if k < 2 or n < 1:
        raise InvalidInputError("windmill needs k >= 2, n >= 1")
    edges: set[tuple[int, int]] = set()
    for i in range(n):
        blade = [0] + [1 + i * (k - 1) + j for j in range(k - 1)]
        edges.update(combinations(blade, 2))
    return Graph(n * (k - 1) + 1, frozenset(edges), family=f"windmill({k},{n})")


def friendship(n: int) -> Graph:
    """F_{2n+1}: n triangles sharing vertex 0."""
    return windmill(3, n)


def loops_graph(n: int) -> Graph:
    return Graph(n, loops=frozenset(range(n)), family=f"loops({n})")


def hamming(dims: Iterable[int]) -> Graph:
    """Cartesian product of complete graphs; tuples adjacent iff Hamming distance 1.

    Vertex order is lexicographic over the digit tuples.
    """
    dims = tuple(dims)
    if not dims or any(d < 2 for d in dims):
        raise InvalidInputError("hamming graph needs every dimension >= 2")
    words = list(product(*(range(d) for d in dims)))
    index = {w: i for i, w in enumerate(words)}
    edges: set[tuple[int, int]] = set()
    for w in words:
        for pos in range(len(dims)):
            for d in range(w[pos] + 1, dims[pos]):
                w2 = w[:pos] + (d,) + w[pos + 1:]
                edges.add(_norm_edge(index[w], index[w2]))
    tag = "hamming(" + ",".join(map(str, dims)) + ")"
    return Graph(len(words), frozenset(edges), family=tag)


def sperner_graph(z: int) -> Graph:
    """All subsets of [1,z]; edges between incomparable pairs.

    Vertex i is the subset with characteristic bits of i.
    """
    if z < 1:
        raise InvalidInputError("sperner graph needs z >= 1")
    if z > 6:
        raise InvalidInputError("sperner graph beyond z=6 is too large to be useful here")
    n = 1 << z
    edges = set()
    for x in range(n):
        for y in range(x + 1, n):
            if (x & ~y) and (y & ~x):
                edges.add((x, y))
    return Graph(n, frozenset(edges), family=f"sperner({z})")


def add_universal_vertex(g: Graph) -> Graph:
    """New universal vertex becomes vertex 0; old vertices shift up by one."""
    if g.loops:
        raise InvalidInputError("universal-vertex extension needs a simple graph")
    edges = {(_norm_edge(u + 1, v + 1)) for u, v in g.edges}
    edges.update((0, v + 1) for v in range(g.n))
    tag = f"universal({g.family})" if g.family else None
    return Graph(g.n + 1, frozenset(edges), family=tag)


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Vertex (a,b) is numbered a*|V(g2)| + b."""
    if g1.loops or g2.loops:
        raise InvalidInputError("cartesian product needs simple graphs")
    n2 = g2.n
    edges: set[tuple[int, int]] = set()
    for a in range(g1.n):
        for u, v in g2.edges:
            edges.add(_norm_edge(a * n2 + u, a * n2 + v))
    for u, v in g1.edges:
        for b in range(n2):
            edges.add(_norm_edge(u * n2 + b, v * n2 + b))
    return Graph(g1.n * n2, frozenset(edges))


_FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "star": (star, 1),
    "wheel": (wheel, 1),
    "complete": (complete, 1),
    "bipartite": (complete_bipartite, 2),
    "matching": (matching, 1),
    "windmill": (windmill, 2),
    "friendship": (friendship, 1),
    "loops": (loops_graph, 1),
}


def make_family(spec: str) -> Graph:
    """Build a graph from a spec string such as "cycle:12" or "hamming:2x2x3"."""
    name, sep, arg = spec.partition(":")
    name = name.strip().lower()
    if not sep:
        raise InvalidInputError(f"graph spec {spec!r} needs the form family:args")
    if name == "file":
        with open(arg) as f:
            return Graph.from_text(f.read())
    if name == "hamming":
        try:
            dims = [int(x) for x in arg.lower().split("x")]
        except ValueError:
            raise InvalidInputError(f"bad hamming dims {arg!r}") from None
        return hamming(dims)
    if name == "sperner":
        return sperner_graph(int(arg))
    if name not in _FAMILIES:
        raise InvalidInputError(f"unknown graph family {name!r}")
    fn, arity = _FAMILIES[name]
    try:
        args = [int(x) for x in arg.split(",")]
    except ValueError:
        raise InvalidInputError(f"bad arguments {arg!r} for {name}") from None
    if len(args) != arity:
        raise InvalidInputError(f"{name} takes {arity} argument(s), got {len(args)}")
    return fn(*args)


# ---------------------------------------------------------------------------
# Exact solvers: chromatic number, clique number, homomorphism
# ---------------------------------------------------------------------------

def _require_small_simple(g: Graph, what: str) -> None:
    if g.loops:
        raise InvalidInputError(f"{what} is defined for simple graphs only")
    if g.n > EXACT_VERTEX_LIMIT:
        raise ResourceLimitError(
            f"{what} limited to {EXACT_VERTEX_LIMIT} vertices, got {g.n}"
        )


def clique_number(g: Graph, with_witness: bool = False):
    """Exact max clique by branch and bound on a degeneracy-style ordering."""
    _require_small_simple(g, "clique number")
    adj = [0] * g.n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    best = [0, 0]  # size, vertex mask

    order = sorted(range(g.n), key=lambda v: -bin(adj[v]).count("1"))

    def grow(clique_mask: int, size: int, cand: int) -> None:
        if size + bin(cand).count("1") <= best[0]:
            return
        if cand == 0:
            if size > best[0]:
                best[0], best[1] = size, clique_mask
            return
        while cand:
            if size + bin(cand).count("1") <= best[0]:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            grow(clique_mask | (1 << v), size + 1, cand & adj[v])

    full = 0
    for v in order:
        full |= 1 << v
    grow(0, 0, full)
    if with_witness:
        witness = [v for v in range(g.n) if (best[1] >> v) & 1]
        return best[0], witness
    return best[0]


def chromatic_number(g: Graph, with_witness: bool = False):
    """Exact chromatic number: DSATUR branch and bound, clique lower bound."""
    _require_small_simple(g, "chromatic number")
    n = g.n
    if not g.edges:
        coloring = [0] * n
        return (1, coloring) if with_witness else 1

    adj = g.adj
    lb, clique = clique_number(g, with_witness=True)

    # Greedy DSATUR once for the initial upper bound.
    def greedy() -> list[int]:
        colors = [-1] * n
        sat: list[set[int]] = [set() for _ in range(n)]
        for _ in range(n):
            v = max(
                (x for x in range(n) if colors[x] < 0),
                key=lambda x: (len(sat[x]), len(adj[x])),
            )
            c = 0
            while c in sat[v]:
                c += 1
            colors[v] = c
            for u in adj[v]:
                sat[u].add(c)
        return colors

    best_colors = greedy()
    best_k = max(best_colors) + 1
    if best_k == lb:
        return (lb, best_colors) if with_witness else lb

    # Branch and bound; the max clique is pre-colored to break symmetry.
    colors = [-1] * n
    for i, v in enumerate(clique):
        colors[v] = i

    def solve(num_colored: int, used: int, limit: int) -> Optional[list[int]]:
        if num_colored == n:
            return colors[:]
        v = max(
            (x for x in range(n) if colors[x] < 0),
            key=lambda x: (len({colors[u] for u in adj[x]} - {-1}), len(adj[x])),
        )
        forbidden = {colors[u] for u in adj[v]}
        for c in range(min(used + 1, limit)):
            if c in forbidden:
                continue
            colors[v] = c
            got = solve(num_colored + 1, max(used, c + 1), limit)
            if got is not None:
                return got
            colors[v] = -1
        return None

    k = lb
    while k < best_k:
        got = solve(len(clique), len(clique), k)
        if got is not None:
            best_colors, best_k = got, k
            break
        k += 1
    return (best_k, best_colors) if with_witness else best_k


def homomorphism_exists(g: Graph, h: Graph, with_witness: bool = False):
    """Exact search for an edge-preserving map V(g) -> V(h)."""
    if g.loops or h.loops:
        raise InvalidInputError("homomorphism search is for simple graphs")
    if g.n * h.n > HOM_PAIR_LIMIT:
        raise ResourceLimitError(
            f"homomorphism search limited to |V(g)|*|V(h)| <= {HOM_PAIR_LIMIT}"
        )
    gadj, hadj = g.adj, h.adj
    # Assign high-degree vertices first; neighbors constrain later choices.
    order = sorted(range(g.n), key=lambda v: -len(gadj[v]))
    pos = {v: i for i, v in enumerate(order)}
    image = [-1] * g.n

    def assign(i: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        mapped_nbrs = [image[u] for u in gadj[v] if pos[u] < i]
        for w in range(h.n):
            if all(x in hadj[w] for x in mapped_nbrs):
                image[v] = w
                if assign(i + 1):
                    return True
                image[v] = -1
        return False

    found = assign(0)
    if with_witness:
        return found, (list(image) if found else None)
    return found
