"""Mixed-radix Gray codes and the transversal construction for path/cycle CFFs.

A code over radices (m_1, ..., m_k) lists tuples of Z_{m_1} x ... x Z_{m_k}
with consecutive tuples at Hamming distance one.  Reflected codes alternate
the direction of the tail recursion; modular codes always increment one
digit mod its radix.  Each codeword D maps to the transversal subset
F(D) = {offset_i + d_i + 1} of [1, sum(m_i)], picking one element from each
radix block; the resulting k-uniform family is cover-free along the code
order, which is exactly what a path (or, for cyclic codes, a cycle) needs.

Codes are held as (N, k) uint8 arrays so that full sweeps over thousands of
codes stay vectorized; the `words` view materializes tuples on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import prod

import numpy as np

from . import core
from .core import IncidenceMatrix, SetSystem, matrix_from_sets
from .errors import InvalidInputError, ResourceLimitError
from .graphs import Graph, _norm_edge

#: Refuse to materialize codes beyond this many words.
MAX_WORDS = 1 << 20

Word = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class MixedRadixCode:
    radices: tuple[int, ...]
    array: np.ndarray  # (N, k) uint8, one row per codeword
    kind: str  # "reflected" | "modular" | "shortened"

    def __len__(self) -> int:
        return self.array.shape[0]

    @cached_property
    def words(self) -> tuple[Word, ...]:
        return tuple(tuple(row) for row in self.array.tolist())

    @property
    def is_full(self) -> bool:
        return len(self) == prod(self.radices)

    def ranks(self) -> np.ndarray:
        """Each word packed to its mixed-radix rank (most significant first)."""
        strides = np.ones(len(self.radices), dtype=np.int64)
        for i in range(len(self.radices) - 2, -1, -1):
            strides[i] = strides[i + 1] * self.radices[i + 1]
        return self.array.astype(np.int64) @ strides


def _check_radices(radices: tuple[int, ...]) -> None:
    if not radices or any(m < 2 for m in radices):
        raise InvalidInputError(f"every radix must be >= 2, got {radices}")
    if any(m > 255 for m in radices):
        raise InvalidInputError("radices beyond 255 are not supported")
    if prod(radices) > MAX_WORDS:
        raise ResourceLimitError(f"code would have {prod(radices)} words (cap {MAX_WORDS})")


def hamming_distance(a: Word, b: Word) -> int:
    return sum(1 for x, y in zip(a, b) if x != y)


def reflected(radices) -> MixedRadixCode:
    """Reflected Gray code: digit j prepends the tail forward if j is even,
    reversed if odd, so the first word is all zeros."""
    radices = tuple(int(m) for m in radices)
    _check_radices(radices)
    arr = np.arange(radices[-1], dtype=np.uint8).reshape(-1, 1)
    for m in reversed(radices[:-1]):
        n, k = arr.shape
        out = np.empty((m * n, k + 1), dtype=np.uint8)
        for j in range(m):
            block = out[j * n:(j + 1) * n]
            block[:, 0] = j
            block[:, 1:] = arr if j % 2 == 0 else arr[::-1]
        arr = out
    return MixedRadixCode(radices, arr, "reflected")


def modular(q: int, k: int) -> MixedRadixCode:
    """Modular Gray code over q^k words; the appended digit cycles mod q,
    starting where the previous block's wrap leaves off."""
    if q < 2 or k < 1:
        raise InvalidInputError(f"need q >= 2 and k >= 1, got q={q}, k={k}")
    radices = (q,) * k
    _check_radices(radices)
    arr = np.arange(q, dtype=np.uint8).reshape(-1, 1)
    for _ in range(k - 1):
        n, w = arr.shape
        starts = (q - np.arange(n)) % q
        digits = ((starts[:, None] + np.arange(q)[None, :]) % q).astype(np.uint8)
        out = np.empty((n * q, w + 1), dtype=np.uint8)
        out[:, :w] = np.repeat(arr, q, axis=0)
        out[:, w] = digits.reshape(-1)
        arr = out
    return MixedRadixCode(radices, arr, "modular")


def is_gray(code: MixedRadixCode) -> bool:
    a = code.array
    if a.shape[0] < 2:
        return True
    return bool(((a[1:] != a[:-1]).sum(axis=1) == 1).all())


def is_cyclic(code: MixedRadixCode) -> bool:
    """Gray, and the wrap pair (last, first) is also at Hamming distance 1.

    Single-radix codes are trivially cyclic: (0) and (m-1) differ in their
    one coordinate.  The even-first-radix criterion for reflected codes
    applies from two radices up.
    """
    a = code.array
    if a.shape[0] < 2:
        return False
    return is_gray(code) and int((a[0] != a[-1]).sum()) == 1


def is_permutation(code: MixedRadixCode) -> bool:
    """Does the code visit every tuple of the radix box exactly once?"""
    n = prod(code.radices)
    if len(code) != n:
        return False
    return len(np.unique(code.ranks())) == n


def transversal_blocks(radices: tuple[int, ...]) -> list[frozenset[int]]:
    """The partition blocks P_i of [1, sum(radices)], one per radix."""
    blocks = []
    offset = 0
    for m in radices:
        blocks.append(frozenset(range(offset + 1, offset + m + 1)))
        offset += m
    return blocks


def word_to_subset(radices: tuple[int, ...], word: Word) -> frozenset[int]:
    offset = 0
    out = []
    for m, d in zip(radices, word):
        out.append(offset + d + 1)
        offset += m
    return frozenset(out)


def to_set_system(code: MixedRadixCode) -> SetSystem:
    if len(np.unique(code.ranks())) != len(code):
        raise InvalidInputError("code words must be distinct")
    t = sum(code.radices)
    blocks = tuple(word_to_subset(code.radices, w) for w in code.words)
    return SetSystem(t, blocks)


# ---------------------------------------------------------------------------
# Shortening
# ---------------------------------------------------------------------------

def _shorten_allowance(code: MixedRadixCode) -> int:
    """Max number of removable words for the radix patterns used by the
    path/cycle construction.  Other codes only admit a = 0."""
    r = code.radices
    if code.kind == "modular" and all(m == 3 for m in r):
        return 3 ** (len(r) - 1) - 1
    if code.kind == "reflected" and len(r) >= 2 and r[-1] == 3:
        if r[0] == 2 and r[1] == 2 and all(m == 3 for m in r[2:]):
            return 3 ** (len(r) - 2) - 1
        if r[0] == 2 and all(m == 3 for m in r[1:]):
            return 2 * 3 ** (len(r) - 2) - 1
        if all(m == 3 for m in r):
            return 3 ** (len(r) - 1) - 1
    return 0


def shorten(code: MixedRadixCode, a: int) -> MixedRadixCode:
    """Delete `a` codewords while keeping the Gray (and cyclic) property.

    Modular codes drop the `a` lowest words at indices 1 mod 3 (the middle
    of each 3-block); reflected codes drop the `a` lowest words whose final
    digit is 1 (the middle of each reflected triple).
    """
    if a < 0:
        raise InvalidInputError("cannot delete a negative number of words")
    if a == 0:
        return code
    allowance = _shorten_allowance(code)
    if a > allowance:
        raise InvalidInputError(
            f"can delete at most {allowance} words from this {code.kind} code, asked {a}"
        )
    keep = np.ones(len(code), dtype=bool)
    if code.kind == "modular":
        keep[1:3 * a:3] = False
    else:
        drop = np.flatnonzero(code.array[:, -1] == 1)[:a]
        keep[drop] = False
    out = MixedRadixCode(code.radices, code.array[keep], "shortened")
    if not is_gray(out):
        raise RuntimeError("shortening broke the Gray property")
    return out


# ---------------------------------------------------------------------------
# The path/cycle construction
# ---------------------------------------------------------------------------

def _case_for(n: int) -> tuple[int, int]:
    """The (k, case) with n in case 1: (2*3^(k-1), 3^k], case 2: (3^k, 4*3^(k-1)],
    case 3: (4*3^(k-1), 2*3^k]."""
    k = 1
    while n > 2 * 3 ** k:
        k += 1
    if n > 4 * 3 ** (k - 1):
        return k, 3
    if n > 3 ** k:
        return k, 2
    if n > 2 * 3 ** (k - 1):
        return k, 1
    raise AssertionError(f"no interval for n={n}")


def cycle_cff_rows(n: int) -> int:
    """Row count the construction achieves: 3k / 3k+1 / 3k+2 by interval."""
    if n < 3:
        raise InvalidInputError("need n >= 3")
    k, case = _case_for(n)
    return 3 * k + case - 1


def cycle_code(n: int) -> MixedRadixCode:
    """The cyclic Gray code (shortened to n words) behind path_cycle_cff."""
    if n < 5:
        raise InvalidInputError("gray-code route needs n >= 5; cycles 3, 4 use identities")
    k, case = _case_for(n)
    if case == 1:
        code = modular(3, k)
    elif case == 2:
        code = reflected((2, 2) + (3,) * (k - 1))
    else:
        code = reflected((2,) + (3,) * k)
    return shorten(code, len(code) - n)


def path_cycle_cff(n: int) -> IncidenceMatrix:
    """A C_n-CFF (hence also P_n-CFF) with the interval row count.

    n = 3, 4 use identity matrices; beyond that the cyclic code for the
    interval containing n is shortened to n words and mapped through the
    transversal bijection.
    """
    if n < 3:
        raise InvalidInputError("need n >= 3")
    if n <= 4:
        return IncidenceMatrix.identity(n)
    return matrix_from_sets(to_set_system(cycle_code(n)))


def hamming_maximal_check(code: MixedRadixCode, limit: int = 256) -> bool:
    """True iff the transversal family is a CFF exactly for the Hamming graph
    on the radices: every distance-1 pair is safe and every distance->=2 pair
    covers some third block."""
    if not code.is_full:
        raise InvalidInputError("maximality check needs a full code")
    if len(code) > limit:
        raise ResourceLimitError(f"maximality check capped at {limit} words")
    m = matrix_from_sets(to_set_system(code))
    words = code.words
    n = len(words)
    edges = set()
    for i, j in combinations(range(n), 2):
        if hamming_distance(words[i], words[j]) == 1:
            edges.add(_norm_edge(i, j))
    h = Graph(n, frozenset(edges))
    if not core.is_g_cff(m, h):
        return False
    for i, j in combinations(range(n), 2):
        if _norm_edge(i, j) in edges:
            continue
        u = m.cols[i] | m.cols[j]
        if not any(
            (m.cols[w] & ~u) == 0 for w in range(n) if w != i and w != j
        ):
            return False
    return True
