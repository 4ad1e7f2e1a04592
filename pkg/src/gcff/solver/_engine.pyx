# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``engine.py``: same search, same node counts, same
witnesses, roughly two orders of magnitude faster.  Any behavioral change
here must be mirrored in the pure-Python kernel."""

from libc.stdlib cimport calloc, free

cdef extern from *:
    int __builtin_clzll(unsigned long long) nogil

FOUND = 0
EXHAUSTED = 1
BUDGET = 2

cdef enum:
    C_FOUND = 0
    C_EXHAUSTED = 1
    C_BUDGET = 2

ctypedef unsigned long long u64


cdef inline int _bitlen(u64 x) nogil:
    if x == 0:
        return 0
    return 64 - __builtin_clzll(x)


def search_exists(int t, int n, list prev_nbrs, list loops, bint need_sperner,
                  bint need_cover, list zero_ok, list full_ok, unsigned long long budget):
    cdef u64 full = (<u64>1 << t) - 1
    cdef int total_push = 0
    cdef int i, j, k, w, depth, accept_found
    for i in range(n):
        total_push += len(prev_nbrs[i]) + (1 if loops[i] else 0)

    cdef u64 *cols = <u64 *>calloc(n, sizeof(u64))
    cdef u64 *used = <u64 *>calloc(n + 1, sizeof(u64))
    cdef u64 *unions = <u64 *>calloc(total_push + 1, sizeof(u64))
    cdef u64 *nxt = <u64 *>calloc(n + 1, sizeof(u64))
    cdef int *ucount = <int *>calloc(n + 1, sizeof(int))
    cdef int *nbr_off = <int *>calloc(n + 1, sizeof(int))
    cdef int *nbr_flat = <int *>calloc(total_push + 1, sizeof(int))
    cdef char *has_loop = <char *>calloc(n, sizeof(char))
    cdef char *z_ok = <char *>calloc(n, sizeof(char))
    cdef char *f_ok = <char *>calloc(n, sizeof(char))

    cdef int pos = 0
    for i in range(n):
        nbr_off[i] = pos
        for j in prev_nbrs[i]:
            nbr_flat[pos] = j
            pos += 1
        has_loop[i] = 1 if loops[i] else 0
        z_ok[i] = 1 if zero_ok[i] else 0
        f_ok[i] = 1 if full_ok[i] else 0
    nbr_off[n] = pos

    cdef u64 c, u0, new, un, cj, u2
    cdef unsigned long long nodes = 0
    cdef int status = C_EXHAUSTED
    cdef int ok, ucur
    cdef list witness = None

    depth = 0
    try:
        with nogil:
            while True:
                c = nxt[depth]
                u0 = used[depth]
                accept_found = 0
                while c <= full:
                    if c == 0 and not z_ok[depth]:
                        c += 1
                        continue
                    if c == full and not f_ok[depth]:
                        c += 1
                        continue
                    new = c & ~u0
                    if new != 0:
                        un = ~u0 & full
                        if (un & ((<u64>1 << _bitlen(new)) - 1)) != new:
                            c += 1
                            continue
                    ok = 1
                    if need_sperner:
                        for k in range(nbr_off[depth], nbr_off[depth + 1]):
                            cj = cols[nbr_flat[k]]
                            if (c & ~cj) == 0 or (cj & ~c) == 0:
                                ok = 0
                                break
                    if ok and need_cover:
                        for k in range(ucount[depth]):
                            if (c & ~unions[k]) == 0:
                                ok = 0
                                break
                        if ok:
                            for k in range(nbr_off[depth], nbr_off[depth + 1]):
                                j = nbr_flat[k]
                                u2 = cols[j] | c
                                for w in range(depth):
                                    if w != j and (cols[w] & ~u2) == 0:
                                        ok = 0
                                        break
                                if not ok:
                                    break
                        if ok and has_loop[depth]:
                            for w in range(depth):
                                if (cols[w] & ~c) == 0:
                                    ok = 0
                                    break
                    if ok:
                        accept_found = 1
                        break
                    c += 1

                if not accept_found:
                    if depth == 0:
                        break
                    depth -= 1
                    continue

                nodes += 1
                if nodes > budget:
                    status = C_BUDGET
                    break
                cols[depth] = c
                nxt[depth] = c + 1
                used[depth + 1] = u0 | c
                ucur = ucount[depth]
                for k in range(nbr_off[depth], nbr_off[depth + 1]):
                    unions[ucur] = cols[nbr_flat[k]] | c
                    ucur += 1
                if has_loop[depth]:
                    unions[ucur] = c
                    ucur += 1
                ucount[depth + 1] = ucur
                depth += 1
                if depth == n:
                    status = C_FOUND
                    break
                nxt[depth] = 0

        if status == C_FOUND:
            witness = [cols[i] for i in range(n)]
        return status, witness, nodes
    finally:
        free(cols); free(used); free(unions); free(nxt); free(ucount)
        free(nbr_off); free(nbr_flat); free(has_loop); free(z_ok); free(f_ok)


def search_longest_path(int t, int cap, unsigned long long budget):
    cdef u64 full = (<u64>1 << t) - 1
    cdef int n = cap
    cdef u64 *cols = <u64 *>calloc(n, sizeof(u64))
    cdef u64 *used = <u64 *>calloc(n + 1, sizeof(u64))
    cdef u64 *unions = <u64 *>calloc(n + 1, sizeof(u64))
    cdef u64 *nxt = <u64 *>calloc(n + 1, sizeof(u64))
    cdef u64 *best = <u64 *>calloc(n, sizeof(u64))

    cdef u64 c, u0, new, un, cj, u2
    cdef unsigned long long nodes = 0
    cdef int depth = 0, best_depth = 0
    cdef int status = C_EXHAUSTED
    cdef int ok, k, w, i, accept_found

    try:
        with nogil:
            while True:
                c = nxt[depth]
                u0 = used[depth]
                accept_found = 0
                while c <= full:
                    if c == 0 or c == full:
                        c += 1
                        continue
                    new = c & ~u0
                    if new != 0:
                        un = ~u0 & full
                        if (un & ((<u64>1 << _bitlen(new)) - 1)) != new:
                            c += 1
                            continue
                    ok = 1
                    if depth > 0:
                        cj = cols[depth - 1]
                        if (c & ~cj) == 0 or (cj & ~c) == 0:
                            ok = 0
                        if ok:
                            for k in range(depth - 1):
                                if (c & ~unions[k]) == 0:
                                    ok = 0
                                    break
                        if ok:
                            u2 = cols[depth - 1] | c
                            for w in range(depth - 1):
                                if (cols[w] & ~u2) == 0:
                                    ok = 0
                                    break
                    if ok:
                        accept_found = 1
                        break
                    c += 1

                if not accept_found:
                    if depth == 0:
                        break
                    depth -= 1
                    continue

                nodes += 1
                if nodes > budget:
                    status = C_BUDGET
                    break
                cols[depth] = c
                nxt[depth] = c + 1
                used[depth + 1] = u0 | c
                if depth > 0:
                    unions[depth - 1] = cols[depth - 1] | c
                depth += 1
                if depth > best_depth:
                    best_depth = depth
                    for i in range(depth):
                        best[i] = cols[i]
                    if best_depth == cap:
                        break
                nxt[depth] = 0

        return status, best_depth, [best[i] for i in range(best_depth)], nodes
    finally:
        free(cols); free(used); free(unions); free(nxt); free(best)
