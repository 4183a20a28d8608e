# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled scan and canonicalization kernels.

Must stay observably identical to the pure-Python versions in
quandles._kernel: same output bytes, same order, same placement counts.
Orders are capped at 10, so fixed-size buffers suffice.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.string cimport memcmp, memcpy

cdef int BACKTRACKING = 1


cdef inline bint _partial_ok(const unsigned char **col_at, int d, int n) noexcept:
    # pairs (j, k) whose columns j, k and col_at[k][j] all complete at depth d
    cdef int i, j, k, t, m
    cdef const unsigned char *ck
    cdef const unsigned char *cj
    cdef const unsigned char *ct
    for k in range(d + 1):
        ck = col_at[k]
        for j in range(d + 1):
            t = ck[j]
            m = k if k > j else j
            if t > m:
                m = t
            if m != d:
                continue
            cj = col_at[j]
            ct = col_at[t]
            for i in range(n):
                if ck[cj[i]] != ct[ck[i]]:
                    return 0
    return 1


cdef inline bint _full_ok(const unsigned char **col_at, int n) noexcept:
    cdef int i, j, k
    cdef const unsigned char *ck
    cdef const unsigned char *cj
    cdef const unsigned char *ct
    for k in range(n):
        ck = col_at[k]
        for j in range(n):
            cj = col_at[j]
            ct = col_at[ck[j]]
            for i in range(n):
                if ck[cj[i]] != ct[ck[i]]:
                    return 0
    return 1


def scan(int n, int strategy, list packed, int count, int first_lo, int first_hi,
         long long cap):
    """Mirror of quandles._kernel._scan_pure on packed candidate columns.

    `packed[i]` holds the candidate columns for position i as count*n bytes of
    0-indexed values.  Returns (matrices, placements, hit_cap) with matrices
    as row-major 1-based bytes.
    """
    cdef const unsigned char *pools[10]
    cdef const unsigned char *col_at[10]
    cdef int idx[11]
    cdef unsigned char buf[100]
    cdef long long placements = 0
    cdef bint hit = 0
    cdef bint backtracking = strategy == BACKTRACKING
    cdef int depth = 0
    cdef int last = n - 1
    cdef int i, j, hi_d
    cdef bytes blob

    if n < 1 or n > 10:
        raise ValueError("order out of range")
    if len(packed) != n:
        raise ValueError("need one candidate pool per position")
    for i in range(n):
        blob = packed[i]
        if len(blob) != count * n:
            raise ValueError("candidate pool has wrong size")
        pools[i] = <const unsigned char *> blob

    out = []
    idx[0] = first_lo
    while depth >= 0:
        hi_d = first_hi if depth == 0 else count
        if idx[depth] >= hi_d:
            depth -= 1
            continue
        i = idx[depth]
        idx[depth] += 1
        placements += 1
        if placements > cap:
            hit = 1
            break
        col_at[depth] = pools[depth] + i * n
        if backtracking and not _partial_ok(col_at, depth, n):
            continue
        if depth == last:
            if backtracking or _full_ok(col_at, n):
                for i in range(n):
                    for j in range(n):
                        buf[i * n + j] = col_at[j][i] + 1
                out.append(PyBytes_FromStringAndSize(<const char *> buf, n * n))
        else:
            depth += 1
            idx[depth] = 0
    return out, placements, hit


def canon_min(bytes flat, int n):
    """Lexicographically least relabelling of a 1-based row-major table."""
    cdef unsigned char table[100]
    cdef unsigned char best[100]
    cdef unsigned char cur[100]
    cdef int p[10]
    cdef int i, j, k, l, tmp
    cdef int nn = n * n
    cdef bint first = 1
    cdef const unsigned char *src

    if n < 1 or n > 10:
        raise ValueError("order out of range")
    if len(flat) != nn:
        raise ValueError("flat length does not match order")
    src = <const unsigned char *> flat
    for i in range(nn):
        table[i] = src[i] - 1
    for i in range(n):
        p[i] = i

    while True:
        for i in range(n):
            for j in range(n):
                cur[p[i] * n + p[j]] = p[table[i * n + j]] + 1
        if first or memcmp(cur, best, nn) < 0:
            memcpy(best, cur, nn)
            first = 0
        # advance p to the next permutation in lexicographic order
        i = n - 2
        while i >= 0 and p[i] >= p[i + 1]:
            i -= 1
        if i < 0:
            break
        j = n - 1
        while p[j] <= p[i]:
            j -= 1
        tmp = p[i]; p[i] = p[j]; p[j] = tmp
        k = i + 1
        l = n - 1
        while k < l:
            tmp = p[k]; p[k] = p[l]; p[l] = tmp
            k += 1
            l -= 1
    return PyBytes_FromStringAndSize(<const char *> best, nn)
