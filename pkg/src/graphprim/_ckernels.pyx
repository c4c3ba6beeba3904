# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernels; mirrors graphprim._pykernels exactly."""

from libc.stdint cimport uint64_t

MAX_BITS = 62

cdef int _load(list src, uint64_t* dst, int n) except -1:
    cdef int i
    if n > MAX_BITS:
        raise ValueError(f"at most {MAX_BITS} vertices supported, got {n}")
    for i in range(n):
        dst[i] = <uint64_t>src[i]
    return 0


def reach_masks(int n, succ):
    cdef uint64_t down[64]
    cdef uint64_t bit, dk
    cdef int i, k
    _load(list(succ), down, n)
    for i in range(n):
        down[i] |= (<uint64_t>1) << i
    for k in range(n):
        bit = (<uint64_t>1) << k
        dk = down[k]
        for i in range(n):
            if down[i] & bit:
                down[i] |= dk
    return [down[i] for i in range(n)]


def hereditary_saturated_masks(int n, succ, uint64_t finite_emitters):
    cdef uint64_t s[64]
    cdef uint64_t x, last
    cdef int i
    cdef bint ok
    _load(list(succ), s, n)
    out = []
    last = ((<uint64_t>1) << n) - 1
    x = 0
    while True:
        ok = True
        for i in range(n):
            if (x >> i) & 1:
                if s[i] & ~x:
                    ok = False
                    break
            elif (finite_emitters >> i) & 1 and not (s[i] & ~x):
                ok = False
                break
        if ok:
            out.append(x)
        if x == last:
            break
        x += 1
    return out


def tail_masks(int n, up, down, succ, uint64_t finite_emitters):
    cdef uint64_t u[64]
    cdef uint64_t d[64]
    cdef uint64_t s[64]
    cdef int members[64]
    cdef uint64_t m, last, di
    cdef int i, j, a, b, k
    cdef bint ok
    _load(list(up), u, n)
    _load(list(down), d, n)
    _load(list(succ), s, n)
    out = []
    if n == 0:
        return out
    last = ((<uint64_t>1) << n) - 1
    m = 1
    while True:
        ok = True
        k = 0
        for i in range(n):
            if (m >> i) & 1:
                if u[i] & ~m:
                    ok = False
                    break
                if (finite_emitters >> i) & 1 and not (s[i] & m):
                    ok = False
                    break
                members[k] = i
                k += 1
        if ok:
            for a in range(k):
                di = d[members[a]] & m
                for b in range(a + 1, k):
                    if not (di & d[members[b]]):
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            out.append(m)
        if m == last:
            break
        m += 1
    return out
