# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled tuple scan; same contract as ``_scan_py.first_valid_tuple``.

Member bitsets are unpacked into 64-bit words so the inner AND loop runs
without Python integers.
"""
from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free

cdef enum:
    WORD = 64


cdef bint _search(const uint64_t* side, Py_ssize_t P, Py_ssize_t W, int k, int depth,
                  Py_ssize_t start, uint64_t* buf, const Py_ssize_t* off,
                  Py_ssize_t* chosen) noexcept nogil:
    cdef uint64_t* cur = buf + off[depth]
    cdef uint64_t* nxt
    cdef Py_ssize_t cnt = (<Py_ssize_t>1) << depth
    cdef Py_ssize_t i, a, w, j
    cdef uint64_t any_bits = 0
    cdef const uint64_t* sp
    cdef const uint64_t* sm
    if depth > 0:
        for j in range(cnt * W):
            any_bits |= cur[j]
        if any_bits == 0:
            for j in range(depth, k):
                chosen[j] = chosen[depth - 1]
            return True
    if depth == k:
        return False
    nxt = buf + off[depth + 1]
    for i in range(start, P):
        sp = side + (2 * i) * W
        sm = side + (2 * i + 1) * W
        for a in range(cnt):
            for w in range(W):
                nxt[(2 * a) * W + w] = cur[a * W + w] & sp[w]
                nxt[(2 * a + 1) * W + w] = cur[a * W + w] & sm[w]
        chosen[depth] = i
        if _search(side, P, W, k, depth + 1, i, buf, off, chosen):
            return True
    return False


def first_valid_tuple(masks, int k, Py_ssize_t n_members):
    """Lexicographically least nondecreasing index k-tuple that is valid, or None."""
    cdef Py_ssize_t P = len(masks)
    cdef Py_ssize_t W, i, s, w, j, total
    cdef uint64_t* side = NULL
    cdef uint64_t* buf = NULL
    cdef Py_ssize_t* off = NULL
    cdef Py_ssize_t* chosen = NULL
    cdef bint found
    # Python integers: the shifts below must not overflow a C word
    cdef object full = 1, lowmask = 0xFFFFFFFFFFFFFFFF, m
    if P == 0:
        return None
    if n_members == 0:
        return (0,) * k
    if k < 1 or k > 20:
        raise ValueError("k out of supported range")
    W = (n_members + WORD - 1) // WORD
    full = (full << n_members) - 1
    try:
        side = <uint64_t*> calloc(2 * P * W, sizeof(uint64_t))
        off = <Py_ssize_t*> calloc(k + 1, sizeof(Py_ssize_t))
        chosen = <Py_ssize_t*> calloc(k, sizeof(Py_ssize_t))
        total = 0
        for j in range(k + 1):
            off[j] = total
            total += ((<Py_ssize_t>1) << j) * W
        buf = <uint64_t*> calloc(total, sizeof(uint64_t))
        if side == NULL or off == NULL or chosen == NULL or buf == NULL:
            raise MemoryError()
        for i in range(P):
            pair = masks[i]
            for s in range(2):
                m = int(pair[s]) & full
                for w in range(W):
                    side[(2 * i + s) * W + w] = <uint64_t>((m >> (WORD * w)) & lowmask)
        for w in range(W):
            buf[w] = <uint64_t>((full >> (WORD * w)) & lowmask)
        with nogil:
            found = _search(side, P, W, k, 0, 0, buf, off, chosen)
        if not found:
            return None
        return tuple(chosen[j] for j in range(k))
    finally:
        free(side)
        free(buf)
        free(off)
        free(chosen)
