# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops: permuted switch counting, order-search blocks, switch merging.

``_pykernels`` holds the reference versions with identical signatures.
"""
import numpy as np

from libc.stdint cimport int64_t, uint8_t
from libc.stdlib cimport free, malloc


cdef int64_t _count(const uint8_t[::1] bits, int n, const int64_t[::1] shifts,
                    int64_t* idx) noexcept nogil:
    cdef int64_t size = (<int64_t>1) << n
    cdef int64_t b, low, count = 0
    cdef int i
    cdef uint8_t prev, cur
    idx[0] = 0
    prev = bits[0]
    for b in range(1, size):
        low = b & (b - 1)
        i = 0
        while not ((b >> i) & 1):
            i += 1
        idx[b] = idx[low] | ((<int64_t>1) << shifts[i])
        cur = bits[idx[b]]
        if cur != prev:
            count += 1
            prev = cur
    return count


def permuted_switch_count(const uint8_t[::1] bits, int n, const int64_t[::1] shifts):
    """Count value changes of ``bits`` read in the order given by ``shifts``.

    ``shifts[i]`` is the canonical bit position carried by order position ``i``.
    """
    cdef int64_t* idx = <int64_t*>malloc(((<int64_t>1) << n) * sizeof(int64_t))
    if idx == NULL:
        raise MemoryError()
    try:
        return _count(bits, n, shifts, idx)
    finally:
        free(idx)


def min_switch_block(const uint8_t[::1] bits, int n, const int64_t[:, ::1] shift_rows):
    """Return ``(best_count, best_row)`` over rows of ``shift_rows``; earliest row wins ties."""
    cdef Py_ssize_t rows = shift_rows.shape[0]
    cdef Py_ssize_t r, best_row = -1
    cdef int64_t c, best = -1
    cdef int64_t* idx = <int64_t*>malloc(((<int64_t>1) << n) * sizeof(int64_t))
    if idx == NULL:
        raise MemoryError()
    try:
        with nogil:
            for r in range(rows):
                c = _count(bits, n, shift_rows[r], idx)
                if best < 0 or c < best:
                    best = c
                    best_row = r
    finally:
        free(idx)
    return int(best), int(best_row)


def merge_switches(const int64_t[::1] s1, const int64_t[::1] s2, int v1, int v2, int op_table):
    """Merge two switch sequences under a binary operator.

    ``op_table`` bit ``2*a + b`` is the operator's output on inputs ``(a, b)``.
    Returns the output switch array; the output's first value is the caller's to compute.
    """
    cdef Py_ssize_t i = 0, j = 0, k = 0
    cdef Py_ssize_t n1 = s1.shape[0], n2 = s2.shape[0]
    cdef int a = v1, b = v2
    cdef int out = (op_table >> (2 * a + b)) & 1
    cdef int nxt
    cdef int64_t pos
    result = np.empty(n1 + n2, dtype=np.int64)
    cdef int64_t[::1] res = result
    with nogil:
        while i < n1 or j < n2:
            if j >= n2 or (i < n1 and s1[i] < s2[j]):
                pos = s1[i]
                a ^= 1
                i += 1
            elif i >= n1 or s2[j] < s1[i]:
                pos = s2[j]
                b ^= 1
                j += 1
            else:
                pos = s1[i]
                a ^= 1
                b ^= 1
                i += 1
                j += 1
            nxt = (op_table >> (2 * a + b)) & 1
            if nxt != out:
                res[k] = pos
                k += 1
                out = nxt
    return result[:k]
