"""Reference kernels in Python/numpy, same signatures as the compiled ``_kernels``."""
import numpy as np


def _permuted_indices(n, shift_rows):
    # rows x 2**n table of canonical indices; row r, column b -> index of b under row r
    b = np.arange(1 << n, dtype=np.int64)
    idx = np.zeros((shift_rows.shape[0], 1 << n), dtype=np.int64)
    for i in range(n):
        bit = (b >> i) & 1
        idx |= bit[None, :] << shift_rows[:, i : i + 1]
    return idx


def permuted_switch_count(bits, n, shifts):
    """Count value changes of ``bits`` read in the order given by ``shifts``."""
    shifts = np.asarray(shifts, dtype=np.int64).reshape(1, -1)
    seq = np.asarray(bits)[_permuted_indices(n, shifts)[0]]
    return int(np.count_nonzero(seq[1:] != seq[:-1]))


def min_switch_block(bits, n, shift_rows, chunk=4096):
    """Return ``(best_count, best_row)`` over rows of ``shift_rows``; earliest row wins ties."""
    bits = np.asarray(bits)
    shift_rows = np.asarray(shift_rows, dtype=np.int64)
    best, best_row = -1, -1
    for start in range(0, shift_rows.shape[0], chunk):
        seq = bits[_permuted_indices(n, shift_rows[start : start + chunk])]
        counts = np.count_nonzero(seq[:, 1:] != seq[:, :-1], axis=1)
        r = int(np.argmin(counts))  # argmin returns the first minimum
        if best < 0 or counts[r] < best:
            best, best_row = int(counts[r]), start + r
    return best, best_row


def merge_switches(s1, s2, v1, v2, op_table):
    """Merge two switch sequences under a binary operator.

    ``op_table`` bit ``2*a + b`` is the operator's output on inputs ``(a, b)``.
    """
    s1 = list(s1)
    s2 = list(s2)
    i = j = 0
    n1, n2 = len(s1), len(s2)
    a, b = v1, v2
    out = (op_table >> (2 * a + b)) & 1
    res = []
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
            res.append(pos)
            out = nxt
    return np.asarray(res, dtype=np.int64)
