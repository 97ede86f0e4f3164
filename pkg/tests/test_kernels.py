import numpy as np
import pytest

from switchlist import _pykernels
from switchlist.core import Op

kc = pytest.importorskip("switchlist._kernels")


def test_backend_selected():
    import switchlist

    assert switchlist.BACKEND == "cython"


@pytest.mark.parametrize("n", [1, 3, 6, 9])
def test_count_agrees(rng, n):
    bits = rng.integers(0, 2, 1 << n, dtype=np.uint8)
    for _ in range(10):
        shifts = rng.permutation(n).astype(np.int64)
        assert kc.permuted_switch_count(bits, n, shifts) == _pykernels.permuted_switch_count(
            bits, n, shifts
        )


def test_block_agrees(rng):
    n = 6
    bits = rng.integers(0, 2, 1 << n, dtype=np.uint8)
    rows = np.array([rng.permutation(n) for _ in range(300)], dtype=np.int64)
    assert kc.min_switch_block(bits, n, rows) == _pykernels.min_switch_block(bits, n, rows, chunk=64)


def test_block_tie_takes_first_row():
    bits = np.ones(8, dtype=np.uint8)
    rows = np.array([[2, 1, 0], [0, 1, 2]], dtype=np.int64)
    assert kc.min_switch_block(bits, 3, rows) == (0, 0)
    assert _pykernels.min_switch_block(bits, 3, rows) == (0, 0)


def test_merge_agrees(rng):
    for _ in range(200):
        s1 = np.unique(rng.integers(1, 1000, rng.integers(0, 30))).astype(np.int64)
        s2 = np.unique(rng.integers(1, 1000, rng.integers(0, 30))).astype(np.int64)
        v1, v2 = (int(v) for v in rng.integers(0, 2, 2))
        for op in Op:
            a = kc.merge_switches(s1, s2, v1, v2, op.value)
            b = _pykernels.merge_switches(s1, s2, v1, v2, op.value)
            assert a.tolist() == b.tolist()

