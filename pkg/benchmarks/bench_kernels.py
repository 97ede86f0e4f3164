"""Compare the compiled and Python kernels on the workloads that dominate runtime.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import math
import time
from itertools import permutations

import numpy as np

from switchlist import _pykernels
from switchlist.core import Op
from switchlist.families import family_table

try:
    from switchlist import _kernels
except ImportError:
    _kernels = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def workloads():
    bits = np.frombuffer(family_table("f1-or-f2", 8).bits, dtype=np.uint8)
    rows = np.array(list(permutations(range(8))), dtype=np.int64)
    rng = np.random.default_rng(0)
    s1 = np.unique(rng.integers(1, 2**40, 20000)).astype(np.int64)
    s2 = np.unique(rng.integers(1, 2**40, 20000)).astype(np.int64)
    return {
        f"order search n=8 ({math.factorial(8)} orders)": lambda k: k.min_switch_block(bits, 8, rows),
        "single order count n=20": lambda k: k.permuted_switch_count(
            np.frombuffer(family_table("f1-or-f2", 20).bits, dtype=np.uint8), 20,
            np.arange(20, dtype=np.int64)[::-1].copy(),
        ),
        f"merge {len(s1)}+{len(s2)} switches (xor)": lambda k: k.merge_switches(
            s1, s2, 0, 1, Op.XOR.value
        ),
    }


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = [("python", _pykernels)] + ([("cython", _kernels)] if _kernels else [])
    print(f"{'workload':45s} " + " ".join(f"{name:>10s}" for name, _ in backends) + "   speedup")
    for label, work in workloads().items():
        times, outs = [], []
        for _, mod in backends:
            t, out = best_of(lambda: work(mod), args.repeat)
            times.append(t)
            outs.append(np.asarray(out).tolist())
        assert all(o == outs[0] for o in outs), f"backends disagree on {label}"
        speed = f"{times[0] / times[-1]:8.1f}x" if len(times) > 1 else "       -"
        print(f"{label:45s} " + " ".join(f"{t * 1e3:8.1f}ms" for t in times) + f"  {speed}")


if __name__ == "__main__":
    main()
