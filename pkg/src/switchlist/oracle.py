"""Brute-force ground truth: dense switch counting and exhaustive order search.

Tables handed to this module use canonical indexing (identity order).
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from switchlist._backend import kernels
from switchlist.core import DimensionError, SizeLimitError, TruthTable, VarOrder

MAX_SEARCH_VARS = 8

SEARCH_CSV_HEADER = "n,function,min_switches,argmin_order,orders_examined,bound,bound_holds"


@dataclass(frozen=True)
class OrderSearchResult:
    n: int
    min_switches: int
    argmin_order: VarOrder
    orders_examined: int

    @property
    def exhaustive(self) -> bool:
        return self.orders_examined == math.factorial(self.n)

    def csv_row(self, function: str, bound: int, at_least: bool = True) -> str:
        """One row of the search CSV; ``at_least`` picks the direction of the bound check."""
        holds = self.min_switches >= bound if at_least else self.min_switches <= bound
        order = " ".join(map(str, self.argmin_order.perm))
        return (
            f"{self.n},{function},{self.min_switches},{order},"
            f"{self.orders_examined},{bound},{str(holds).lower()}"
        )


def switches_under_order(t: TruthTable, pi: VarOrder) -> int:
    """Number of value changes of the canonical table ``t`` when read under ``pi``."""
    if t.n != pi.n:
        raise DimensionError(f"table has {t.n} variables, order has {pi.n}")
    return int(kernels.permuted_switch_count(t.array(), t.n, pi.shifts()))


def _search_unit(bits: bytes, n: int, head: int) -> tuple[int, tuple[int, ...], int]:
    # all orders whose first entry is `head`, in lexicographic order
    rest = [v for v in range(1, n + 1) if v != head]
    perms = np.array([(head, *p) for p in permutations(rest)], dtype=np.int64).reshape(-1, n)
    count, row = kernels.min_switch_block(
        np.frombuffer(bits, dtype=np.uint8), n, np.ascontiguousarray(perms - 1)
    )
    return int(count), tuple(int(v) for v in perms[row]), perms.shape[0]


def min_switches_over_orders(
    t: TruthTable, n: int | None = None, workers: int = 1
) -> OrderSearchResult:
    """Minimum switch count of ``t`` over all ``n!`` variable orders.

    Ties go to the lexicographically smallest order.  ``workers > 1`` spreads the
    per-first-variable work units over processes; the result does not depend on it.
    """
    if n is None:
        n = t.n
    if n != t.n:
        raise DimensionError(f"table has {t.n} variables, search asked for {n}")
    if n > MAX_SEARCH_VARS:
        raise SizeLimitError(
            f"exhaustive order search supports n <= {MAX_SEARCH_VARS}, got {n}"
        )
    heads = range(1, n + 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            units = list(pool.map(_search_unit, [t.bits] * n, [n] * n, heads))
    else:
        units = [_search_unit(t.bits, n, h) for h in heads]
    count, perm, _ = min(units, key=lambda u: (u[0], u[1]))
    return OrderSearchResult(
        n=n,
        min_switches=count,
        argmin_order=VarOrder(perm),
        orders_examined=sum(u[2] for u in units),
    )


def random_function(n: int, seed: int) -> TruthTable:
    """Uniformly random canonical table.

    Stream: ``numpy.random.default_rng(seed)`` (PCG64), one call
    ``integers(0, 2, size=2**n, dtype=uint8)``; entry ``b`` is the ``b``-th draw.
    """
    if not 1 <= n <= 20:
        raise SizeLimitError(f"random functions support 1 <= n <= 20, got {n}")
    rng = np.random.default_rng(seed)
    return TruthTable(n, rng.integers(0, 2, size=1 << n, dtype=np.uint8).tobytes())
