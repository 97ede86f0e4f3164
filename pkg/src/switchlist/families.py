"""The hard pair f1, f2 and the alternating witness sequence for their disjunction.

With ``h = n/2``::

    f1 = (x_1 & ... & x_h)     | (~x_1 & ... & ~x_n)
    f2 = (x_{h+1} & ... & x_n) | (~x_1 & ... & ~x_n)

Each has a two-switch representation, while every order needs at least
``2**(h+1) - 3`` switches for ``f1 | f2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from switchlist.core import (
    MAX_DENSE_VARS,
    Assignment,
    SwitchListError,
    TruthTable,
    VarOrder,
    compile,
    reindex,
)


class Family(str, Enum):
    F1 = "f1"
    F2 = "f2"


class ConstructionError(RuntimeError):
    """A constructed order failed its own switch-count check."""


FAMILY_NAMES = ("f1", "f2", "f1-or-f2", "not-f1-and-not-f2")


def _check_even(n: int) -> None:
    if n % 2 or not 2 <= n <= MAX_DENSE_VARS:
        raise SwitchListError(f"family needs an even n in 2..{MAX_DENSE_VARS}, got {n}")


def _halves(n: int) -> tuple[frozenset[int], frozenset[int]]:
    h = n // 2
    return frozenset(range(1, h + 1)), frozenset(range(h + 1, n + 1))


def _canonical(which: Family, n: int) -> np.ndarray:
    h = n // 2
    c = np.arange(1 << n, dtype=np.int64)
    mask = (1 << h) - 1 if which is Family.F1 else ((1 << n) - 1) ^ ((1 << h) - 1)
    return (((c & mask) == mask) | (c == 0)).astype(np.uint8)


@dataclass(frozen=True)
class FamilyInstance:
    n: int
    which: Family
    order: VarOrder
    table: TruthTable  # indexed under `order`

    def compile(self):
        return compile(self.table, self.order)


def _make(which: Family, n: int, order: VarOrder | None) -> FamilyInstance:
    _check_even(n)
    ident = VarOrder.identity(n)
    order = order or ident
    table = reindex(TruthTable(n, _canonical(which, n).tobytes()), ident, order)
    return FamilyInstance(n, which, order, table)


def make_f1(n: int, order: VarOrder | None = None) -> FamilyInstance:
    return _make(Family.F1, n, order)


def make_f2(n: int, order: VarOrder | None = None) -> FamilyInstance:
    return _make(Family.F2, n, order)


def family_table(name: str, n: int) -> TruthTable:
    """Canonical table for a family addressed by its CLI name."""
    _check_even(n)
    f1, f2 = _canonical(Family.F1, n), _canonical(Family.F2, n)
    if name == "f1":
        bits = f1
    elif name == "f2":
        bits = f2
    elif name == "f1-or-f2":
        bits = f1 | f2
    elif name == "not-f1-and-not-f2":
        bits = (1 - f1) & (1 - f2)
    else:
        raise SwitchListError(f"unknown family {name!r}; choose from {', '.join(FAMILY_NAMES)}")
    return TruthTable(n, bits.astype(np.uint8).tobytes())


def good_order_for(which: Family | str, n: int) -> VarOrder:
    """Order giving at most two switches: the family's conjunction block goes on top."""
    which = Family(which)
    _check_even(n)
    low, high = _halves(n)
    conj = low if which is Family.F1 else high
    rest = high if which is Family.F1 else low
    order = VarOrder((*sorted(rest), *sorted(conj)))
    count = len(_make(which, n, order).compile().switches)
    if count > 2:
        raise ConstructionError(f"order {order} gives {count} switches for {which.value}")
    return order


def lower_bound(n: int) -> int:
    """Minimum number of switches of f1 | f2 under any order."""
    if n % 2 or n < 2:
        raise SwitchListError(f"lower bound is defined for even n >= 2, got {n}")
    return 2 ** (n // 2 + 1) - 3


@dataclass(frozen=True)
class WitnessSequence:
    n: int
    order: VarOrder
    entries: tuple[Assignment, ...]
    half_used: str  # "X1" or "X2": the half the extensions range over
    pivot: int  # variable toggled between e0 and e1


def witness_sequence(n: int, pi: VarOrder) -> WitnessSequence:
    """Interleave ``e0(a), e1(a)`` over all non-all-one ``a`` on one half.

    The pivot is the least significant variable of ``pi``.  Its half is held at 1
    except the pivot, which is 0 in ``e0`` and 1 in ``e1``; the other half runs
    through its assignments in the order ``pi`` induces on it.
    """
    _check_even(n)
    if pi.n != n:
        raise SwitchListError(f"order has {pi.n} variables, expected {n}")
    x1, x2 = _halves(n)
    pivot = pi.perm[0]
    fixed, free, half_used = (x2, x1, "X1") if pivot in x2 else (x1, x2, "X2")
    free_vars = [v for v in pi.perm if v in free]  # least significant first
    entries = []
    for k in range((1 << len(free_vars)) - 1):
        base = [0] * n
        for v in fixed:
            base[v - 1] = 1
        for j, v in enumerate(free_vars):
            base[v - 1] = (k >> j) & 1
        for bit in (0, 1):
            base[pivot - 1] = bit
            entries.append(Assignment(tuple(base)))
    return WitnessSequence(n, pi, tuple(entries), half_used, pivot)
