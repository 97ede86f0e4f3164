"""Switch-list representation of Boolean functions.

A variable order ``perm = (p1, ..., pn)`` maps an assignment ``a`` to the
integer ``sum(a[p_i] * 2**(i-1))``: the first entry of the order is the least
significant bit.  Under a fixed order, a function is stored as its value on
index 0 plus the sorted list of indices ``b`` where ``f(b) != f(b-1)``.

Canonical indexing means the identity order ``(1, ..., n)``, i.e. bit
``i-1`` of the index holds ``x_i``.  Truth tables passed to :func:`compile`
are indexed under the order given with them; :func:`reindex` converts.
"""
from __future__ import annotations

import bisect
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Sequence

import numpy as np

from switchlist._backend import kernels

MAX_VARS = 62
MAX_DENSE_VARS = 20


class SwitchListError(ValueError):
    """Base class for rejected inputs."""


class DimensionError(SwitchListError):
    """Objects over different numbers of variables were mixed."""


class SizeLimitError(SwitchListError):
    """A dense operation was requested above its variable cap."""


class OrderMismatchError(SwitchListError):
    """Operands use different variable orders."""


def _check_dense(n: int, what: str) -> None:
    if n > MAX_DENSE_VARS:
        raise SizeLimitError(
            f"{what} needs a dense table of 2**{n} entries; limit is n <= {MAX_DENSE_VARS}"
        )


@dataclass(frozen=True)
class VarOrder:
    """Permutation of variable ids ``1..n``; position ``i`` carries weight ``2**(i-1)``."""

    perm: tuple[int, ...]

    def __post_init__(self):
        perm = tuple(int(v) for v in self.perm)
        object.__setattr__(self, "perm", perm)
        n = len(perm)
        if not 1 <= n <= MAX_VARS:
            raise SwitchListError(f"order must have 1..{MAX_VARS} variables, got {n}")
        if sorted(perm) != list(range(1, n + 1)):
            raise SwitchListError(f"order {perm} is not a permutation of 1..{n}")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "VarOrder":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "VarOrder":
        """Parse ``"3,4,1,2"`` or ``"identity"`` (the latter needs ``n``)."""
        text = text.strip()
        if text == "identity":
            if n is None:
                raise SwitchListError("'identity' order needs the variable count")
            return cls.identity(n)
        try:
            perm = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise SwitchListError(f"bad order {text!r}: expected comma-separated ids") from None
        order = cls(perm)
        if n is not None and order.n != n:
            raise DimensionError(f"order has {order.n} variables, expected {n}")
        return order

    def shifts(self) -> np.ndarray:
        """Canonical bit position held by each order position (0-based)."""
        return np.asarray(self.perm, dtype=np.int64) - 1

    def __str__(self):
        return ",".join(map(str, self.perm))


@dataclass(frozen=True)
class Assignment:
    """Total 0/1 assignment; ``values[i-1]`` is the value of ``x_i``."""

    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if not values:
            raise SwitchListError("assignment needs at least one variable")
        if any(v not in (0, 1) for v in values):
            raise SwitchListError(f"assignment values must be 0/1, got {values}")
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return len(self.values)

    def __getitem__(self, var: int) -> int:
        if not 1 <= var <= self.n:
            raise KeyError(var)
        return self.values[var - 1]

    @classmethod
    def from_mapping(cls, values: Mapping[int, int]) -> "Assignment":
        n = len(values)
        if set(values) != set(range(1, n + 1)):
            raise SwitchListError(f"assignment must be total on 1..{n}, got ids {sorted(values)}")
        return cls(tuple(values[i] for i in range(1, n + 1)))

    def as_dict(self) -> dict[int, int]:
        return {i + 1: v for i, v in enumerate(self.values)}


@dataclass(frozen=True)
class TruthTable:
    """Dense value vector; ``bits[b]`` is ``f`` at index ``b`` under some order.

    ``bits`` holds one byte per entry, each 0 or 1.
    """

    n: int
    bits: bytes

    def __post_init__(self):
        if not 1 <= self.n <= MAX_DENSE_VARS:
            raise SizeLimitError(f"truth tables support 1 <= n <= {MAX_DENSE_VARS}, got {self.n}")
        bits = bytes(self.bits)
        if len(bits) != 1 << self.n:
            raise DimensionError(f"table for n={self.n} needs {1 << self.n} entries, got {len(bits)}")
        if bits.translate(None, b"\x00\x01"):
            raise SwitchListError("table entries must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_array(cls, n: int, values: Iterable[int]) -> "TruthTable":
        if not isinstance(values, np.ndarray):
            values = list(values)
        return cls(n, np.asarray(values, dtype=np.uint8).tobytes())

    def array(self) -> np.ndarray:
        """Read-only uint8 view of the entries."""
        return np.frombuffer(self.bits, dtype=np.uint8)

    def __getitem__(self, b: int) -> int:
        return self.bits[b]

    def __len__(self):
        return len(self.bits)

    def count_ones(self) -> int:
        return self.bits.count(1)


@dataclass(frozen=True)
class SwitchList:
    """Value at index 0 plus the increasing indices where the value changes."""

    n: int
    order: VarOrder
    first_value: int
    switches: tuple[int, ...] = ()

    def __post_init__(self):
        if self.order.n != self.n:
            raise DimensionError(f"order has {self.order.n} variables, switch-list has {self.n}")
        if self.first_value not in (0, 1):
            raise SwitchListError(f"first value must be 0 or 1, got {self.first_value!r}")
        switches = tuple(int(s) for s in self.switches)
        top = (1 << self.n) - 1
        prev = 0
        for s in switches:
            if s <= prev or s > top:
                raise SwitchListError(
                    f"switches must be strictly increasing within 1..{top}, got {switches}"
                )
            prev = s
        object.__setattr__(self, "switches", switches)

    @classmethod
    def _trusted(cls, n, order, first_value, switches) -> "SwitchList":
        # skips validation; callers guarantee the invariants
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "order", order)
        object.__setattr__(obj, "first_value", first_value)
        object.__setattr__(obj, "switches", switches)
        return obj

    @classmethod
    def constant(cls, value: int, order: VarOrder) -> "SwitchList":
        return cls(order.n, order, value, ())

    def __len__(self):
        return len(self.switches)


def index_of(a: Assignment, pi: VarOrder) -> int:
    """Integer encoding of ``a`` under ``pi``."""
    if a.n != pi.n:
        raise DimensionError(f"assignment has {a.n} variables, order has {pi.n}")
    b = 0
    for i, var in enumerate(pi.perm):
        b |= a.values[var - 1] << i
    return b


def assignment_of(b: int, pi: VarOrder) -> Assignment:
    """Inverse of :func:`index_of`."""
    n = pi.n
    if not 0 <= b < 1 << n:
        raise SwitchListError(f"index {b} outside 0..{(1 << n) - 1}")
    values = [0] * n
    for i, var in enumerate(pi.perm):
        values[var - 1] = (b >> i) & 1
    return Assignment(tuple(values))


def reindex(t: TruthTable, src: VarOrder, dst: VarOrder) -> TruthTable:
    """Re-express a table indexed under ``src`` as one indexed under ``dst``."""
    if not t.n == src.n == dst.n:
        raise DimensionError("table and orders must agree on n")
    if src == dst:
        return t
    # canonical position of each variable inside the src index
    src_pos = np.empty(t.n, dtype=np.int64)
    src_pos[np.asarray(src.perm) - 1] = np.arange(t.n)
    b = np.arange(1 << t.n, dtype=np.int64)
    src_idx = np.zeros_like(b)
    for i, var in enumerate(dst.perm):
        src_idx |= ((b >> i) & 1) << src_pos[var - 1]
    return TruthTable(t.n, t.array()[src_idx].tobytes())


def compile(t: TruthTable, pi: VarOrder) -> SwitchList:
    """Switch-list of the table ``t``, which must be indexed under ``pi``."""
    if t.n != pi.n:
        raise DimensionError(f"table has {t.n} variables, order has {pi.n}")
    bits = t.array()
    switches = np.flatnonzero(bits[1:] != bits[:-1]) + 1
    return SwitchList._trusted(t.n, pi, int(bits[0]), tuple(switches.tolist()))


def decompile(sl: SwitchList) -> TruthTable:
    """Dense table of ``sl`` indexed under ``sl.order``."""
    _check_dense(sl.n, "decompile")
    flips = np.zeros(1 << sl.n, dtype=np.uint8)
    flips[0] = sl.first_value
    if sl.switches:
        flips[np.asarray(sl.switches, dtype=np.int64)] = 1
    return TruthTable(sl.n, (np.bitwise_xor.accumulate(flips)).tobytes())


def evaluate(sl: SwitchList, a: Assignment) -> int:
    """Value of ``sl`` on ``a`` by binary search over the switches."""
    if a.n != sl.n:
        raise DimensionError(f"assignment has {a.n} variables, switch-list has {sl.n}")
    passed = bisect.bisect_right(sl.switches, index_of(a, sl.order))
    return sl.first_value ^ (passed & 1)


def negate(sl: SwitchList) -> SwitchList:
    """Complement: flip the first value, keep order and switches."""
    return SwitchList._trusted(sl.n, sl.order, 1 - sl.first_value, sl.switches)


class Op(Enum):
    """Binary operators; the value is the 4-bit table indexed by ``2*a + b``."""

    AND = 0b1000
    OR = 0b1110
    XOR = 0b0110

    def __call__(self, a: int, b: int) -> int:
        return (self.value >> (2 * a + b)) & 1

    @classmethod
    def parse(cls, name: str | "Op") -> "Op":
        if isinstance(name, Op):
            return name
        try:
            return cls[name.upper()]
        except KeyError:
            raise SwitchListError(f"unknown operator {name!r}; use and, or, xor") from None


def combine(sl1: SwitchList, sl2: SwitchList, op: Op | str) -> SwitchList:
    """Apply ``op`` pointwise by one merge pass over both switch lists.

    Both operands must share the same order; otherwise call :func:`reorder` first.
    """
    op = Op.parse(op)
    if sl1.n != sl2.n:
        raise DimensionError(f"operands have {sl1.n} and {sl2.n} variables")
    if sl1.order != sl2.order:
        raise OrderMismatchError(
            f"operands use orders ({sl1.order}) and ({sl2.order}); reorder first"
        )
    merged = kernels.merge_switches(
        np.asarray(sl1.switches, dtype=np.int64),
        np.asarray(sl2.switches, dtype=np.int64),
        sl1.first_value,
        sl2.first_value,
        op.value,
    )
    return SwitchList._trusted(
        sl1.n, sl1.order, op(sl1.first_value, sl2.first_value), tuple(merged.tolist())
    )


def reorder(sl: SwitchList, target: VarOrder) -> SwitchList:
    """Same function under ``target``; goes through the dense table (exponential in n)."""
    if sl.n != target.n:
        raise DimensionError(f"switch-list has {sl.n} variables, target order has {target.n}")
    if sl.order == target:
        return sl
    _check_dense(sl.n, "reorder")
    return compile(reindex(decompile(sl), sl.order, target), target)


def is_consistent(sl: SwitchList) -> bool:
    return sl.first_value == 1 or bool(sl.switches)


def is_valid(sl: SwitchList) -> bool:
    return sl.first_value == 1 and not sl.switches


def count_models(sl: SwitchList) -> int:
    """Number of satisfying assignments, summed over the value-1 intervals."""
    bounds = (0, *sl.switches, 1 << sl.n)
    # interval k spans bounds[k]..bounds[k+1]-1 and has value first_value ^ (k & 1)
    start = 0 if sl.first_value else 1
    return sum(bounds[k + 1] - bounds[k] for k in range(start, len(bounds) - 1, 2))


def equivalent(sl1: SwitchList, sl2: SwitchList) -> bool:
    """Same function; sound as structural equality because the representation is canonical."""
    if sl1.n != sl2.n:
        raise DimensionError(f"operands have {sl1.n} and {sl2.n} variables")
    if sl1.order != sl2.order:
        raise OrderMismatchError("equivalence needs a shared order; reorder first")
    return sl1.first_value == sl2.first_value and sl1.switches == sl2.switches


def size_of(sl: SwitchList) -> int:
    """``n`` times the number of switches (the order itself is not counted)."""
    return sl.n * len(sl.switches)


def table_from_predicate(n: int, pred, pi: VarOrder | None = None) -> TruthTable:
    """Dense table of ``pred(assignment) -> bool`` indexed under ``pi`` (default identity)."""
    _check_dense(n, "table_from_predicate")
    pi = pi or VarOrder.identity(n)
    return TruthTable(n, bytes(int(bool(pred(assignment_of(b, pi)))) for b in range(1 << n)))


def all_assignments(n: int) -> Sequence[Assignment]:
    """Every assignment over ``n`` variables in canonical index order."""
    _check_dense(n, "all_assignments")
    ident = VarOrder.identity(n)
    return [assignment_of(b, ident) for b in range(1 << n)]
