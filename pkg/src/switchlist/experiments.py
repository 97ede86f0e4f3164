"""Reproduction experiments for the f1/f2 succinctness results, reported as CSV rows."""
from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass, field
from typing import Callable

from switchlist.core import SizeLimitError, SwitchListError, VarOrder, combine, negate, reorder
from switchlist.families import Family, family_table, good_order_for, lower_bound, make_f1, make_f2
from switchlist.oracle import MAX_SEARCH_VARS, min_switches_over_orders

CSV_FIELDS = ("n", "function", "order", "switch_count", "paper_bound", "bound_holds", "wall_time_ms")

EXPERIMENTS = ("observation1", "proposition1", "theorem-conjunction", "bottom-up-demo")


@dataclass
class ExperimentRow:
    n: int
    function: str
    order: str  # space-separated order, "min" for exhaustive search, "error" on failure
    switch_count: int | None
    paper_bound: int | None
    at_most: bool  # True: bound is an upper bound on switch_count
    wall_time_ms: float
    error: str | None = None

    @property
    def bound_holds(self) -> bool:
        if self.switch_count is None or self.paper_bound is None:
            return False
        if self.at_most:
            return self.switch_count <= self.paper_bound
        return self.switch_count >= self.paper_bound

    def as_dict(self) -> dict[str, str]:
        return {
            "n": str(self.n),
            "function": self.function,
            "order": self.order,
            "switch_count": "" if self.switch_count is None else str(self.switch_count),
            "paper_bound": "" if self.paper_bound is None else str(self.paper_bound),
            "bound_holds": str(self.bound_holds).lower(),
            "wall_time_ms": f"{self.wall_time_ms:.3f}",
        }


@dataclass
class ExperimentReport:
    name: str
    rows: list[ExperimentRow] = field(default_factory=list)
    errors: list[SwitchListError] = field(default_factory=list)
    log: list[str] = field(default_factory=list)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        for row in self.rows:
            writer.writerow(row.as_dict())
        return buf.getvalue()

    @property
    def all_hold(self) -> bool:
        return all(r.bound_holds for r in self.rows if r.error is None)


def _fmt(order: VarOrder) -> str:
    return " ".join(map(str, order.perm))


def _observation1(n, report, workers):
    for which, make in ((Family.F1, make_f1), (Family.F2, make_f2)):
        t0 = time.perf_counter()
        order = good_order_for(which, n)
        count = len(make(n, order).compile().switches)
        ms = (time.perf_counter() - t0) * 1e3
        report.rows.append(ExperimentRow(n, which.value, _fmt(order), count, 2, True, ms))


def _search(name: str) -> Callable:
    def run(n, report, workers):
        if n > MAX_SEARCH_VARS:
            raise SizeLimitError(f"exhaustive order search supports n <= {MAX_SEARCH_VARS}, got {n}")
        t0 = time.perf_counter()
        res = min_switches_over_orders(family_table(name, n), workers=workers)
        ms = (time.perf_counter() - t0) * 1e3
        report.rows.append(
            ExperimentRow(n, name, "min", res.min_switches, lower_bound(n), False, ms)
        )
        report.log.append(
            f"n={n} {name}: min {res.min_switches} switches at order {res.argmin_order} "
            f"over {res.orders_examined} orders"
        )

    return run


def _bottom_up(n, report, workers):
    t0 = time.perf_counter()
    o1, o2 = good_order_for(Family.F1, n), good_order_for(Family.F2, n)
    g1 = negate(make_f1(n, o1).compile())
    g2 = negate(make_f2(n, o2).compile())
    ms = (time.perf_counter() - t0) * 1e3
    report.rows.append(ExperimentRow(n, "not-f1", _fmt(o1), len(g1), 2, True, ms))
    report.rows.append(ExperimentRow(n, "not-f2", _fmt(o2), len(g2), 2, True, ms))
    report.log.append(f"n={n}: not-f1 under ({o1}) has {len(g1)} switches")
    report.log.append(f"n={n}: not-f2 under ({o2}) has {len(g2)} switches")

    t0 = time.perf_counter()
    g2r = reorder(g2, o1)
    conj = combine(g1, g2r, "and")
    ms = (time.perf_counter() - t0) * 1e3
    report.log.append(f"n={n}: not-f2 reordered to ({o1}) has {len(g2r)} switches")
    report.log.append(
        f"n={n}: conjunction has {len(conj)} switches, "
        f"inputs had {len(g1)} and {len(g2)}; lower bound {lower_bound(n)}"
    )
    report.rows.append(
        ExperimentRow(n, "not-f1-and-not-f2", _fmt(o1), len(conj), lower_bound(n), False, ms)
    )


_RUNNERS = {
    "observation1": _observation1,
    "proposition1": _search("f1-or-f2"),
    "theorem-conjunction": _search("not-f1-and-not-f2"),
    "bottom-up-demo": _bottom_up,
}


def run_experiment(name: str, ns: list[int], workers: int = 1) -> ExperimentReport:
    """Run one experiment for each ``n``; a failing ``n`` yields an error row and the run continues."""
    if name not in _RUNNERS:
        raise SwitchListError(f"unknown experiment {name!r}; choose from {', '.join(EXPERIMENTS)}")
    report = ExperimentReport(name)
    for n in ns:
        try:
            _RUNNERS[name](n, report, workers)
        except SwitchListError as exc:
            report.errors.append(exc)
            report.log.append(f"n={n}: error: {exc}")
            report.rows.append(ExperimentRow(n, name, "error", None, None, True, 0.0, str(exc)))
    return report
