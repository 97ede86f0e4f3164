import itertools
import math

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

import brute
from switchlist import (
    SizeLimitError,
    TruthTable,
    VarOrder,
    compile,
    min_switches_over_orders,
    random_function,
    reindex,
    switches_under_order,
)
from switchlist.families import family_table, lower_bound
from switchlist.oracle import SEARCH_CSV_HEADER

# Minimum switch counts of f1 | f2 found by a plain-loop search over every order
# (see brute.py); the identity order is the lexicographically smallest argmin.
MEASURED_MIN_F1_OR_F2 = {4: 6, 6: 14, 8: 30}


def _brute_min(pred, n):
    best = None
    for perm in itertools.permutations(range(1, n + 1)):
        c = len(brute.switches(brute.sequence(pred, perm)))
        if best is None or c < best[0]:
            best = (c, perm)
    return best


def test_switches_under_order_examples(backend):
    ident = VarOrder.identity(4)
    one = TruthTable(4, bytes([1] * 16))
    assert switches_under_order(one, VarOrder((2, 4, 1, 3))) == 0
    assert switches_under_order(family_table("f1", 4), VarOrder((3, 4, 1, 2))) == 2
    or_count = switches_under_order(family_table("f1-or-f2", 4), ident)
    f_or = lambda x: brute.f1(x) or brute.f2(x)  # noqa: E731
    assert or_count == len(brute.switches(brute.sequence(f_or, ident.perm))) == 6
    assert or_count >= 5


@settings(max_examples=30, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(st.integers(1, 6), st.integers(0, 2**32))
def test_agreement_with_compile(backend, n, seed):
    t = random_function(n, seed)
    ident = VarOrder.identity(n)
    for perm in itertools.permutations(range(1, n + 1)):
        pi = VarOrder(perm)
        assert switches_under_order(t, pi) == len(compile(reindex(t, ident, pi), pi).switches)


def test_search_constant(backend):
    res = min_switches_over_orders(TruthTable(3, bytes([1] * 8)), 3)
    assert (res.min_switches, res.orders_examined) == (0, 6)
    assert res.argmin_order == VarOrder((1, 2, 3))
    assert res.exhaustive


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_search_matches_brute_force(backend, n):
    for seed in range(5):
        t = random_function(n, seed)
        count, perm = _brute_min(brute.from_canonical(list(t.bits)), n)
        res = min_switches_over_orders(t)
        assert (res.min_switches, res.argmin_order.perm) == (count, perm)
        assert res.orders_examined == math.factorial(n)
        assert switches_under_order(t, res.argmin_order) == res.min_switches


@pytest.mark.parametrize("n", [4, 6])
def test_family_search_against_brute(n):
    f_or = lambda x: brute.f1(x) or brute.f2(x)  # noqa: E731
    count, perm = _brute_min(f_or, n)
    res = min_switches_over_orders(family_table("f1-or-f2", n))
    assert res.min_switches == count == MEASURED_MIN_F1_OR_F2[n]
    assert res.argmin_order.perm == perm


def test_search_bounds_n8(backend):
    res = min_switches_over_orders(family_table("f1-or-f2", 8))
    assert res.min_switches == MEASURED_MIN_F1_OR_F2[8]
    assert res.min_switches >= lower_bound(8)
    assert res.argmin_order == VarOrder.identity(8)
    assert res.orders_examined == 40320
    assert min_switches_over_orders(family_table("f1", 8)).min_switches <= 2


def test_minimality_against_explicit_orders(rng):
    t = random_function(6, 7)
    best = min_switches_over_orders(t).min_switches
    for _ in range(50):
        pi = VarOrder(tuple(int(v) for v in rng.permutation(6) + 1))
        assert best <= switches_under_order(t, pi)


def test_parallel_determinism():
    t = random_function(6, 11)
    seq = min_switches_over_orders(t)
    assert min_switches_over_orders(t, workers=2) == seq
    assert min_switches_over_orders(t) == seq


def test_search_cap():
    with pytest.raises(SizeLimitError, match="n <= 8"):
        min_switches_over_orders(random_function(9, 0))


def test_csv_row():
    res = min_switches_over_orders(family_table("f1-or-f2", 4))
    assert SEARCH_CSV_HEADER.split(",") == [
        "n", "function", "min_switches", "argmin_order", "orders_examined", "bound", "bound_holds"
    ]
    assert res.csv_row("f1-or-f2", 5) == "4,f1-or-f2,6,1 2 3 4,24,5,true"
    assert res.csv_row("f1-or-f2", 5, at_least=False) == "4,f1-or-f2,6,1 2 3 4,24,5,false"


def test_random_function():
    assert random_function(8, 3) == random_function(8, 3)
    for s in range(100):
        assert random_function(6, 2 * s) != random_function(6, 2 * s + 1)
    unary = {tuple(random_function(1, s).bits) for s in range(64)}
    assert unary <= {(0, 0), (0, 1), (1, 0), (1, 1)}
    assert len(unary) == 4
    with pytest.raises(SizeLimitError):
        random_function(21, 0)
