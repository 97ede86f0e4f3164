import itertools

import numpy as np
import pytest

import brute
from switchlist import (
    SwitchListError,
    VarOrder,
    count_models,
    index_of,
    lower_bound,
    make_f1,
    make_f2,
    switches_under_order,
    witness_sequence,
)
from switchlist.core import all_assignments
from switchlist.families import Family, family_table, good_order_for


def _or(x):
    return brute.f1(x) or brute.f2(x)


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10])
def test_family_semantics(n):
    ident = VarOrder.identity(n)
    assert list(make_f1(n).table.bits) == brute.sequence(brute.f1, ident.perm)
    assert list(make_f2(n).table.bits) == brute.sequence(brute.f2, ident.perm)
    assert list(family_table("f1-or-f2", n).bits) == brute.sequence(_or, ident.perm)


def test_family_examples():
    f = make_f1(2)
    models = [a.values for a in all_assignments(2) if f.table[index_of(a, f.order)]]
    assert sorted(models) == [(0, 0), (1, 0), (1, 1)]
    assert count_models(f.compile()) == 3
    assert count_models(make_f1(4).compile()) == 5
    for n in (4, 6):
        for inst in (make_f1(n), make_f2(n)):
            assert inst.table[0] == 1 and inst.table[2**n - 1] == 1


def test_family_under_order():
    pi = VarOrder((2, 4, 1, 3))
    assert list(make_f2(4, pi).table.bits) == brute.sequence(brute.f2, pi.perm)


@pytest.mark.parametrize("n", [1, 3, 22])
def test_family_rejects_bad_n(n):
    with pytest.raises(SwitchListError):
        make_f1(n)
    with pytest.raises(SwitchListError):
        good_order_for("f1", n)


def test_good_order_examples():
    pi = good_order_for(Family.F1, 4)
    assert pi == VarOrder((3, 4, 1, 2))
    assert make_f1(4, pi).compile().switches == (1, 12)
    pi2 = good_order_for("f2", 4)
    assert set(pi2.perm[2:]) == {3, 4}
    assert len(make_f2(4, pi2).compile().switches) <= 2


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10, 12])
def test_good_order_two_switches(n):
    for which, pred in ((Family.F1, brute.f1), (Family.F2, brute.f2)):
        pi = good_order_for(which, n)
        if n <= 10:
            assert len(brute.switches(brute.sequence(pred, pi.perm))) <= 2
        assert len(make_f1(n, pi).compile().switches if which is Family.F1
                   else make_f2(n, pi).compile().switches) == 2


def test_lower_bound():
    assert [lower_bound(n) for n in (2, 4, 6, 8)] == [1, 5, 13, 29]
    with pytest.raises(SwitchListError):
        lower_bound(5)


def _check_witness(n, pi):
    w = witness_sequence(n, pi)
    idx = [index_of(a, pi) for a in w.entries]
    sat = [int(_or(list(a.values))) for a in w.entries]
    assert len(w.entries) == 2 ** (n // 2 + 1) - 2
    assert all(x < y for x, y in zip(idx, idx[1:]))
    assert sat == [0, 1] * (len(sat) // 2)
    assert all(any(a.values) for a in w.entries)
    # every adjacent pair straddles at least one switch
    seq = brute.sequence(_or, pi.perm)
    assert len(brute.switches(seq)) >= lower_bound(n)
    assert switches_under_order(family_table("f1-or-f2", n), pi) >= len(idx) - 1
    return w


def test_witness_n4_identity():
    w = _check_witness(4, VarOrder((1, 2, 3, 4)))
    assert w.half_used == "X2"  # x1 is least significant, so the X2 half varies
    assert w.pivot == 1


@pytest.mark.parametrize("n", [4, 6])
def test_witness_all_orders(n):
    halves = set()
    for perm in itertools.permutations(range(1, n + 1)):
        halves.add(_check_witness(n, VarOrder(perm)).half_used)
    assert halves == {"X1", "X2"}


def test_witness_random_orders_n8():
    rng = np.random.default_rng(5)
    for _ in range(40):
        _check_witness(8, VarOrder(tuple(int(v) for v in rng.permutation(8) + 1)))


def test_witness_n2_degenerate():
    # with one variable per half, e0 of the only extension is the all-zero assignment
    w = witness_sequence(2, VarOrder((1, 2)))
    assert len(w.entries) == 2
    assert w.entries[0].values == (0, 0)


def test_de_morgan_transfer():
    for n in (2, 4, 6, 8):
        t_or = np.frombuffer(family_table("f1-or-f2", n).bits, dtype=np.uint8)
        t_and = np.frombuffer(family_table("not-f1-and-not-f2", n).bits, dtype=np.uint8)
        assert np.array_equal(t_and, 1 - t_or)
