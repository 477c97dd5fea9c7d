import itertools

import pytest
from hypothesis import given, settings, strategies as st

from positroid import (
    ContractError,
    NonCrossingPartition,
    Positroid,
    closure,
    enumerate_noncrossing_partitions,
    interval_rank,
    minelts,
    nbd,
    nbd_with_partition,
    push_procedure,
    rank,
    transfer_step,
)
from positroid.cyclic import decompose, from_mask
from positroid.errors import CapacityError, InputError
from positroid.rank import exchange_admissible, interval_rank_by_chords, minelts_by_chords

from conftest import instance, oracle_for

E3 = {1, 2, 3, 8, 9, 10}


def test_golden_push(golden):
    res = push_procedure(golden, {1, 2, 7, 8, 9, 10, 13})
    assert res.trace[1].H == {1, 4, 7, 8, 10, 11, 12}
    assert res.H == {1, 4, 7, 8, 10, 11, 13}
    assert res.trace[0].H == golden.I(1)


def test_golden_rank_quantities(golden):
    assert rank(golden, E3) == rank(golden, E3, method="ncp") == 3
    assert interval_rank(golden, (1, 3)) == 2
    assert interval_rank(golden, (8, 10)) == 3
    assert minelts(golden, 3, 8) == minelts(golden, 10, 1) == 2
    assert nbd_with_partition(golden, E3, [{1}, {2}]) == 5
    assert nbd_with_partition(golden, E3, [{1, 2}]) == 3
    assert nbd(golden, E3) == 3
    assert closure(golden, {1, 2, 3}) == {1, 2, 3, 8, 9}


def test_trivial_sets(golden):
    assert rank(golden, set()) == 0
    assert rank(golden, range(1, 15)) == 7


def test_unknown_method(golden):
    with pytest.raises(InputError):
        rank(golden, {1}, method="magic")


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] | {first}] + part[i + 1:]
        yield [frozenset({first})] + part


def _crosses(blocks):
    for A, B in itertools.permutations(blocks, 2):
        for a, c in itertools.combinations(sorted(A), 2):
            if any(a < b < c for b in B) and any(x < a or x > c for x in B):
                return True
    return False


@pytest.mark.parametrize("k,count", [(1, 1), (2, 2), (3, 5), (4, 14), (5, 42), (6, 132)])
def test_noncrossing_counts_against_brute_force(k, count):
    fast = enumerate_noncrossing_partitions(k)
    brute = {frozenset(p) for p in _set_partitions(list(range(1, k + 1))) if not _crosses(p)}
    assert len(fast) == count == len(brute)
    assert {frozenset(p.parts) for p in fast} == brute


def test_noncrossing_validation():
    with pytest.raises(InputError):
        NonCrossingPartition([{1, 3}, {2, 4}])
    with pytest.raises(InputError):
        NonCrossingPartition([{1}, {3}], 3)
    with pytest.raises(CapacityError):
        enumerate_noncrossing_partitions(13)


@pytest.mark.parametrize("seed", range(40))
def test_chord_forms_agree(seed):
    P = instance(seed)
    for a in range(1, P.n + 1):
        for b in range(1, P.n + 1):
            assert interval_rank(P, (a, b)) == interval_rank_by_chords(P, (a, b))
            assert minelts(P, b, a) == minelts_by_chords(P, b, a)


@pytest.mark.parametrize("seed", range(60))
def test_push_is_rotation_invariant_and_optimal(seed):
    P = instance(seed)
    M = oracle_for(P)
    for m in range(1, (1 << P.n) - 1, 3):
        E = from_mask(m)
        k = len(decompose(E, P.n))
        expected = M.rank(E)
        for s in range(k):
            H = push_procedure(P, E, start=s).H
            assert M.is_basis(H)
            assert len(H & E) == expected


def test_transfer_step_guard_counterexample():
    # the plain exchange 6 -> 1 would leave the positroid here
    P = Positroid.parse("2 1 7 6 3 5 4")
    J = frozenset({2, 5, 6, 7})
    assert not exchange_admissible(P, J, 6, 1, 7)
    assert {1, 2, 5, 7} not in set(map(frozenset, oracle_for(P).bases))
    with pytest.raises(ContractError):
        transfer_step(P, J, 2, 5, 7)


def test_transfer_step_contract(golden):
    with pytest.raises(ContractError):
        transfer_step(golden, golden.I(1), 1, 9, 5)  # not cyclically ordered
    H = transfer_step(golden, golden.I(1), 1, 2, 7)
    assert len(H) == 7 and H != golden.I(1)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 9), st.integers(0, 10_000), st.data())
def test_rank_axioms(n, seed, data):
    P = instance(seed, [n])
    A = frozenset(data.draw(st.sets(st.integers(1, n))))
    B = frozenset(data.draw(st.sets(st.integers(1, n))))
    rA, rB = rank(P, A), rank(P, B)
    assert 0 <= rA <= min(len(A), P.d)
    assert rank(P, A | B) + rank(P, A & B) <= rA + rB
    if A <= B:
        assert rA <= rB
    assert rank(P, closure(P, A)) == rA


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 9), st.integers(0, 10_000), st.data())
def test_ncp_minimum_is_rank(n, seed, data):
    P = instance(seed, [n])
    E = frozenset(data.draw(st.sets(st.integers(1, n), min_size=1, max_size=n - 1)))
    assert rank(P, E, method="ncp") == rank(P, E) == oracle_for(P).rank(E)
