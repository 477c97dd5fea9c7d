import pytest

from positroid import (
    ContractError,
    enumerate_inseparable_flats,
    is_flat_inseparable_criterion,
    is_intersection_of_interval_flats,
    is_interval_flat,
    is_separable,
)
from positroid.cyclic import CyclicInterval, from_mask, interval_members
from positroid.flats import components, interval_flats, intersections_of_interval_flats, is_flat
from positroid.rank import closure

from conftest import instance, oracle_for

E3 = {1, 2, 3, 8, 9, 10}


def test_golden_interval_flats(golden):
    assert is_interval_flat(golden, (1, 10))
    assert not is_interval_flat(golden, (1, 3))
    assert is_interval_flat(golden, (5, 4))  # whole ground set


def test_golden_cover_witnesses(golden):
    ok, witnesses = is_intersection_of_interval_flats(golden, E3)
    assert ok
    assert witnesses == [CyclicInterval(1, 10), CyclicInterval(8, 3)]
    assert not is_intersection_of_interval_flats(golden, {1, 2, 3})[0]


def test_golden_set_is_separable(golden):
    # rank 3 splits as rk{1,2,3,8,9} + rk{10} = 2 + 1
    assert is_separable(golden, E3)
    assert is_separable(golden, E3, method="bipartition")
    assert components(golden, E3) == [frozenset({1, 2, 3, 8, 9}), frozenset({10})]
    with pytest.raises(ContractError):
        is_flat_inseparable_criterion(golden, E3)
    verdict = is_flat(golden, E3)
    assert verdict.flat and verdict.method == "closure"


def test_golden_inseparable_flats(golden):
    records = enumerate_inseparable_flats(golden)
    assert len(records) == 22
    by_members = {r.members: r.rank for r in records}
    assert by_members[frozenset({1, 2, 3, 8, 9})] == 2
    assert by_members[frozenset(range(1, 15))] == 7
    assert frozenset(E3) not in by_members


@pytest.mark.parametrize("seed", range(40))
def test_interval_flats_match_oracle(seed):
    P = instance(seed)
    M = oracle_for(P)
    for a in range(1, P.n + 1):
        for b in range(1, P.n + 1):
            assert is_interval_flat(P, (a, b)) == M.is_flat(interval_members((a, b), P.n))
    assert all(M.is_flat(interval_members(iv, P.n)) for iv in interval_flats(P))


@pytest.mark.parametrize("seed", range(40))
def test_cover_test_characterizes_intersections(seed):
    P = instance(seed)
    n = P.n
    ivs = [interval_members(iv, n) for iv in interval_flats(P)]
    expected = {frozenset(range(1, n + 1))}
    frontier = set(ivs)
    while frontier:
        expected |= frontier
        frontier = {A & B for A in frontier for B in ivs if A & B} - expected
    assert set(intersections_of_interval_flats(P)) == expected


@pytest.mark.parametrize("seed", range(40))
def test_separability_methods_agree(seed):
    P = instance(seed)
    sep = oracle_for(P).separable_table()
    for m in range(1, 1 << P.n):
        E = from_mask(m)
        assert is_separable(P, E) == bool(sep[m]) == is_separable(P, E, method="bipartition")


@pytest.mark.parametrize("seed", range(20))
def test_is_flat_metadata(seed):
    P = instance(seed)
    for m in range(1, 1 << P.n, 5):
        E = from_mask(m)
        v = is_flat(P, E)
        assert v.flat == (closure(P, E) == E)
        assert v.method == ("closure" if is_separable(P, E) else "cover")
