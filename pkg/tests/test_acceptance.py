"""Acceptance criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v``; the lines go straight to the
terminal even when output capture is on.
"""

import time
from collections import defaultdict

import numpy as np

from positroid import (
    Positroid,
    closure,
    enumerate_bases,
    enumerate_inseparable_flats,
    enumerate_noncrossing_partitions,
    independent_set_facets,
    basis_polytope_system,
    interval_rank,
    is_flat_inseparable_criterion,
    is_intersection_of_interval_flats,
    is_interval_flat,
    minelts,
    nbd_with_partition,
    push_procedure,
    rank,
)
from positroid.cyclic import decompose, from_mask, interval_members, open_interval, half_open, to_mask
from positroid.polytope import point_mismatches

from conftest import GOLDEN, instance, oracle_for

SWEEP_SEEDS = range(200)  # n = 3 + seed % 8, so 3..10
POLYTOPE_SEEDS = range(60)  # n = 3 + seed % 10, so 3..12


def report(capsys, number, title, failures, detail=""):
    status = "PASS" if not failures else "FAIL"
    line = f"{status} criterion {number}: {title}"
    if detail:
        line += f" [{detail}]"
    if failures:
        line += " :: " + "; ".join(failures[:3])
    with capsys.disabled():
        print("\n" + line)
    assert not failures, line


def sweep():
    return [instance(s) for s in SWEEP_SEEDS]


def test_criterion_1_golden_example(capsys):
    start = time.perf_counter()
    P = Positroid.parse(GOLDEN)
    E1 = {1, 2, 7, 8, 9, 10, 13}
    E3 = {1, 2, 3, 8, 9, 10}
    push = push_procedure(P, E1)
    facets = independent_set_facets(P)
    cover_ok, witnesses = is_intersection_of_interval_flats(P, E3)
    checks = {
        "I_1": P.I(1) == {1, 3, 4, 5, 10, 11, 12},
        "I_7": P.I(7) == {7, 8, 9, 10, 11, 12, 4},
        "I_13": P.I(13) == {13, 14, 3, 4, 5, 10, 11},
        "push H": push.H == {1, 4, 7, 8, 10, 11, 13},
        "push H^2": push.trace[1].H == {1, 4, 7, 8, 10, 11, 12},
        "rank E3": rank(P, E3) == 3,
        "interval ranks": (interval_rank(P, (1, 3)), interval_rank(P, (8, 10))) == (2, 3),
        "minelts": (minelts(P, 3, 8), minelts(P, 10, 1)) == (2, 2),
        "nbd split": nbd_with_partition(P, E3, [{1}, {2}]) == 5,
        "nbd joined": nbd_with_partition(P, E3, [{1, 2}]) == 3,
        "[1,10] flat": is_interval_flat(P, (1, 10)),
        "[1,3] not flat": not is_interval_flat(P, (1, 3)),
        "closure [1,3]": closure(P, {1, 2, 3}) == {1, 2, 3, 8, 9},
        "cover test": cover_ok and [tuple(w) for w in witnesses] == [(1, 10), (8, 3)],
        "facet {1,2,3,8,9,10} <= 3": any(
            c.sense == "le" and c.support == frozenset(E3) and c.rhs == 3 for c in facets.inequalities
        ),
    }
    elapsed = time.perf_counter() - start
    failures = [f"{name} mismatch" for name, ok in checks.items() if not ok]
    if elapsed >= 1.0:
        failures.append(f"runtime {elapsed:.2f}s >= 1s")
    passed = sum(checks.values())
    report(capsys, 1, "golden example", failures, f"{passed}/{len(checks)} items, {elapsed:.3f}s")


def test_criterion_2_rank_and_closure_oracle(capsys):
    start = time.perf_counter()
    failures, subsets = [], 0
    for P in sweep():
        M = oracle_for(P)
        rk, cl = M.rank_table(), M.closure_table()
        for m in range(1 << P.n):
            E = from_mask(m)
            subsets += 1
            if rank(P, E) != rk[m]:
                failures.append(f"rank {P.permutation} {sorted(E)}")
            if to_mask(closure(P, E)) != cl[m]:
                failures.append(f"closure {P.permutation} {sorted(E)}")
    elapsed = time.perf_counter() - start
    if elapsed >= 300:
        failures.append(f"runtime {elapsed:.0f}s >= 300s")
    report(capsys, 2, "rank and closure equal the oracle on all subsets", failures,
           f"{len(SWEEP_SEEDS)} instances, {subsets} subsets, {elapsed:.1f}s")


def test_criterion_3_flat_criteria(capsys):
    failures, inseparable = [], 0
    for P in sweep():
        M = oracle_for(P)
        n = P.n
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                if is_interval_flat(P, (a, b)) != M.is_flat(interval_members((a, b), n)):
                    failures.append(f"interval [{a},{b}] of {P.permutation}")
        rk, cl, sep = M.rank_table(), M.closure_table(), M.separable_table()
        for m in range(1, 1 << n):
            if sep[m]:
                continue
            inseparable += 1
            if is_flat_inseparable_criterion(P, from_mask(m)) != (cl[m] == m):
                failures.append(f"criterion on {sorted(from_mask(m))} of {P.permutation}")
        fast = {(r.members, r.rank) for r in enumerate_inseparable_flats(P)}
        truth = {(from_mask(m), int(rk[m])) for m in range(1, 1 << n) if cl[m] == m and not sep[m]}
        if fast != truth:
            failures.append(f"flat enumeration of {P.permutation}")
    report(capsys, 3, "interval flats, inseparable criterion, flat enumeration", failures,
           f"{inseparable} inseparable subsets")


def _interval_exchange_holds(P, bases, a, b):
    n = P.n
    iv = to_mask(interval_members((a, b), n))
    allowed = to_mask(P.I(a)) & iv
    by_outside = defaultdict(list)
    for B in bases:
        by_outside[B & ~iv].append(B & iv)
    return all(
        any(inner & ~allowed == 0 for inner in by_outside[J & ~iv])
        for J in bases
    )


def test_criterion_4_structural_properties(capsys):
    failures = []
    for P in sweep():
        n = P.n
        M = oracle_for(P)
        masks = np.array(M.masks, dtype=np.uint64)
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                if not (P.I(a) & half_open(b, a, n)) <= P.I(b):
                    failures.append(f"sharing a={a} b={b} in {P.permutation}")
                inside = np.bitwise_count(masks & np.uint64(to_mask(interval_members((a, b), n))))
                gap = np.bitwise_count(masks & np.uint64(to_mask(open_interval(b, a, n))))
                if inside.max() != interval_rank(P, (a, b)) or gap.min() != minelts(P, b, a):
                    failures.append(f"extremal counts [{a},{b}] in {P.permutation}")
                if not _interval_exchange_holds(P, M.masks, a, b):
                    failures.append(f"interval exchange [{a},{b}] in {P.permutation}")
        if M.exchange_violation() is not None:
            failures.append(f"exchange axioms in {P.permutation}")
        if set(enumerate_bases(P)) != set(M.bases):
            failures.append(f"basis list of {P.permutation}")
    report(capsys, 4, "sharing, extremal counts, interval exchange, exchange axioms", failures)


def test_criterion_5_polytope_points(capsys):
    failures, points = [], 0
    for seed in POLYTOPE_SEEDS:
        P = instance(seed, range(3, 13))
        M = oracle_for(P)
        points += 2 << P.n
        for label, system, mode in (
            ("independent set", independent_set_facets(P), "independent-set"),
            ("basis", basis_polytope_system(P), "basis"),
        ):
            bad = point_mismatches(P, system, mode, M)
            if bad:
                failures.append(f"{label} point {sorted(bad[0])} of {P.permutation}")
    report(capsys, 5, "0/1 points of both polytopes", failures,
           f"{len(POLYTOPE_SEEDS)} instances, {points} point checks")


def test_criterion_6_bound_structure(capsys):
    failures, pairs = [], 0
    counts = [len(enumerate_noncrossing_partitions(k)) for k in range(1, 6)]
    if counts != [1, 2, 5, 14, 42]:
        failures.append(f"non-crossing partition counts {counts}")
    partitions = {k: enumerate_noncrossing_partitions(k) for k in range(1, 6)}
    for P in sweep():
        for m in range(1, (1 << P.n) - 1):
            E = from_mask(m)
            r = rank(P, E)
            bounds = [nbd_with_partition(P, E, pi) for pi in partitions[len(decompose(E, P.n))]]
            pairs += len(bounds)
            if min(bounds) < r:
                failures.append(f"bound below rank for {sorted(E)} of {P.permutation}")
            elif min(bounds) != r:
                failures.append(f"no partition attains rank for {sorted(E)} of {P.permutation}")
    report(capsys, 6, "rank <= every partition bound, with equality attained", failures,
           f"{pairs} (set, partition) pairs, counts {counts}")
