"""Rank of arbitrary subsets of a positroid.

Intervals are ranked straight from the necklace. A general set
``E = [a_1,b_1] u ... u [a_k,b_k]`` is ranked by the push procedure: start
from ``I_{a_1}`` and, gap by gap, move basis elements out of the complement
of ``E`` into later intervals one exchange at a time. The resulting basis
``H`` has ``|H & E| = rk(E)``, which also equals the smallest natural rank
bound over non-crossing partitions of the k intervals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .cyclic import (
    CyclicInterval,
    as_subset,
    check_label,
    decompose,
    half_open,
    interval_members,
    open_interval,
    position,
    to_mask,
)
from .errors import CapacityError, ContractError, InputError
from .model import Positroid, is_basis

MAX_NCP_SIZE = 12


@dataclass(frozen=True)
class NonCrossingPartition:
    """Blocks ``T_1, ..., T_r`` of ``{1..k}`` with no ``a<b<c<d``, ``a,c`` in one block and ``b,d`` in another."""

    parts: tuple[frozenset[int], ...]

    def __init__(self, parts: Iterable[Iterable[int]], k: int | None = None):
        blocks = tuple(sorted((frozenset(p) for p in parts), key=min))
        seen = [x for p in blocks for x in p]
        if k is None:
            k = len(seen)
        if any(not p for p in blocks) or sorted(seen) != list(range(1, k + 1)):
            raise InputError(f"not a partition of 1..{k}: {[sorted(p) for p in blocks]}")
        if crossing_pair(blocks) is not None:
            raise InputError(f"partition {[sorted(p) for p in blocks]} is crossing")
        object.__setattr__(self, "parts", blocks)

    @property
    def k(self) -> int:
        return sum(len(p) for p in self.parts)

    def __str__(self) -> str:
        return "|".join(",".join(map(str, sorted(p))) for p in self.parts)


def crossing_pair(blocks: Sequence[Iterable[int]]) -> tuple[int, int, int, int] | None:
    owner = {x: i for i, p in enumerate(blocks) for x in p}
    xs = sorted(owner)
    for ia, a in enumerate(xs):
        for ib in range(ia + 1, len(xs)):
            b = xs[ib]
            if owner[b] == owner[a]:
                continue
            for ic in range(ib + 1, len(xs)):
                c = xs[ic]
                if owner[c] != owner[a]:
                    continue
                for d in xs[ic + 1:]:
                    if owner[d] == owner[b]:
                        return a, b, c, d
    return None


def _ncp_blocks(items: tuple[int, ...]) -> list[list[frozenset[int]]]:
    # The block holding items[0] splits the rest into independent stretches.
    if not items:
        return [[]]
    first, rest = items[0], items[1:]
    out = []
    for mask in range(1 << len(rest)):
        chosen = [first] + [x for i, x in enumerate(rest) if mask >> i & 1]
        stretches = []
        cur: list[int] = []
        for i, x in enumerate(rest):
            if mask >> i & 1:
                stretches.append(tuple(cur))
                cur = []
            else:
                cur.append(x)
        stretches.append(tuple(cur))
        combos: list[list[frozenset[int]]] = [[frozenset(chosen)]]
        for s in stretches:
            combos = [c + sub for c in combos for sub in _ncp_blocks(s)]
        out.extend(combos)
    return out


def enumerate_noncrossing_partitions(k: int) -> list[NonCrossingPartition]:
    """Every non-crossing partition of ``{1..k}``, each exactly once (Catalan many)."""
    if k < 1:
        raise InputError("k must be positive")
    if k > MAX_NCP_SIZE:
        raise CapacityError(f"k = {k} exceeds the non-crossing partition guard {MAX_NCP_SIZE}")
    parts = _ncp_blocks(tuple(range(1, k + 1)))
    return sorted(
        (NonCrossingPartition(p, k) for p in parts),
        key=lambda P: [sorted(b) for b in P.parts],
    )


# -- interval ranks -------------------------------------------------------


def interval_rank(P: Positroid, interval: CyclicInterval | tuple[int, int]) -> int:
    """``rk([a, b]) = |I_a & [a, b]|``."""
    a, b = interval
    return len(P.I(a) & interval_members((a, b), P.n))


def interval_rank_by_chords(P: Positroid, interval: CyclicInterval | tuple[int, int]) -> int:
    """``|[a, b]|`` minus the chords ``[pi^-1(x), x]`` lying inside ``[a, b]``."""
    P.require_fixed_point_free()
    a, b = interval
    n = P.n
    span = (b - a) % n
    inside = 0
    for x in interval_members((a, b), P.n):
        src = P.pi_inv(x)
        if position(a, src, n) <= span and position(a, src, n) < position(a, x, n):
            inside += 1
    return span + 1 - inside


def minelts(P: Positroid, b: int, a: int) -> int:
    """Fewest basis elements any basis can have in the open gap ``(b, a)``: ``|I_a & (b, a)|``."""
    return len(P.I(a) & open_interval(b, a, P.n))


def minelts_by_chords(P: Positroid, b: int, a: int) -> int:
    """Number of chords ``[x, pi^-1(x)]`` contained in ``(b, a)``."""
    P.require_fixed_point_free()
    n = P.n
    start = b % n + 1
    count = 0
    for x in open_interval(b, a, n):
        tgt = P.pi_inv(x)
        if position(start, x, n) < position(start, tgt, n) and tgt in open_interval(b, a, n):
            count += 1
    return count


def _gaps(intervals: Sequence[CyclicInterval]) -> list[tuple[int, int]]:
    k = len(intervals)
    return [(intervals[i].b, intervals[(i + 1) % k].a) for i in range(k)]


def _nbd(P: Positroid, intervals: Sequence[CyclicInterval]) -> int:
    return P.d - sum(minelts(P, b, a) for b, a in _gaps(intervals))


def _proper(P: Positroid, E: Iterable[int]) -> frozenset[int]:
    E = as_subset(E, P.n)
    if not E or len(E) == P.n:
        raise InputError("expected a proper nonempty subset")
    return E


def nbd(P: Positroid, E: Iterable[int]) -> int:
    """Natural rank bound: ``d`` minus the minimal basis counts of the complement gaps."""
    E = _proper(P, E)
    return _nbd(P, decompose(E, P.n))


def nbd_with_partition(P: Positroid, E: Iterable[int], partition: NonCrossingPartition | Iterable[Iterable[int]]) -> int:
    """Sum of natural rank bounds of the sub-unions picked out by each block."""
    intervals = decompose(_proper(P, E), P.n)
    k = len(intervals)
    if not isinstance(partition, NonCrossingPartition):
        partition = NonCrossingPartition(partition, k)
    if partition.k != k:
        raise InputError(f"partition covers 1..{partition.k} but E has {k} intervals")
    return sum(_nbd(P, [intervals[i - 1] for i in sorted(T)]) for T in partition.parts)


# -- push procedure -------------------------------------------------------


@dataclass(frozen=True)
class PushState:
    """The working basis ``H^t`` at the start of stage ``t`` (the last entry is the result)."""

    t: int
    H: frozenset[int]


@dataclass(frozen=True)
class PushResult:
    H: frozenset[int]
    trace: tuple[PushState, ...]
    intervals: tuple[CyclicInterval, ...]


def _transfer_pair(P: Positroid, J: frozenset[int], a: int, b: int, c: int) -> tuple[int, int] | None:
    n = P.n
    Ic = P.I(c)
    drop = (J - Ic) & open_interval(b, c, n)
    add = (Ic - J) & half_open(c, a, n)
    if not drop or not add:
        return None
    x = max(drop, key=lambda v: position(a, v, n))
    y = min(add, key=lambda v: position(a, v, n))
    return x, y


def exchange_admissible(P: Positroid, J: frozenset[int], x: int, y: int, c: int) -> bool:
    """Whether ``J - {x} + {y}`` still dominates ``I_c`` in the ``<_c`` Gale order.

    Walking from just after ``y`` round to just before ``x``, no prefix may hold
    more elements of ``J`` than of ``I_c``. Under the other transfer
    preconditions this is exactly what keeps the exchanged set a basis.
    """
    n = P.n
    Ic = P.I(c)
    slack = 0
    z = y % n + 1
    while z != x:
        slack += (z in Ic) - (z in J)
        if slack < 0:
            return False
        z = z % n + 1
    return True


def transfer_step(P: Positroid, J: Iterable[int], a: int, b: int, c: int) -> frozenset[int]:
    """One exchange: drop the last element of ``(J - I_c) & (b, c)``, add the first of ``(I_c - J) & [c, a)``.

    Both picks use the order ``<_a``. Requires ``a, b, c`` cyclically ordered,
    ``I_c & (b, c)`` inside ``J``, ``J & [c, a)`` inside ``I_c``, both pick sets
    nonempty, and the exchange to keep ``J`` above ``I_c`` in the ``<_c`` Gale
    order (see :func:`exchange_admissible`). The last condition does not follow
    from the others: with ``pi = 2 1 7 6 3 5 4``, ``J = {2,5,6,7}`` and
    ``(a, b, c) = (2, 5, 7)`` the exchange ``6 -> 1`` leaves the positroid.
    """
    n = P.n
    for v in (a, b, c):
        check_label(v, n)
    J = as_subset(J, n)
    if not (c != a and position(a, b, n) < position(a, c, n)):
        raise ContractError(f"({a}, {b}, {c}) is not cyclically ordered")
    Ic = P.I(c)
    if not (Ic & open_interval(b, c, n)) <= J:
        raise ContractError(f"I_{c} & ({b},{c}) is not contained in {sorted(J)}")
    if not (J & half_open(c, a, n)) <= Ic:
        raise ContractError(f"{sorted(J)} & [{c},{a}) is not contained in I_{c}")
    pair = _transfer_pair(P, J, a, b, c)
    if pair is None:
        raise ContractError(f"nothing to transfer from ({b},{c}) to [{c},{a})")
    x, y = pair
    if not exchange_admissible(P, J, x, y, c):
        raise ContractError(f"exchanging {x} for {y} in {sorted(J)} drops below I_{c}")
    out = (J - {x}) | {y}
    if not is_basis(P, out):
        raise ContractError(f"transfer produced a non-basis {sorted(out)}")
    return out


def push_procedure(P: Positroid, E: Iterable[int], start: int = 0) -> PushResult:
    """Build a basis ``H`` maximizing ``|H & E|``.

    Stage ``t`` pushes elements out of the gap after the t-th interval for as
    long as a transfer step applies and is admissible. ``start`` rotates which interval of ``E`` plays the role of the first one.
    """
    P.require_fixed_point_free()
    n = P.n
    intervals = decompose(_proper(P, E), n)
    k = len(intervals)
    intervals = intervals[start % k:] + intervals[:start % k]
    a1 = intervals[0].a
    H = P.I(a1)
    trace = [PushState(1, H)]
    for t in range(1, k):
        b, c = intervals[t - 1].b, intervals[t].a
        while True:
            pair = _transfer_pair(P, H, a1, b, c)
            if pair is None or not exchange_admissible(P, H, pair[0], pair[1], c):
                break
            H = transfer_step(P, H, a1, b, c)
        trace.append(PushState(t + 1, H))
    return PushResult(H, tuple(trace), tuple(intervals))


def rank(P: Positroid, E: Iterable[int], method: str = "push") -> int:
    """Rank of an arbitrary subset.

    ``method="push"`` runs the push procedure; ``method="ncp"`` minimizes the
    natural rank bound over all non-crossing partitions of E's intervals.
    """
    E = as_subset(E, P.n)
    if not E:
        return 0
    if len(E) == P.n:
        return P.d
    P.require_fixed_point_free()
    if method == "push":
        key = to_mask(E)
        r = P._rank_cache.get(key)
        if r is None:
            r = len(push_procedure(P, E).H & E)
            P._rank_cache[key] = r
        return r
    if method == "ncp":
        k = len(decompose(E, P.n))
        return min(nbd_with_partition(P, E, pi) for pi in enumerate_noncrossing_partitions(k))
    raise InputError(f"unknown rank method {method!r}")


def closure(P: Positroid, E: Iterable[int]) -> frozenset[int]:
    """``E`` plus every element whose addition keeps the rank."""
    E = as_subset(E, P.n)
    r = rank(P, E)
    return E | {e for e in range(1, P.n + 1) if e not in E and rank(P, E | {e}) == r}
