"""Flat criteria read off the decorated permutation.

A bridge is the cyclic interval ``[x, pi^-1(x)]``. A set passes the cover test
when every element outside it sits in some bridge that misses the set
entirely. That test decides flatness for intervals and for inseparable sets,
and it characterizes intersections of interval flats.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .cyclic import (
    CyclicInterval,
    as_subset,
    decompose,
    from_mask,
    interval_members,
    open_interval,
    proper_splits,
    to_mask,
)
from .errors import CapacityError, ContractError, InputError
from .model import Positroid
from .rank import closure, rank

MAX_ENUMERATION = 16
MAX_SEPARABLE_SIZE = 20


@dataclass(frozen=True)
class BridgeInterval:
    x: int
    interval: CyclicInterval


@dataclass(frozen=True)
class FlatRecord:
    members: frozenset[int]
    rank: int
    inseparable: bool


def bridges(P: Positroid) -> list[BridgeInterval]:
    P.require_fixed_point_free()
    return [BridgeInterval(x, CyclicInterval(x, P.pi_inv(x))) for x in range(1, P.n + 1)]


def _bridge_masks(P: Positroid) -> list[int]:
    return [to_mask(interval_members(br.interval, P.n)) for br in bridges(P)]


def _covered(bridge_masks: list[int], e: int, full: int) -> bool:
    uncovered = full & ~e
    for m in bridge_masks:
        if m & e == 0:
            uncovered &= ~m
    return uncovered == 0


def passes_cover_test(P: Positroid, E: Iterable[int]) -> bool:
    """Every element outside ``E`` lies in a bridge disjoint from ``E``."""
    E = as_subset(E, P.n)
    return _covered(_bridge_masks(P), to_mask(E), (1 << P.n) - 1)


def is_interval_flat(P: Positroid, interval: CyclicInterval | tuple[int, int]) -> bool:
    """``[a, b]`` is a flat iff bridges inside ``(b, a)`` cover ``(b, a)``."""
    a, b = interval
    P.require_fixed_point_free()
    gap = open_interval(b, a, P.n)
    if (b - a) % P.n == P.n - 1:
        return True
    covered: set[int] = set()
    for br in bridges(P):
        span = interval_members(br.interval, P.n)
        if span <= gap:
            covered |= span
    return gap <= covered


def interval_flats(P: Positroid) -> list[CyclicInterval]:
    """All proper cyclic intervals that are flats, ordered by ``(a, b)``."""
    n = P.n
    return [
        CyclicInterval(a, b)
        for a in range(1, n + 1)
        for b in range(1, n + 1)
        if (b - a) % n != n - 1 and is_interval_flat(P, (a, b))
    ]


def is_intersection_of_interval_flats(P: Positroid, E: Iterable[int]) -> tuple[bool, list[CyclicInterval]]:
    """Cover test for an arbitrary proper nonempty ``E``.

    On success also returns the interval flats ``[a_{i+1}, b_i]`` whose
    intersection is ``E``; on failure the witness list is empty.
    """
    E = as_subset(E, P.n)
    if not E or len(E) == P.n:
        raise InputError("expected a proper nonempty subset")
    if not passes_cover_test(P, E):
        return False, []
    intervals = decompose(E, P.n)
    k = len(intervals)
    witnesses = [CyclicInterval(intervals[(i + 1) % k].a, intervals[i].b) for i in range(k)]
    return True, sorted(witnesses)


def is_separable(P: Positroid, E: Iterable[int], method: str = "circuits") -> bool:
    """Some split of ``E`` into two nonempty parts has additive ranks.

    ``method="circuits"`` links elements sharing a fundamental circuit of a
    basis of ``E`` and asks whether the resulting graph is disconnected, using
    O(|E|^2) rank calls. ``method="bipartition"`` tries all splits.
    """
    E = as_subset(E, P.n)
    if len(E) > MAX_SEPARABLE_SIZE:
        raise CapacityError(f"|E| = {len(E)} exceeds the bipartition guard {MAX_SEPARABLE_SIZE}")
    if len(E) < 2:
        return False
    if method == "circuits":
        return len(components(P, E)) > 1
    if method == "bipartition":
        return _separable_mask(P, to_mask(E))
    raise InputError(f"unknown separability method {method!r}")


def components(P: Positroid, E: Iterable[int]) -> list[frozenset[int]]:
    """Connected components of the restriction to ``E``, sorted by least element."""
    E = sorted(as_subset(E, P.n))
    basis: list[int] = []
    for e in E:
        if _rank_mask(P, to_mask(basis + [e])) > len(basis):
            basis.append(e)
    B = to_mask(basis)
    adj: dict[int, set[int]] = {e: set() for e in E}
    for f in E:
        if B >> (f - 1) & 1:
            continue
        for b in basis:
            if _rank_mask(P, B ^ (1 << (b - 1)) | (1 << (f - 1))) == len(basis):
                adj[f].add(b)
                adj[b].add(f)
    seen: set[int] = set()
    out = []
    for e in E:
        if e in seen:
            continue
        comp = {e}
        stack = [e]
        while stack:
            for v in adj[stack.pop()]:
                if v not in comp:
                    comp.add(v)
                    stack.append(v)
        seen |= comp
        out.append(frozenset(comp))
    return out


def _rank_mask(P: Positroid, m: int) -> int:
    r = P._rank_cache.get(m)
    if r is None:
        r = rank(P, from_mask(m))
    return r


def _separable_mask(P: Positroid, e: int) -> bool:
    r = _rank_mask(P, e)
    return any(_rank_mask(P, s) + _rank_mask(P, e ^ s) == r for s in proper_splits(e))


def is_flat_inseparable_criterion(P: Positroid, E: Iterable[int]) -> bool:
    """Flatness of an inseparable ``E`` via the cover test.

    Raises :class:`ContractError` for separable input, where the cover test
    is not a flatness criterion.
    """
    E = as_subset(E, P.n)
    if is_separable(P, E):
        raise ContractError(f"{sorted(E)} is separable; the cover criterion only applies to inseparable sets")
    return passes_cover_test(P, E)


def intersections_of_interval_flats(P: Positroid) -> list[frozenset[int]]:
    """Every nonempty set passing the cover test (the full set included)."""
    P.require_fixed_point_free()
    n = P.n
    if n > MAX_ENUMERATION:
        raise CapacityError(f"n = {n} exceeds the enumeration guard {MAX_ENUMERATION}")
    masks = _bridge_masks(P)
    full = (1 << n) - 1
    return [from_mask(e) for e in range(1, full + 1) if _covered(masks, e, full)]


def enumerate_inseparable_flats(P: Positroid) -> list[FlatRecord]:
    """All nonempty inseparable flats with their ranks, sorted by member set.

    Candidates are the cover-passing sets; separable ones are dropped.
    """
    out = []
    for F in intersections_of_interval_flats(P):
        if len(F) > 1 and len(components(P, F)) > 1:
            continue
        if not is_flat_inseparable_criterion(P, F):
            raise ContractError(f"{sorted(F)} passed the cover test once but not twice")
        out.append(FlatRecord(F, rank(P, F), True))
    return sorted(out, key=lambda r: sorted(r.members))


@dataclass(frozen=True)
class FlatVerdict:
    flat: bool
    method: str  # "cover" (inseparable sets) or "closure" (separable sets)


def is_flat(P: Positroid, E: Iterable[int]) -> FlatVerdict:
    """Flatness of any subset; separable sets fall back to a rank-based closure."""
    E = as_subset(E, P.n)
    if not is_separable(P, E):
        return FlatVerdict(passes_cover_test(P, E), "cover")
    return FlatVerdict(closure(P, E) == E, "closure")
