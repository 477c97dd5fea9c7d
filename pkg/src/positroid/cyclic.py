"""Cyclic order on [n], cyclic intervals, and the Gale order.

Element labels are 1-based throughout. Subsets are ``frozenset`` of labels;
a few hot paths use integer bitmasks where label ``x`` is bit ``x - 1``.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .errors import InputError


class CyclicInterval(NamedTuple):
    """The cyclic interval ``[a, b]``: ``a, a+1, ..., b`` read modulo n."""

    a: int
    b: int

    def __str__(self) -> str:
        return f"{self.a}..{self.b}"


def check_size(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InputError(f"ground set size must be a positive integer, got {n!r}")


def check_label(x: int, n: int) -> None:
    if not isinstance(x, int) or not 1 <= x <= n:
        raise InputError(f"label {x!r} out of range 1..{n}")


def as_subset(members: Iterable[int], n: int) -> frozenset[int]:
    s = frozenset(members)
    for x in s:
        check_label(x, n)
    return s


def shift(x: int, k: int, n: int) -> int:
    """Label ``x + k`` wrapped into 1..n."""
    return (x - 1 + k) % n + 1


def position(i: int, x: int, n: int) -> int:
    """Rank of ``x`` in the order ``<_i`` (0 for ``i`` itself, n-1 for ``i-1``)."""
    return (x - i) % n


def cyclic_le(i: int, x: int, y: int, n: int) -> bool:
    """True iff ``x <=_i y`` in the total order ``i < i+1 < ... < n < 1 < ... < i-1``."""
    check_size(n)
    for v in (i, x, y):
        check_label(v, n)
    return (x - i) % n <= (y - i) % n


def sorted_cyclic(members: Iterable[int], i: int, n: int) -> list[int]:
    return sorted(members, key=lambda x: (x - i) % n)


def _run(start: int, length: int, n: int) -> frozenset[int]:
    return frozenset((start - 1 + k) % n + 1 for k in range(length))


def interval_members(interval: CyclicInterval | tuple[int, int], n: int) -> frozenset[int]:
    """Members of ``[a, b]``; ``[a, a-1]`` is the whole ground set."""
    a, b = interval
    check_label(a, n)
    check_label(b, n)
    return _run(a, (b - a) % n + 1, n)


def open_interval(b: int, a: int, n: int) -> frozenset[int]:
    """Members of ``(b, a)``, the complement of ``[a, b]``.

    ``(b, b+1)`` is empty and ``(a, a)`` is everything except ``a``.
    """
    check_label(a, n)
    check_label(b, n)
    return _run(b % n + 1, (a - b - 1) % n, n)


def half_open(c: int, a: int, n: int) -> frozenset[int]:
    """Members of ``[c, a)``; empty when ``c == a``."""
    check_label(a, n)
    check_label(c, n)
    return _run(c, (a - c) % n, n)


def decompose(members: Iterable[int], n: int) -> list[CyclicInterval]:
    """Split a proper nonempty subset into its maximal cyclic intervals.

    The intervals come back in cyclic order, starting with the one whose
    left endpoint is smallest in the natural order.

    >>> decompose({1, 2, 7, 8, 9, 10, 13}, 14)
    [CyclicInterval(a=1, b=2), CyclicInterval(a=7, b=10), CyclicInterval(a=13, b=13)]
    >>> decompose({14, 1}, 14)
    [CyclicInterval(a=14, b=1)]
    """
    check_size(n)
    s = as_subset(members, n)
    if not s:
        raise InputError("cannot decompose the empty set")
    if len(s) == n:
        raise InputError("cannot decompose the whole ground set")
    starts = sorted(x for x in s if shift(x, -1, n) not in s)
    out = []
    for a in starts:
        b = a
        while shift(b, 1, n) in s:
            b = shift(b, 1, n)
        out.append(CyclicInterval(a, b))
    return out


def gale_le(i: int, S: Iterable[int], T: Iterable[int], n: int) -> bool:
    """Gale order ``S <=_i T``: compare the ``<_i``-sorted sets componentwise."""
    check_size(n)
    check_label(i, n)
    S = as_subset(S, n)
    T = as_subset(T, n)
    if len(S) != len(T):
        raise InputError(f"Gale order needs equal sizes, got {len(S)} and {len(T)}")
    ss = sorted((x - i) % n for x in S)
    ts = sorted((x - i) % n for x in T)
    return all(s <= t for s, t in zip(ss, ts))


def to_mask(members: Iterable[int]) -> int:
    m = 0
    for x in members:
        m |= 1 << (x - 1)
    return m


def from_mask(mask: int) -> frozenset[int]:
    out = []
    x = 1
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return frozenset(out)


def proper_splits(mask: int):
    """Submasks of ``mask`` holding its lowest bit, ``mask`` itself excluded.

    Each unordered split into two nonempty parts appears exactly once.
    """
    low = mask & -mask
    rest = mask ^ low
    sub = rest
    while True:
        s = sub | low
        if s != mask:
            yield s
        if sub == 0:
            return
        sub = (sub - 1) & rest


def format_set(members: Iterable[int]) -> str:
    return ",".join(str(x) for x in sorted(members))


def parse_set(text: str, n: int) -> frozenset[int]:
    """Parse ``1,2,3`` or ``1..3,8..10`` (``a..b`` is the cyclic interval)."""
    out: set[int] = set()
    text = text.strip()
    if not text:
        return frozenset()
    for tok in text.split(","):
        tok = tok.strip()
        try:
            if ".." in tok:
                a, b = (int(t) for t in tok.split("..", 1))
                out |= interval_members((a, b), n)
            else:
                x = int(tok)
                check_label(x, n)
                out.add(x)
        except ValueError as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"bad set token {tok!r}") from None
    return frozenset(out)
