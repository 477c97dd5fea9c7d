"""Brute-force matroid oracle over an explicit list of bases.

Everything here reduces to scans of the basis list (or of all 2^n subsets)
and is meant as ground truth for the fast positroid algorithms, not for speed.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable

import numpy as np

from .cyclic import as_subset, check_size, from_mask, proper_splits, to_mask
from .errors import CapacityError, InputError

MAX_TABLE_SIZE = 20
MAX_FLAT_ENUMERATION = 16
MAX_SEPARABLE_SIZE = 20
MAX_VALIDATED_BASES = 2000


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low)
        mask ^= low
    return out


class OracleMatroid:
    """A matroid on 1..n stored as its explicit list of bases."""

    def __init__(self, n: int, bases: Iterable[Iterable[int]], validate: bool = True):
        check_size(n)
        subsets = sorted({as_subset(B, n) for B in bases}, key=lambda B: sorted(B))
        if not subsets:
            raise InputError("a matroid needs at least one basis")
        d = len(subsets[0])
        if any(len(B) != d for B in subsets):
            raise InputError("bases must all have the same size")
        self.n = n
        self.d = d
        self.bases = subsets
        self.masks = [to_mask(B) for B in subsets]
        self._mask_set = frozenset(self.masks)
        if validate and len(self.masks) <= MAX_VALIDATED_BASES:
            bad = self.exchange_violation()
            if bad is not None:
                raise InputError(f"bases violate the exchange axiom: {bad}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def is_basis(self, B: Iterable[int]) -> bool:
        return to_mask(B) in self._mask_set

    @cached_property
    def _mask_array(self) -> np.ndarray:
        return np.array(self.masks, dtype=np.uint64)

    def rank(self, A: Iterable[int]) -> int:
        """``max |B & A|`` over all bases ``B``."""
        a = to_mask(as_subset(A, self.n))
        return int(np.bitwise_count(self._mask_array & np.uint64(a)).max())

    def is_independent(self, A: Iterable[int]) -> bool:
        a = to_mask(as_subset(A, self.n))
        return any(a & b == a for b in self.masks)

    def max_intersection_basis(self, A: Iterable[int]) -> frozenset[int]:
        """A basis attaining ``max |B & A|``; the first one in lexicographic order."""
        a = to_mask(as_subset(A, self.n))
        best = max(self.masks, key=lambda b: (b & a).bit_count())
        return from_mask(best)

    def closure(self, A: Iterable[int]) -> frozenset[int]:
        A = as_subset(A, self.n)
        a = to_mask(A)
        inside = np.bitwise_count(self._mask_array & np.uint64(a)).astype(np.int64)
        r = inside.max()
        bits = (self._mask_array[:, None] >> np.arange(self.n, dtype=np.uint64)) & np.uint64(1)
        # rank of A + e for every e at once
        grown = (inside[:, None] + bits.astype(np.int64)).max(axis=0)
        return A | {e + 1 for e in range(self.n) if grown[e] == r}

    def is_flat(self, A: Iterable[int]) -> bool:
        A = as_subset(A, self.n)
        return self.closure(A) == A

    def is_separable(self, A: Iterable[int]) -> bool:
        """Some split of ``A`` into two nonempty parts has additive ranks."""
        A = as_subset(A, self.n)
        if len(A) > MAX_SEPARABLE_SIZE:
            raise CapacityError(f"|A| = {len(A)} exceeds the bipartition guard {MAX_SEPARABLE_SIZE}")
        a = to_mask(A)
        if a == 0:
            return False
        table = self.rank_table() if self.n <= MAX_TABLE_SIZE else None
        rk = (lambda m: int(table[m])) if table is not None else (lambda m: self.rank(from_mask(m)))
        r = rk(a)
        return any(rk(s) + rk(a ^ s) == r for s in proper_splits(a))

    def all_flats(self) -> list[frozenset[int]]:
        if self.n > MAX_FLAT_ENUMERATION:
            raise CapacityError(f"n = {self.n} exceeds the flat enumeration guard {MAX_FLAT_ENUMERATION}")
        closures = self.closure_table()
        idx = np.nonzero(closures == np.arange(closures.size))[0]
        return sorted((from_mask(int(m)) for m in idx), key=lambda F: (len(F), sorted(F)))

    def dual(self) -> OracleMatroid:
        full = self.full_mask
        return OracleMatroid(self.n, (from_mask(full ^ b) for b in self.masks), validate=False)

    def exchange_violation(self, pairs: Iterable[tuple[int, int]] | None = None) -> tuple[str, frozenset[int], frozenset[int], int] | None:
        """First failure of the basis exchange axiom or its dual form, if any.

        Checks every ordered pair of bases unless ``pairs`` (indices into
        ``self.bases``) restricts the search. Returns ``(axiom, B1, B2, pivot)``.
        """
        bases = self._mask_set
        if pairs is None:
            pairs = ((i, j) for i in range(len(self.masks)) for j in range(len(self.masks)))
        for i, j in pairs:
            b1, b2 = self.masks[i], self.masks[j]
            if b1 != b2:
                out1 = _bits(b1 & ~b2)
                out2 = _bits(b2 & ~b1)
                ok = [[(b1 ^ x | y) in bases for y in out2] for x in out1]
                for r, x in enumerate(out1):
                    if not any(ok[r]):
                        return ("exchange", from_mask(b1), from_mask(b2), x.bit_length())
                for c, y in enumerate(out2):
                    if not any(row[c] for row in ok):
                        return ("dual exchange", from_mask(b1), from_mask(b2), y.bit_length())
        return None

    def check_exchange_axioms(self) -> bool:
        return self.exchange_violation() is None

    # -- whole-lattice tables ----------------------------------------------

    def rank_table(self) -> np.ndarray:
        """Rank of every subset, indexed by bitmask."""
        return self._rank_table

    @cached_property
    def _rank_table(self) -> np.ndarray:
        n = self.n
        if n > MAX_TABLE_SIZE:
            raise CapacityError(f"n = {n} exceeds the rank table guard {MAX_TABLE_SIZE}")
        size = 1 << n
        idx = np.arange(size)
        indep = np.zeros(size, dtype=bool)
        indep[self.masks] = True
        for e in range(n):
            bit = 1 << e
            has = idx[(idx & bit) != 0]
            indep[has ^ bit] |= indep[has]
        popcount = np.zeros(size, dtype=np.int64)
        for e in range(n):
            popcount += (idx >> e) & 1
        rank = np.where(indep, popcount, 0)
        for e in range(n):
            bit = 1 << e
            has = idx[(idx & bit) != 0]
            rank[has] = np.maximum(rank[has], rank[has ^ bit])
        rank.flags.writeable = False
        return rank

    def closure_table(self) -> np.ndarray:
        """Closure bitmask of every subset, indexed by bitmask."""
        rank = self.rank_table()
        idx = np.arange(rank.size)
        closure = idx.copy()
        for e in range(self.n):
            bit = 1 << e
            closure[rank[idx | bit] == rank] |= bit
        return closure

    def separable_table(self) -> np.ndarray:
        """Separability of every subset, indexed by bitmask (empty set: False)."""
        rank = self.rank_table().tolist()
        out = np.zeros(len(rank), dtype=bool)
        for a in range(1, len(rank)):
            if a & (a - 1) == 0:
                continue
            r = rank[a]
            for s in proper_splits(a):
                if rank[s] + rank[a ^ s] == r:
                    out[a] = True
                    break
        return out
