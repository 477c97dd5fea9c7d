"""Decorated permutations, Grassmann necklaces and the positroids they define."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .cyclic import as_subset, check_label, check_size, sorted_cyclic, to_mask
from .errors import CapacityError, FixedPointError, InputError, NecklaceError

WHITE = "white"
BLACK = "black"

MAX_BASIS_CANDIDATES = 10**6


@dataclass(frozen=True)
class DecoratedPermutation:
    """A bijection of 1..n whose fixed points are colored white (loop) or black (coloop).

    ``images[i-1]`` is ``pi(i)``. ``colors`` is normalized to a sorted tuple of
    ``(fixed_point, color)`` pairs so instances stay hashable.
    """

    images: tuple[int, ...]
    colors: tuple[tuple[int, str], ...] = ()

    def __init__(self, images: Sequence[int], colors: Mapping[int, str] | Iterable[tuple[int, str]] = ()):
        images = tuple(images)
        n = len(images)
        check_size(n)
        if sorted(images) != list(range(1, n + 1)):
            raise InputError(f"not a permutation of 1..{n}: {list(images)}")
        colors = dict(colors.items() if isinstance(colors, Mapping) else colors)
        fixed = {i for i in range(1, n + 1) if images[i - 1] == i}
        if set(colors) != fixed:
            raise InputError(
                f"colors must be given exactly for the fixed points {sorted(fixed)}, got {sorted(colors)}"
            )
        for i, c in colors.items():
            if c not in (WHITE, BLACK):
                raise InputError(f"fixed point {i} has color {c!r}; expected white or black")
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "colors", tuple(sorted(colors.items())))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    @property
    def inverse(self) -> tuple[int, ...]:
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return tuple(inv)

    @property
    def color_map(self) -> dict[int, str]:
        return dict(self.colors)

    @property
    def fixed_points(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.colors)

    def __str__(self) -> str:
        return format_permutation(self)


def detect_loops_coloops(p: DecoratedPermutation) -> tuple[frozenset[int], frozenset[int]]:
    """Loops are the white fixed points, coloops the black ones."""
    loops = frozenset(i for i, c in p.colors if c == WHITE)
    coloops = frozenset(i for i, c in p.colors if c == BLACK)
    return loops, coloops


@dataclass(frozen=True)
class GrassmannNecklace:
    n: int
    d: int
    sets: tuple[frozenset[int], ...]

    def __init__(self, sets: Sequence[Iterable[int]]):
        n = len(sets)
        check_size(n)
        fs = tuple(as_subset(s, n) for s in sets)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "sets", fs)
        object.__setattr__(self, "d", len(fs[0]))
        self.validate()

    def __getitem__(self, k: int) -> frozenset[int]:
        """``I_k`` for 1-based ``k``."""
        return self.sets[k - 1]

    def validate(self) -> None:
        n, d = self.n, self.d
        for k, s in enumerate(self.sets, start=1):
            if len(s) != d:
                raise NecklaceError(f"I_{k} has {len(s)} elements, expected {d}", index=k)
        for i in range(1, n + 1):
            cur, nxt = self[i], self[i % n + 1]
            if i in cur:
                kept = cur - {i}
                if not kept <= nxt or len(nxt - kept) != 1:
                    raise NecklaceError(
                        f"step condition fails at index {i}: I_{i % n + 1} is not I_{i} minus {i} plus one element",
                        index=i,
                    )
            elif nxt != cur:
                raise NecklaceError(
                    f"step condition fails at index {i}: {i} is not in I_{i} so I_{i % n + 1} must equal I_{i}",
                    index=i,
                )

    def __str__(self) -> str:
        return format_necklace(self)


def necklace_from_permutation(p: DecoratedPermutation) -> GrassmannNecklace:
    """``I_k`` collects every ``x`` with ``x <_k pi^{-1}(x)`` plus the black fixed points."""
    n = p.n
    inv = p.inverse
    black = {i for i, c in p.colors if c == BLACK}
    sets = []
    for k in range(1, n + 1):
        members = {
            x for x in range(1, n + 1)
            if inv[x - 1] != x and (x - k) % n < (inv[x - 1] - k) % n
        }
        sets.append(members | black)
    return GrassmannNecklace(sets)


def permutation_from_necklace(N: GrassmannNecklace) -> DecoratedPermutation:
    """Inverse of :func:`necklace_from_permutation`.

    When ``I_{i+1} = I_i - {i} + {j}`` with ``j != i`` we get ``pi(i) = j``.
    """
    n = N.n
    images = [0] * n
    colors = {}
    for i in range(1, n + 1):
        cur, nxt = N[i], N[i % n + 1]
        if i not in cur:
            images[i - 1] = i
            colors[i] = WHITE
            continue
        (j,) = nxt - (cur - {i})
        images[i - 1] = j
        if j == i:
            colors[i] = BLACK
    if sorted(images) != list(range(1, n + 1)):
        raise NecklaceError("necklace does not determine a bijection")
    return DecoratedPermutation(images, colors)


class Positroid:
    """A positroid given by a decorated permutation and its Grassmann necklace.

    Instances are immutable. Ranks computed by :mod:`positroid.rank` are
    memoized per instance, keyed by bitmask.
    """

    __slots__ = ("permutation", "necklace", "n", "d", "inverse", "_rank_cache", "_shifted")

    def __init__(self, permutation: DecoratedPermutation, necklace: GrassmannNecklace | None = None):
        if necklace is None:
            necklace = necklace_from_permutation(permutation)
        elif permutation_from_necklace(necklace) != permutation:
            raise InputError("permutation and necklace do not correspond")
        self.permutation = permutation
        self.necklace = necklace
        self.n = permutation.n
        self.d = necklace.d
        self.inverse = permutation.inverse
        self._rank_cache: dict[int, int] = {}
        # I_j as sorted offsets from j, for Gale comparisons
        self._shifted = [sorted((x - 1 - j) % self.n for x in necklace[j + 1]) for j in range(self.n)]

    @classmethod
    def from_permutation(cls, images: Sequence[int], colors: Mapping[int, str] = {}) -> Positroid:
        return cls(DecoratedPermutation(images, colors))

    @classmethod
    def from_necklace(cls, necklace: GrassmannNecklace | Sequence[Iterable[int]]) -> Positroid:
        if not isinstance(necklace, GrassmannNecklace):
            necklace = GrassmannNecklace(necklace)
        return cls(permutation_from_necklace(necklace), necklace)

    @classmethod
    def parse(cls, text: str) -> Positroid:
        return cls(parse_permutation(text))

    def I(self, k: int) -> frozenset[int]:  # noqa: E743
        return self.necklace[k]

    def pi(self, x: int) -> int:
        return self.permutation.images[x - 1]

    def pi_inv(self, x: int) -> int:
        return self.inverse[x - 1]

    @property
    def ground(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1))

    @property
    def is_fixed_point_free(self) -> bool:
        return not self.permutation.colors

    def require_fixed_point_free(self) -> None:
        if not self.is_fixed_point_free:
            loops, coloops = detect_loops_coloops(self.permutation)
            raise FixedPointError(
                f"permutation has fixed points (loops {sorted(loops)}, coloops {sorted(coloops)}); "
                + FixedPointError.explanation
            )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Positroid) and self.permutation == other.permutation

    def __hash__(self) -> int:
        return hash(self.permutation)

    def __repr__(self) -> str:
        return f"Positroid({format_permutation(self.permutation)!r})"


def is_basis(P: Positroid, B: Iterable[int]) -> bool:
    """``B`` is a basis iff ``I_j <=_j B`` in the Gale order for every ``j``."""
    B = as_subset(B, P.n)
    if len(B) != P.d:
        raise InputError(f"expected a {P.d}-subset, got {len(B)} elements")
    return _is_basis_fast(P.n, P._shifted, B)


def _is_basis_fast(n: int, necklace_sorted: list[list[int]], B: Sequence[int]) -> bool:
    for j in range(n):
        b = sorted((x - 1 - j) % n for x in B)
        if any(s > t for s, t in zip(necklace_sorted[j], b)):
            return False
    return True


def enumerate_bases(P: Positroid) -> list[frozenset[int]]:
    """All bases, in lexicographic order of their sorted members."""
    n, d = P.n, P.d
    if math.comb(n, d) > MAX_BASIS_CANDIDATES:
        raise CapacityError(f"C({n},{d}) = {math.comb(n, d)} exceeds the {MAX_BASIS_CANDIDATES} candidate guard")
    return [
        frozenset(c) for c in itertools.combinations(range(1, n + 1), d)
        if _is_basis_fast(n, P._shifted, c)
    ]


def basis_masks(P: Positroid) -> list[int]:
    return [to_mask(B) for B in enumerate_bases(P)]


# -- text formats ---------------------------------------------------------


def parse_permutation(text: str) -> DecoratedPermutation:
    """Parse ``2 8 6 7 ...``; fixed points carry a ``w`` or ``b`` suffix (``1b 3 2``)."""
    tokens = text.split()
    if not tokens:
        raise InputError("empty permutation")
    images = []
    colors = {}
    for i, tok in enumerate(tokens, start=1):
        suffix = tok[-1] if tok[-1] in "wb" else ""
        digits = tok[:-1] if suffix else tok
        if not digits.isdigit():
            raise InputError(f"bad permutation token {tok!r}")
        j = int(digits)
        if j == i and not suffix:
            raise InputError(f"fixed point {i} needs a color suffix (w or b)")
        if j != i and suffix:
            raise InputError(f"token {tok!r}: color suffix on a non-fixed point")
        if suffix:
            colors[i] = WHITE if suffix == "w" else BLACK
        images.append(j)
    return DecoratedPermutation(images, colors)


def format_permutation(p: DecoratedPermutation) -> str:
    colors = p.color_map
    out = []
    for i, j in enumerate(p.images, start=1):
        tok = str(j)
        if i in colors:
            tok += "w" if colors[i] == WHITE else "b"
        out.append(tok)
    return " ".join(out)


def format_necklace(N: GrassmannNecklace) -> str:
    """Each ``I_k`` is written in ``<_k`` order, e.g. ``{1,2} {2,3} {3,4} {4,1}``."""
    return " ".join(
        "{" + ",".join(str(x) for x in sorted_cyclic(N[k], k, N.n)) + "}"
        for k in range(1, N.n + 1)
    )


def parse_necklace(text: str) -> GrassmannNecklace:
    text = text.strip()
    if not text.startswith("{") or not text.endswith("}"):
        raise InputError("necklace must be written as {..} {..} ...")
    chunks = text[1:-1].split("}")
    sets = []
    for chunk in chunks:
        chunk = chunk.strip().lstrip("{").strip()
        try:
            sets.append([int(t) for t in chunk.split(",") if t.strip()])
        except ValueError:
            raise InputError(f"bad necklace entry {{{chunk}}}") from None
    n = len(sets)
    for s in sets:
        for x in s:
            check_label(x, n)
        if len(set(s)) != len(s):
            raise InputError(f"repeated element in necklace entry {s}")
    return GrassmannNecklace(sets)


def random_permutation(n: int, seed: int) -> DecoratedPermutation:
    """Uniformly random fixed-point-free permutation of 1..n (rejection sampling)."""
    if n < 2:
        raise InputError("a fixed-point-free permutation needs n >= 2")
    rng = random.Random(seed)
    images = list(range(1, n + 1))
    while True:
        rng.shuffle(images)
        if all(images[i - 1] != i for i in range(1, n + 1)):
            return DecoratedPermutation(images)
