"""Inequality systems for the independent set polytope and the basis polytope.

Text form (one constraint per line, after an ``n d`` header)::

    <le|ge|eq> <rhs> <sorted support labels>

Nonnegativity ``x_e >= 0`` is written ``ge 0 e``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .cyclic import as_subset, interval_members
from .errors import CapacityError, InputError
from .flats import enumerate_inseparable_flats, intersections_of_interval_flats
from .model import Positroid, enumerate_bases
from .oracle import OracleMatroid
from .rank import interval_rank, rank

MAX_POINT_SWEEP = 20

FLAT_BOUND = "flat-bound"
INTERVAL_BOUND = "interval-bound"
NONNEGATIVITY = "nonnegativity"
CARDINALITY = "cardinality-equality"

_SENSE_ORDER = {"ge": 0, "le": 1, "eq": 2}


@dataclass(frozen=True)
class Inequality:
    support: frozenset[int]
    rhs: int
    sense: str = "le"
    kind: str = FLAT_BOUND

    def sort_key(self) -> tuple:
        return tuple(sorted(self.support)), _SENSE_ORDER[self.sense], self.rhs

    def __str__(self) -> str:
        return " ".join([self.sense, str(self.rhs), *map(str, sorted(self.support))])


@dataclass(frozen=True)
class FacetSystem:
    n: int
    d: int
    equalities: tuple[Inequality, ...] = ()
    inequalities: tuple[Inequality, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "equalities", tuple(sorted(self.equalities, key=Inequality.sort_key)))
        object.__setattr__(self, "inequalities", tuple(sorted(self.inequalities, key=Inequality.sort_key)))

    @property
    def constraints(self) -> tuple[Inequality, ...]:
        return self.equalities + self.inequalities

    def to_text(self) -> str:
        return "".join(f"{line}\n" for line in [f"{self.n} {self.d}", *map(str, self.constraints)])

    def find(self, support: Iterable[int], sense: str = "le") -> Inequality | None:
        support = frozenset(support)
        for c in self.constraints:
            if c.support == support and c.sense == sense:
                return c
        return None

    def matrices(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """``(A_ub, b_ub, A_eq, b_eq)`` with every inequality rewritten as ``<=``."""
        def rows(cons):
            A = np.zeros((len(cons), self.n))
            b = np.zeros(len(cons))
            for i, c in enumerate(cons):
                sign = -1.0 if c.sense == "ge" else 1.0
                A[i, [e - 1 for e in c.support]] = sign
                b[i] = sign * c.rhs
            return A, b

        A_ub, b_ub = rows(self.inequalities)
        A_eq, b_eq = rows(self.equalities)
        return A_ub, b_ub, A_eq, b_eq

    def satisfied(self, points: np.ndarray, tol: float = 1e-9) -> np.ndarray:
        """Row mask of ``points`` (shape ``(m, n)``) meeting every constraint."""
        points = np.atleast_2d(np.asarray(points, dtype=float))
        A_ub, b_ub, A_eq, b_eq = self.matrices()
        ok = np.all(points @ A_ub.T <= b_ub + tol, axis=1)
        if len(b_eq):
            ok &= np.all(np.abs(points @ A_eq.T - b_eq) <= tol, axis=1)
        return ok


def parse_hrep(text: str) -> FacetSystem:
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise InputError("H-representation must start with an 'n d' header")
    try:
        n, d = map(int, lines[0])
        eqs, ineqs = [], []
        for parts in lines[1:]:
            sense, rhs, support = parts[0], int(parts[1]), frozenset(int(t) for t in parts[2:])
            if sense == "eq":
                eqs.append(Inequality(support, rhs, "eq", CARDINALITY))
            elif sense == "ge":
                ineqs.append(Inequality(support, rhs, "ge", NONNEGATIVITY))
            elif sense == "le":
                ineqs.append(Inequality(support, rhs, "le", FLAT_BOUND))
            else:
                raise InputError(f"unknown sense {sense!r}")
    except (ValueError, IndexError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"malformed H-representation: {exc}") from None
    return FacetSystem(n, d, tuple(eqs), tuple(ineqs))


def _nonnegativity(n: int) -> list[Inequality]:
    return [Inequality(frozenset({e}), 0, "ge", NONNEGATIVITY) for e in range(1, n + 1)]


def independent_set_facets(P: Positroid, system: str = "minimal") -> FacetSystem:
    """``x >= 0`` plus ``x_F <= rk(F)`` for each nonempty inseparable flat ``F``.

    ``system="intersections"`` instead bounds every nonempty intersection of
    interval flats, a larger system describing the same polytope.
    """
    P.require_fixed_point_free()
    if system == "minimal":
        bounds = [Inequality(r.members, r.rank) for r in enumerate_inseparable_flats(P)]
    elif system == "intersections":
        bounds = [Inequality(F, rank(P, F)) for F in intersections_of_interval_flats(P)]
    else:
        raise InputError(f"unknown system {system!r}")
    return FacetSystem(P.n, P.d, (), tuple(_nonnegativity(P.n) + bounds))


def basis_polytope_system(P: Positroid, prune: bool = False) -> FacetSystem:
    """``sum x = d`` plus ``x_[a,b] <= rk([a,b])`` for every cyclic interval.

    The whole ground set appears once. With ``prune``, a bound is dropped when
    a strictly larger support carries the same or a smaller right-hand side.
    That step needs ``x >= 0``, which the full system implies through the
    complement intervals, so the pruned system states it explicitly.
    """
    n = P.n
    seen: dict[frozenset[int], int] = {}
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            S = interval_members((a, b), n)
            seen.setdefault(S, interval_rank(P, (a, b)))
    ineqs = [Inequality(S, r, "le", INTERVAL_BOUND) for S, r in seen.items()]
    if prune:
        ineqs = [
            c for c in ineqs
            if not any(c.support < o.support and o.rhs <= c.rhs for o in ineqs)
        ] + _nonnegativity(n)
    eq = Inequality(frozenset(range(1, n + 1)), P.d, "eq", CARDINALITY)
    return FacetSystem(n, P.d, (eq,), tuple(ineqs))


def _all_points(n: int) -> np.ndarray:
    if n > MAX_POINT_SWEEP:
        raise CapacityError(f"n = {n} exceeds the 0/1 sweep guard {MAX_POINT_SWEEP}")
    idx = np.arange(1 << n)
    return ((idx[:, None] >> np.arange(n)) & 1).astype(float)


def point_mismatches(P: Positroid, F: FacetSystem, mode: str, oracle: OracleMatroid | None = None) -> list[frozenset[int]]:
    """Supports of 0/1 vectors where the system and the oracle disagree."""
    if oracle is None:
        oracle = OracleMatroid(P.n, enumerate_bases(P), validate=False)
    n = P.n
    points = _all_points(n)
    accepted = F.satisfied(points)
    masks = np.arange(1 << n)
    if mode == "independent-set":
        popcount = points.sum(axis=1).astype(int)
        truth = oracle.rank_table() == popcount
    elif mode == "basis":
        truth = np.zeros(1 << n, dtype=bool)
        truth[oracle.masks] = True
    else:
        raise InputError(f"unknown mode {mode!r}")
    bad = masks[accepted != truth]
    return [frozenset(e + 1 for e in range(n) if m >> e & 1) for m in bad.tolist()]


def validate_01_points(P: Positroid, F: FacetSystem, mode: str = "independent-set") -> bool:
    """0/1 vectors satisfy ``F`` exactly when their supports are independent (or bases)."""
    return not point_mismatches(P, F, mode)


def accepts(F: FacetSystem, support: Iterable[int]) -> bool:
    x = np.zeros(F.n)
    for e in as_subset(support, F.n):
        x[e - 1] = 1.0
    return bool(F.satisfied(x)[0])


def minimality_witness(F: FacetSystem, target: Inequality) -> np.ndarray | None:
    """A point meeting every other constraint of ``F`` but violating ``target``.

    Solves ``max x_S`` over the remaining system, capped at ``rhs + 1`` so an
    unbounded direction still yields a concrete point. Returns ``None`` when
    the optimum does not exceed the right-hand side (``target`` is redundant).
    """
    from scipy.optimize import linprog

    cap = Inequality(target.support, target.rhs + 1, "le", target.kind)
    rest = FacetSystem(
        F.n, F.d, F.equalities, tuple(c for c in F.inequalities if c != target) + (cap,)
    )
    A_ub, b_ub, A_eq, b_eq = rest.matrices()
    c = np.zeros(F.n)
    c[[e - 1 for e in target.support]] = -1.0
    res = linprog(
        c,
        A_ub=A_ub if len(b_ub) else None,
        b_ub=b_ub if len(b_ub) else None,
        A_eq=A_eq if len(b_eq) else None,
        b_eq=b_eq if len(b_eq) else None,
        bounds=[(None, None)] * F.n,
        method="highs",
    )
    if res.status != 0 or -res.fun <= target.rhs + 1e-7:
        return None
    return res.x
