"""Compare every fast computation on one positroid against the brute-force oracle."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field

from .cyclic import format_set, from_mask, half_open, interval_members, to_mask
from .flats import enumerate_inseparable_flats, is_interval_flat
from .model import Positroid, enumerate_bases
from .oracle import OracleMatroid
from .polytope import basis_polytope_system, independent_set_facets, point_mismatches
from .rank import closure, rank

log = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 16
SAMPLE_SIZE = 4096
EXCHANGE_LIMIT = 2000
EXCHANGE_SAMPLE = 20000


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    counterexample: str | None = None

    def __str__(self) -> str:
        line = f"{'PASS' if self.passed else 'FAIL'} {self.name}"
        if self.detail:
            line += f" ({self.detail})"
        if self.counterexample:
            line += f": {self.counterexample}"
        return line


@dataclass
class VerifyReport:
    checks: list[Check] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "warnings": self.warnings,
            "checks": [c.__dict__ for c in self.checks],
        }


def _subset_masks(n: int, report: VerifyReport, seed: int) -> list[int]:
    if n <= EXHAUSTIVE_LIMIT:
        return list(range(1 << n))
    msg = f"n = {n} > {EXHAUSTIVE_LIMIT}: sampling {SAMPLE_SIZE} subsets instead of all 2^n"
    log.warning(msg)
    report.warnings.append(msg)
    rng = random.Random(seed)
    return sorted({rng.getrandbits(n) for _ in range(SAMPLE_SIZE)})


def _smallest(masks: list[int]) -> int:
    return min(masks, key=lambda m: (m.bit_count(), m))


def verify_suite(P: Positroid, seed: int = 0) -> VerifyReport:
    P.require_fixed_point_free()
    n = P.n
    report = VerifyReport()
    M = OracleMatroid(n, enumerate_bases(P), validate=False)
    exhaustive = n <= EXHAUSTIVE_LIMIT
    masks = _subset_masks(n, report, seed)
    scope = "all subsets" if exhaustive else "sampled subsets"

    if exhaustive:
        rank_o = M.rank_table()
        clo_o = M.closure_table()
        oracle_rank = lambda m: int(rank_o[m])  # noqa: E731
        oracle_closure = lambda m: int(clo_o[m])  # noqa: E731
    else:
        oracle_rank = lambda m: M.rank(from_mask(m))  # noqa: E731
        oracle_closure = lambda m: to_mask(M.closure(from_mask(m)))  # noqa: E731

    bad = [m for m in masks if rank(P, from_mask(m)) != oracle_rank(m)]
    report.checks.append(_check(f"rank ({scope})", bad, len(masks),
                                lambda m: f"E={{{format_set(from_mask(m))}}} fast={rank(P, from_mask(m))} oracle={oracle_rank(m)}"))

    bad = [m for m in masks if to_mask(closure(P, from_mask(m))) != oracle_closure(m)]
    report.checks.append(_check(f"closure ({scope})", bad, len(masks),
                                lambda m: f"E={{{format_set(from_mask(m))}}} fast={{{format_set(closure(P, from_mask(m)))}}} "
                                          f"oracle={{{format_set(from_mask(oracle_closure(m)))}}}"))

    pairs = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1)]
    bad_iv = [
        (a, b) for a, b in pairs
        if is_interval_flat(P, (a, b)) != M.is_flat(interval_members((a, b), n))
    ]
    report.checks.append(Check("interval flats", not bad_iv, f"{len(pairs)} intervals",
                               f"[{bad_iv[0][0]},{bad_iv[0][1]}]" if bad_iv else None))

    if exhaustive:
        fast = {(r.members, r.rank) for r in enumerate_inseparable_flats(P)}
        oracle = {(F, M.rank(F)) for F in M.all_flats() if F and not M.is_separable(F)}
        diff = sorted(fast ^ oracle, key=lambda t: (len(t[0]), sorted(t[0])))
        report.checks.append(Check("inseparable flats", not diff, f"{len(oracle)} flats",
                                   f"{{{format_set(diff[0][0])}}} rank {diff[0][1]}" if diff else None))

        for label, system, mode in (
            ("independent set polytope 0/1 points", independent_set_facets(P), "independent-set"),
            ("basis polytope 0/1 points", basis_polytope_system(P), "basis"),
        ):
            wrong = point_mismatches(P, system, mode, M)
            report.checks.append(Check(label, not wrong, f"{1 << n} points",
                                       f"support {{{format_set(wrong[0])}}}" if wrong else None))
    else:
        report.warnings.append("flat enumeration and 0/1 polytope sweeps skipped above the exhaustive limit")

    bad_share = [
        (a, b) for a, b in pairs
        if not (P.I(a) & half_open(b, a, n)) <= P.I(b)
    ]
    report.checks.append(Check("sharing property", not bad_share, f"{len(pairs)} pairs",
                               f"a={bad_share[0][0]} b={bad_share[0][1]}" if bad_share else None))

    m = len(M.bases)
    if m <= EXCHANGE_LIMIT:
        violation = M.exchange_violation()
        scope = f"{m} bases"
    else:
        rng = random.Random(seed)
        violation = M.exchange_violation((rng.randrange(m), rng.randrange(m)) for _ in range(EXCHANGE_SAMPLE))
        scope = f"{EXCHANGE_SAMPLE} sampled pairs of {m} bases"
        report.warnings.append(f"{m} bases: exchange axioms checked on {EXCHANGE_SAMPLE} random pairs")
    report.checks.append(Check("exchange axioms", violation is None, scope,
                               f"{violation[0]} fails for {sorted(violation[1])}, {sorted(violation[2])}, pivot {violation[3]}"
                               if violation else None))
    return report


def _check(name: str, bad: list[int], total: int, describe) -> Check:
    if not bad:
        return Check(name, True, f"{total} subsets")
    return Check(name, False, f"{len(bad)} of {total} subsets differ", describe(_smallest(bad)))
