"""Command-line entry point.

Exit statuses: 0 success, 1 verification mismatch, 2 parse error,
3 capacity guard, 4 internal contract violation, 5 fixed points on a core verb.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .cyclic import format_set, parse_set, sorted_cyclic
from .errors import PositroidError
from .flats import enumerate_inseparable_flats, interval_flats
from .model import (
    Positroid,
    enumerate_bases,
    format_necklace,
    format_permutation,
    parse_necklace,
    parse_permutation,
    random_permutation,
)
from .oracle import OracleMatroid
from .polytope import basis_polytope_system, independent_set_facets
from .rank import closure, interval_rank, rank
from .verify import verify_suite


def _read_input(args) -> str:
    if args.perm is not None:
        return args.perm
    if args.input and args.input != "-":
        with open(args.input) as fh:
            return fh.read()
    return sys.stdin.read()


def _positroid(args) -> Positroid:
    return Positroid(parse_permutation(_read_input(args)))


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    elif text:
        print(text)


def _hrep_payload(system) -> dict:
    return {
        "n": system.n,
        "d": system.d,
        "constraints": [
            {"sense": c.sense, "rhs": c.rhs, "support": sorted(c.support), "kind": c.kind}
            for c in system.constraints
        ],
    }


def cmd_necklace(args) -> int:
    P = _positroid(args)
    N = P.necklace
    _emit(args, format_necklace(N), {
        "n": N.n, "d": N.d,
        "necklace": [sorted_cyclic(N[k], k, N.n) for k in range(1, N.n + 1)],
    })
    return 0


def cmd_perm(args) -> int:
    p = Positroid.from_necklace(parse_necklace(_read_input(args))).permutation
    _emit(args, format_permutation(p), {"permutation": format_permutation(p)})
    return 0


def cmd_bases(args) -> int:
    bases = enumerate_bases(_positroid(args))
    _emit(args, "\n".join(format_set(B) for B in bases), {"bases": [sorted(B) for B in bases]})
    return 0


def cmd_rank(args) -> int:
    P = _positroid(args)
    E = parse_set(args.set, P.n)
    if args.method == "oracle":
        r = OracleMatroid(P.n, enumerate_bases(P), validate=False).rank(E)
    else:
        P.require_fixed_point_free()
        r = rank(P, E, method=args.method)
    _emit(args, str(r), {"set": sorted(E), "rank": r, "method": args.method})
    return 0


def cmd_closure(args) -> int:
    P = _positroid(args)
    P.require_fixed_point_free()
    E = parse_set(args.set, P.n)
    C = closure(P, E)
    _emit(args, format_set(C), {"set": sorted(E), "closure": sorted(C)})
    return 0


def cmd_interval_flats(args) -> int:
    P = _positroid(args)
    flats = interval_flats(P)
    lines = [f"{iv} {interval_rank(P, iv)}" for iv in flats]
    _emit(args, "\n".join(lines), {
        "interval_flats": [{"a": iv.a, "b": iv.b, "rank": interval_rank(P, iv)} for iv in flats],
    })
    return 0


def cmd_flats(args) -> int:
    records = enumerate_inseparable_flats(_positroid(args))
    _emit(args, "\n".join(f"{format_set(r.members)} {r.rank}" for r in records), {
        "flats": [{"members": sorted(r.members), "rank": r.rank, "inseparable": r.inseparable} for r in records],
    })
    return 0


def cmd_facets(args) -> int:
    system = independent_set_facets(_positroid(args), system=args.system)
    _emit(args, system.to_text().rstrip("\n"), _hrep_payload(system))
    return 0


def cmd_basis_polytope(args) -> int:
    system = basis_polytope_system(_positroid(args), prune=args.prune)
    _emit(args, system.to_text().rstrip("\n"), _hrep_payload(system))
    return 0


def cmd_verify(args) -> int:
    report = verify_suite(_positroid(args), seed=args.seed)
    _emit(args, "\n".join([*(f"WARN {w}" for w in report.warnings), *map(str, report.checks)]), report.to_dict())
    return 0 if report.passed else 1


def cmd_random(args) -> int:
    p = random_permutation(args.n, args.seed)
    _emit(args, format_permutation(p), {"permutation": format_permutation(p), "n": args.n, "seed": args.seed})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="positroid", description="Ranks, flats and polytopes of positroids.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, func, help, source=True):
        p = sub.add_parser(name, help=help)
        if source:
            p.add_argument("-p", "--perm", help="input text given inline instead of a file")
            p.add_argument("-i", "--input", help="input file (default: stdin)")
        p.add_argument("--json", action="store_true", help="structured output")
        p.set_defaults(func=func)
        return p

    verb("necklace", cmd_necklace, "print the Grassmann necklace I_1 .. I_n")
    verb("perm", cmd_perm, "read a necklace, print its decorated permutation")
    verb("bases", cmd_bases, "list all bases")
    p = verb("rank", cmd_rank, "rank of a set")
    p.add_argument("--set", required=True, help="comma-separated labels; a..b is a cyclic interval")
    p.add_argument("--method", choices=["push", "ncp", "oracle"], default="push")
    p = verb("closure", cmd_closure, "closure of a set")
    p.add_argument("--set", required=True)
    verb("interval-flats", cmd_interval_flats, "cyclic intervals that are flats, with ranks")
    verb("flats", cmd_flats, "nonempty inseparable flats with ranks")
    p = verb("facets", cmd_facets, "independent set polytope as an H-representation")
    p.add_argument("--system", choices=["minimal", "intersections"], default="minimal",
                   help="inseparable flats only, or every intersection of interval flats")
    p = verb("basis-polytope", cmd_basis_polytope, "basis polytope from cyclic interval ranks")
    p.add_argument("--prune", action="store_true", help="drop bounds dominated by a larger support")
    p = verb("verify", cmd_verify, "compare all fast algorithms with the brute-force oracle")
    p.add_argument("--seed", type=int, default=0, help="seed for subset sampling on large inputs")
    p = verb("random", cmd_random, "random fixed-point-free permutation", source=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PositroidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
