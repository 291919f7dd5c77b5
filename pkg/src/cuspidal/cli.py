"""Command-line interface.

Subcommands: enumerate, invariants, reproduce, family, reduce,
factorizations, prime-scan.  Record output is JSON by default (CSV and
Markdown carry the same data); everything is UTF-8 with LF line endings.

Exit codes: 0 on success (for ``reproduce``: every row matches), 1 when a
reproduced table differs from the embedded one, 2 for usage and domain
errors.  The environment variable ``CUSPIDAL_JOBS`` sets the default
worker count.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import __version__
from . import invariants as inv
from .enumerate import (
    PARANOID,
    PRUNED,
    PairCountBoundError,
    SearchConfig,
    classify_record,
    enumerate_candidates,
)
from .existence import resolve_existence
from .families import (
    ALL_KINDS,
    AMS,
    KASHIWARA_KINDS,
    OREVKOV,
    OREVKOV_STAR,
    TONO_KINDS,
    FamilyParameterError,
    ams_curve,
    kashiwara_curve,
    ordered_factorization_count,
    orevkov_curve,
    prime_degree_scan,
    tono_curve,
)
from .records import OutputDocument, curve_record
from .semigroup import bl_check_unicuspidal, generators_from_newton
from .tables import TABLE_IDS, reproduce


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("CUSPIDAL_JOBS", "1")))
    except ValueError:
        return 1


def _metadata(command: str, elapsed: float, **extra) -> dict:
    meta = {
        "tool": "cuspidal",
        "version": __version__,
        "command": command,
        "elapsed_seconds": round(elapsed, 3),
    }
    meta.update(extra)
    return meta


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cuspidal",
        description="Enumerate, classify and verify rational unicuspidal plane curves",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="search candidate cusps at one (degree, pair count)")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--pairs", type=int, required=True, help="number of Newton pairs")
    p.add_argument("--paranoid", action="store_true", help="full-scan oracle mode")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--format", choices=("json", "csv", "md"), default="json")
    p.add_argument("--classify", action="store_true", help="attach family/existence data")

    p = sub.add_parser("invariants", help="full record for given Newton pairs")
    p.add_argument("--pairs", required=True, help='e.g. "(2,3),(2,5),(2,3)"')
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv", "md"), default="json")

    p = sub.add_parser("reproduce", help="regenerate a reference table and diff it")
    p.add_argument("--table", required=True, help=f"one of {', '.join(TABLE_IDS)}")
    p.add_argument("--jobs", type=int, default=_default_jobs())

    p = sub.add_parser("family", help="generate one closed-form family member")
    p.add_argument("kind", help=f"one of {', '.join(ALL_KINDS)}")
    p.add_argument("--factors", help="ams: ordered factorization, e.g. 3,2,2")
    p.add_argument("--l", type=int, help="kashiwara level parameter")
    p.add_argument("--lambdas", help="kashiwara lambda list, e.g. 1,1")
    p.add_argument("--a", type=int, help="tono-ia/ib parameter")
    p.add_argument("--s", type=int, help="tono-ib/iib parameter")
    p.add_argument("--n", type=int, help="tono-iia/iib parameter")
    p.add_argument("--k", type=int, help="orevkov parameter")
    p.add_argument("--format", choices=("json", "csv", "md"), default="json")

    p = sub.add_parser("reduce", help="resolve existence of (degree, multiplicity sequence)")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--mult", required=True, help='e.g. "16,8_4,4_3,2_3" (8x4 also accepted)')
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("factorizations", help="ordered factorization count")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("prime-scan", help="primes admitting a nontrivial curve")
    p.add_argument("--max", type=int, required=True)

    return parser


def _emit(document: OutputDocument, fmt: str) -> None:
    sys.stdout.write(document.render(fmt))


def _cmd_enumerate(args) -> int:
    config = SearchConfig(
        degree=args.degree,
        pair_count=args.pairs,
        mode=PARANOID if args.paranoid else PRUNED,
        worker_count=args.jobs,
    )
    start = time.monotonic()
    note = None
    try:
        records = enumerate_candidates(config)
    except PairCountBoundError as exc:
        if args.pairs > 4:
            raise  # pair counts >= 5 are out of scope, not provably empty
        records, note = [], f"provably empty: {exc}"
    if args.classify:
        records = [classify_record(r) for r in records]
    extra = {} if note is None else {"note": note}
    meta = _metadata(
        "enumerate",
        time.monotonic() - start,
        degree=args.degree,
        pairs=args.pairs,
        mode=config.mode,
        jobs=args.jobs,
        **extra,
    )
    _emit(OutputDocument(tuple(records), meta), args.format)
    return 0


def _cmd_invariants(args) -> int:
    pairs = inv.parse_newton(args.pairs)
    inv.validate_newton_pairs(pairs)
    start = time.monotonic()
    delta = inv.delta_from_puiseux(inv.newton_to_puiseux(pairs))
    verdict = bl_check_unicuspidal(args.degree, generators_from_newton(pairs))
    if delta == inv.genus_target(args.degree):
        record = classify_record(curve_record(args.degree, pairs))
    else:
        record = curve_record(
            args.degree, pairs, flags=("delta-genus-mismatch",), strict=False
        )
    meta = _metadata(
        "invariants",
        time.monotonic() - start,
        bl_check={
            "passed": verdict.passed,
            "first_failing_j": verdict.first_failing_j,
        },
        delta_matches_genus=delta == inv.genus_target(args.degree),
    )
    _emit(OutputDocument((record,), meta), args.format)
    return 0


def _cmd_reproduce(args) -> int:
    if args.table not in TABLE_IDS:
        raise SystemExit(f"unknown table {args.table!r}; choose from {', '.join(TABLE_IDS)}")
    report = reproduce(args.table, worker_count=args.jobs)
    print(report.render())
    return 0 if report.ok else 1


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise SystemExit(f"{what} must be a comma-separated integer list, got {text!r}")


def _cmd_family(args) -> int:
    kind = args.kind
    start = time.monotonic()
    if kind == AMS:
        if args.factors is None:
            raise SystemExit("ams needs --factors")
        record = ams_curve(_parse_int_list(args.factors, "--factors"))
    elif kind in KASHIWARA_KINDS:
        if args.l is None:
            raise SystemExit(f"{kind} needs --l")
        lambdas = () if args.lambdas is None else _parse_int_list(args.lambdas, "--lambdas")
        record = kashiwara_curve(kind, args.l, lambdas)
    elif kind in TONO_KINDS:
        needed = {
            "tono-ia": ("--a", (args.a,)),
            "tono-ib": ("--a and --s", (args.a, args.s)),
            "tono-iia": ("--n", (args.n,)),
            "tono-iib": ("--n and --s", (args.n, args.s)),
        }
        flags, params = needed[kind]
        if any(p is None for p in params):
            raise SystemExit(f"{kind} needs {flags}")
        record = tono_curve(kind, params)
    elif kind in (OREVKOV, OREVKOV_STAR):
        if args.k is None:
            raise SystemExit(f"{kind} needs --k")
        record = orevkov_curve(args.k, starred=kind == OREVKOV_STAR)
    else:
        raise SystemExit(f"unknown family kind {kind!r}; choose from {', '.join(ALL_KINDS)}")
    meta = _metadata("family", time.monotonic() - start, kind=kind)
    _emit(OutputDocument((record,), meta), args.format)
    return 0


def _cmd_reduce(args) -> int:
    runs = inv.parse_multiplicity(args.mult)
    status, chain = resolve_existence(args.degree, runs)
    if args.format == "json":
        import json

        payload = {
            "degree": args.degree,
            "multiplicity_sequence": inv.format_multiplicity(runs),
            "status": status,
            "chain": [step.describe() for step in chain],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"d={args.degree} [{inv.format_multiplicity(runs)}]: {status}")
        for step in chain:
            print(f"  {step.describe()}")
    return 0


def _cmd_factorizations(args) -> int:
    print(ordered_factorization_count(args.n))
    return 0


def _cmd_prime_scan(args) -> int:
    for prime, witnesses in prime_degree_scan(args.max):
        tags = "; ".join(
            w[0] + "(" + ",".join(map(str, w[1:])) + ")" for w in witnesses
        )
        print(f"{prime}: {tags}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "enumerate": _cmd_enumerate,
        "invariants": _cmd_invariants,
        "reproduce": _cmd_reproduce,
        "family": _cmd_family,
        "reduce": _cmd_reduce,
        "factorizations": _cmd_factorizations,
        "prime-scan": _cmd_prime_scan,
    }
    try:
        return handlers[args.command](args)
    except (inv.InvalidCuspData, FamilyParameterError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(f"error: {exc.code}", file=sys.stderr)
            return 2
        raise


if __name__ == "__main__":
    sys.exit(main())
