"""Exhaustive, pruned search for candidate cusps of a given degree.

A degree-d candidate with k Newton pairs is determined by its
characteristic data (a; b_1 < ... < b_k).  The search iterates over that
data subject to:

(i)   chain validity -- every b_j must strictly drop the running gcd chain
      P_{j+1} = gcd(P_j, b_j) by a factor >= 2, ending at 1;
(ii)  the rationality equation: the delta invariant must equal
      (d-1)(d-2)/2, i.e. the bracket (P_1-1)(Q_1-1) + sum (P_j-1) Q_j
      must equal (d-1)(d-2);
(iii) the unicuspidal counting criterion (see :mod:`cuspidal.semigroup`).

These are the only filters: repeated identical pairs and unit exponents
(q_j = 1 for j >= 2) are legal and occur in genuine curves, so no ad-hoc
exclusions are applied.

Two modes produce identical sets and cross-validate each other:

* ``pruned`` iterates only (a, b_1, ..., b_{k-1}) and solves the final
  exponent exactly from the delta residual, collapsing one loop dimension.
  Its cuts: the leading multiplicity is capped at d - 1 (a >= d makes the
  counting criterion fail at j = 1, since R(d+1) would be at most 2);
  each b_j is capped by positivity of the remaining delta budget, since
  every later stage contributes at least 1 to the bracket; and the gcd
  chain value must keep at least as many prime factors as there are
  stages left.
* ``paranoid`` scans the full characteristic box with only
  provably-lossless cuts: the budget bound b_j <= (d-1)(d-2) + 1 (the
  delta bracket dominates the telescoped exponent differences) and the
  monotone budget break within each loop.

Emitted records always satisfy a <= d - 1 and m_1 + m_2 <= d; the second
is the tangent-line bound, applied as a post-filter rather than assumed
during the search.

The (a, b_1) grid is embarrassingly parallel: work is partitioned over a,
searched in separate processes, and merged by a canonical sort, so output
is deterministic for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from math import gcd, isqrt

from . import invariants as inv
from .existence import CANDIDATE, PROVED_FAMILY, resolve_existence
from .families import OREVKOV, OREVKOV_STAR, TONO_KINDS, attribute_family
from .records import CurveRecord, KODAIRA_NEG_INF, curve_record
from .semigroup import bl_check_unicuspidal, generators_from_newton

PRUNED = "pruned"
PARANOID = "paranoid"


class PairCountBoundError(ValueError):
    """Requested pair count exceeds the proven bound for the degree."""


@dataclass(frozen=True)
class SearchConfig:
    degree: int
    pair_count: int
    mode: str = PRUNED
    worker_count: int = 1


def max_pairs_bound(degree: int) -> int:
    """Largest k with (d-1)(d-2) >= (2^k - 1) 2^k, the proven cap on the
    number of Newton pairs of a degree-d cusp (k = 5 needs d >= 33)."""
    if degree < 3:
        raise ValueError(f"degree must be >= 3, got {degree}")
    target = (degree - 1) * (degree - 2)
    k = 1
    while (2 ** (k + 1) - 1) * 2 ** (k + 1) <= target:
        k += 1
    return k


def enumerate_candidates(config: SearchConfig) -> list[CurveRecord]:
    """All candidate cusps at (degree, pair_count): exactly the Newton
    sequences satisfying the type invariants, the rationality equation and
    the counting criterion.  Records come back canonically sorted with
    existence "candidate"."""
    d, k = config.degree, config.pair_count
    if k < 1:
        raise ValueError(f"pair count must be >= 1, got {k}")
    bound = max_pairs_bound(d)
    if k > bound:
        raise PairCountBoundError(
            f"pair count {k} exceeds the bound {bound} for degree {d}"
        )
    if config.mode not in (PRUNED, PARANOID):
        raise ValueError(f"unknown search mode {config.mode!r}")
    a_values = list(_a_range(d, config.mode))
    jobs = max(1, config.worker_count)
    if jobs == 1 or len(a_values) <= 1:
        records = _search_chunk(d, k, config.mode, a_values)
    else:
        chunks = [a_values[i::jobs] for i in range(jobs) if a_values[i::jobs]]
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            parts = pool.map(
                _search_chunk_args, [(d, k, config.mode, chunk) for chunk in chunks]
            )
            records = [record for part in parts for record in part]
    records.sort(key=CurveRecord.sort_key)
    return records


def _a_range(degree: int, mode: str) -> range:
    target = (degree - 1) * (degree - 2)
    if mode == PRUNED:
        return range(2, degree)
    # budget-only cap: b_1 > a forces (a-1) a <= target
    return range(2, isqrt(target) + 2)


def _search_chunk_args(args) -> list[CurveRecord]:
    return _search_chunk(*args)


def _search_chunk(degree: int, k: int, mode: str, a_values: list[int]) -> list[CurveRecord]:
    target = (degree - 1) * (degree - 2)
    out = []
    for a in a_values:
        if mode == PRUNED:
            chars = _pruned_extend(k, target, a, (), 0, a, 1)
        else:
            chars = _paranoid_extend(k, target, a, (), 0, a, 1)
        for _, bs in chars:
            record = _finalize(degree, a, bs)
            if record is not None:
                out.append(record)
    return out


def _omega_at_least(n: int, count: int) -> bool:
    # does n have at least `count` prime factors (with multiplicity)?
    if n < 2 ** count:
        return False
    found = 0
    f = 2
    while f * f <= n and found < count:
        while n % f == 0:
            n //= f
            found += 1
        f += 1
    if n > 1:
        found += 1
    return found >= count


def _pruned_extend(k, target, a, bs, partial, P, depth):
    """Yield (a, (b_1..b_k)) with the final exponent solved exactly."""
    if depth == k:
        rem = target - partial
        if depth == 1:
            if rem <= 0 or rem % (a - 1):
                return
            b = rem // (a - 1) + 1
            if b <= a or gcd(a, b) != 1:
                return
            yield a, (b,)
        else:
            if rem < P - 1 or rem % (P - 1):
                return
            Q = rem // (P - 1)
            if gcd(P, Q) != 1:
                return
            yield a, bs + (bs[-1] + Q,)
        return
    min_future = k - depth  # each later stage adds at least 1 to the bracket
    prev = bs[-1] if bs else 0
    b = (a if depth == 1 else prev) + 1
    while True:
        term = (a - 1) * (b - 1) if depth == 1 else (P - 1) * (b - prev)
        if partial + term + min_future > target:
            return
        Pn = gcd(P, b)
        if 2 <= Pn < P and _omega_at_least(Pn, k - depth):
            yield from _pruned_extend(k, target, a, bs + (b,), partial + term, Pn, depth + 1)
        b += 1


def _paranoid_extend(k, target, a, bs, partial, P, depth):
    """Scan every exponent level explicitly (no solving)."""
    prev = bs[-1] if bs else 0
    lo = (a if depth == 1 else prev) + 1
    for b in range(lo, target + 2):
        term = (a - 1) * (b - 1) if depth == 1 else (P - 1) * (b - prev)
        total = partial + term
        if total + (k - depth) > target:
            return
        Pn = gcd(P, b)
        if depth == k:
            if total == target and Pn == 1:
                yield a, bs + (b,)
        elif 2 <= Pn < P:
            yield from _paranoid_extend(k, target, a, bs + (b,), total, Pn, depth + 1)


def _finalize(degree: int, a: int, bs: tuple[int, ...]) -> CurveRecord | None:
    newton = inv.newton_from_characteristic(a, bs)
    if not bl_check_unicuspidal(degree, generators_from_newton(newton)).passed:
        return None
    record = curve_record(degree, newton, existence=CANDIDATE)
    seq = inv.expand_runs(record.mult)
    m1 = seq[0] if seq else 1
    m2 = seq[1] if len(seq) > 1 else 1
    if m1 + m2 > degree:  # tangent-line bound, post-filter
        return None
    return record


# ---------------------------------------------------------------------------
# classification: attribution + existence resolution

def kodaira_of_kind(kind: str) -> float | int:
    if kind in TONO_KINDS:
        return 1
    if kind in (OREVKOV, OREVKOV_STAR):
        return 2
    return KODAIRA_NEG_INF  # ams and kashiwara


def classify_record(record: CurveRecord, frontier: bool = False) -> CurveRecord:
    """Attach family attribution, Kodaira dimension and existence status."""
    spec = attribute_family(record.degree, record.newton)
    status, chain = resolve_existence(record.degree, record.mult)
    if status == CANDIDATE and spec is not None:
        status = PROVED_FAMILY
    flags = record.flags
    if frontier and "frontier" not in flags:
        flags = flags + ("frontier",)
    return replace(
        record,
        family=spec,
        kodaira=None if spec is None else kodaira_of_kind(spec.kind),
        existence=status,
        reduction_chain=chain,
        flags=flags,
    )


def _enumerate_task(args) -> list[CurveRecord]:
    degree, pair_count = args
    return enumerate_candidates(SearchConfig(degree, pair_count, PRUNED, 1))


def classify_range(max_degree: int, worker_count: int = 1) -> list[CurveRecord]:
    """Every candidate of degree <= max_degree over all admissible pair
    counts (capped at 4), attributed and existence-resolved.

    The output is proved complete for max_degree <= 30; records above 30
    are flagged "frontier" (pair counts >= 5 first become possible at
    degree 33 and are not searched).  Workers parallelize over the
    (degree, pair count) grid; the merge preserves canonical order.
    """
    tasks = [
        (d, k)
        for d in range(3, max_degree + 1)
        for k in range(1, min(4, max_pairs_bound(d)) + 1)
    ]
    if worker_count <= 1 or len(tasks) <= 1:
        parts = map(_enumerate_task, tasks)
    else:
        with ProcessPoolExecutor(max_workers=min(worker_count, len(tasks))) as pool:
            parts = list(pool.map(_enumerate_task, tasks))
    merged: dict[tuple, CurveRecord] = {}
    for part in parts:
        for record in part:
            merged[(record.degree, record.newton)] = record
    return [
        classify_record(record, frontier=record.degree > 30)
        for record in sorted(merged.values(), key=CurveRecord.sort_key)
    ]
