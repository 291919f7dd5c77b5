"""Closed-form families of rational unicuspidal plane curves.

Four constructions produce every known rational unicuspidal plane curve,
organized by the logarithmic Kodaira dimension of the curve complement:

* **AMS curves** (complement of Kodaira dimension -infinity, tangent line at
  the cusp meeting the curve only there): one curve per ordered
  factorization of the degree into factors >= 2;
* **Kashiwara curves** (the remaining -infinity curves): six types whose
  degrees and pairs are Fibonacci expressions in parameters (l; lambda_i);
* **Tono curves** (Kodaira dimension 1): four types parameterized by
  (a), (a, s), (n), (n, s);
* **Orevkov curves** (Kodaira dimension 2): two Fibonacci families, plain
  and starred.

Generators validate every divisibility and coprimality condition at
runtime and reject parameter combinations that do not produce genuine cusp
data (several published parameterizations contain such combinations; see
the individual docstrings).  Stored invariants always come from
recomputation via :mod:`cuspidal.invariants`, never from the closed forms,
so :func:`invariant_closed_forms` stays an independent cross-check.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, prod

from . import invariants as inv
from .existence import CANDIDATE, PROVED_FAMILY
from .records import (
    FLAG_INCONSISTENT,
    CurveRecord,
    FamilySpec,
    KODAIRA_NEG_INF,
    curve_record,
)

AMS = "ams"
KASHIWARA_II_GE = "kashiwara-ii-ge"
KASHIWARA_II_SP = "kashiwara-ii-sp"
KASHIWARA_IIPLUS_GE = "kashiwara-iiplus-ge"
KASHIWARA_IIPLUS_SP = "kashiwara-iiplus-sp"
KASHIWARA_IIMINUS_GE = "kashiwara-iiminus-ge"
KASHIWARA_IIMINUS_SP = "kashiwara-iiminus-sp"
TONO_IA = "tono-ia"
TONO_IB = "tono-ib"
TONO_IIA = "tono-iia"
TONO_IIB = "tono-iib"
OREVKOV = "orevkov"
OREVKOV_STAR = "orevkov-star"

KASHIWARA_KINDS = (
    KASHIWARA_II_GE,
    KASHIWARA_II_SP,
    KASHIWARA_IIPLUS_GE,
    KASHIWARA_IIPLUS_SP,
    KASHIWARA_IIMINUS_GE,
    KASHIWARA_IIMINUS_SP,
)
TONO_KINDS = (TONO_IA, TONO_IB, TONO_IIA, TONO_IIB)
ALL_KINDS = (AMS,) + KASHIWARA_KINDS + TONO_KINDS + (OREVKOV, OREVKOV_STAR)


class FamilyParameterError(ValueError):
    """Parameter combination outside a family's domain, or one that fails a
    divisibility/coprimality condition of the construction."""


def _exact_div(num: int, den: int, what: str) -> int:
    if num % den:
        raise FamilyParameterError(f"{what} = {num}/{den} is not an integer")
    return num // den


# ---------------------------------------------------------------------------
# AMS curves

def ams_newton_pairs(factors: tuple[int, ...]) -> inv.Pairs:
    """Newton pairs of the AMS curve of the ordered factorization.

    First factor f_1 >= 3: pairs (f_1 - 1, f_1), (f_2, f_1 f_2 - 1), ...,
    (f_r, f_{r-1} f_r - 1).  First factor 2: the leading pair degenerates
    and the curve has r - 1 pairs (f_2, 4 f_2 - 1), (f_3, f_2 f_3 - 1), ...
    The single factorization (2,) leaves no pairs at all: its "curve" is
    the smooth conic, kept so that every ordered factorization of every
    degree >= 2 has a record.
    """
    if not factors:
        raise FamilyParameterError("ordered factorization must be nonempty")
    if any(f < 2 for f in factors):
        raise FamilyParameterError(f"factors must all be >= 2, got {factors}")
    if factors[0] == 2:
        rest = factors[1:]
        if not rest:
            return ()
        pairs = [(rest[0], 4 * rest[0] - 1)]
        pairs += [(rest[i], rest[i - 1] * rest[i] - 1) for i in range(1, len(rest))]
        return tuple(pairs)
    pairs = [(factors[0] - 1, factors[0])]
    pairs += [(factors[i], factors[i - 1] * factors[i] - 1) for i in range(1, len(factors))]
    return tuple(pairs)


def ams_curve(factors: tuple[int, ...]) -> CurveRecord:
    """AMS curve of one ordered factorization (degree = product)."""
    factors = tuple(factors)
    pairs = ams_newton_pairs(factors)
    return curve_record(
        prod(factors),
        pairs,
        family=FamilySpec(AMS, factors),
        kodaira=KODAIRA_NEG_INF,
        existence=PROVED_FAMILY,
    )


@lru_cache(maxsize=None)
def ordered_factorizations(n: int) -> tuple[tuple[int, ...], ...]:
    """All ordered factorizations of n into factors >= 2, lexicographic."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return ((),)
    out = []
    for f in range(2, n + 1):
        if n % f == 0:
            out.extend((f,) + rest for rest in ordered_factorizations(n // f))
    return tuple(out)


@lru_cache(maxsize=None)
def ordered_factorization_count(n: int) -> int:
    """Kalmar count a(n): a(1) = 1, a(n) = sum of a(d) over proper divisors."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return 1
    return sum(ordered_factorization_count(d) for d in range(1, n) if n % d == 0)


def ams_all(degree: int) -> list[CurveRecord]:
    """One AMS record per ordered factorization of the degree."""
    if degree < 2:
        raise FamilyParameterError(f"degree must be >= 2, got {degree}")
    return [ams_curve(f) for f in ordered_factorizations(degree)]


# ---------------------------------------------------------------------------
# Kashiwara curves

def _kashiwara_data(kind: str, l: int, lambdas: tuple[int, ...]) -> tuple[int, inv.Pairs]:
    if l < 0:
        raise FamilyParameterError(f"l must be >= 0, got {l}")
    F = inv.fibonacci(2 * l + 3)
    if kind == KASHIWARA_II_GE:
        if lambdas:
            raise FamilyParameterError(f"{kind} takes no lambda parameters")
        return F * inv.fibonacci(2 * l + 5), ((F * F, inv.fibonacci(2 * l + 5) ** 2),)
    if kind == KASHIWARA_II_SP:
        if lambdas:
            raise FamilyParameterError(f"{kind} takes no lambda parameters")
        if l < 1:
            raise FamilyParameterError(
                "the special one-pair type needs l >= 1 (l = 0 gives the pair (1, 5), a smooth conic)"
            )
        return F, ((inv.fibonacci(2 * l + 1), inv.fibonacci(2 * l + 5)),)

    if not lambdas:
        raise FamilyParameterError(f"{kind} needs at least one lambda parameter")
    if any(x < 0 for x in lambdas):
        raise FamilyParameterError("lambda parameters must be >= 0")
    if l == 0 and any(x < 1 for x in lambdas):
        raise FamilyParameterError("lambda parameters must be >= 1 when l = 0")

    plus = kind in (KASHIWARA_IIPLUS_GE, KASHIWARA_IIPLUS_SP)
    ge = kind in (KASHIWARA_IIPLUS_GE, KASHIWARA_IIMINUS_GE)
    prev = inv.fibonacci(2 * l - 1)
    c_small = F * prev - 1
    c_big = F * (F - prev) - 1
    n = []
    for i, lam in enumerate(lambdas, start=1):
        odd = i % 2 == 1
        c = (c_small if odd else c_big) if plus else (c_big if odd else c_small)
        n.append(lam * F * F + c)
    lead = inv.fibonacci(2 * l + 5) if plus else inv.fibonacci(2 * l + 1)
    degree = (F if ge else 1) * lead * prod(n)
    pairs = [(n[0], _exact_div(lead * lead * n[0] - 1, F * F, "q_1"))]
    for i in range(1, len(n)):
        pairs.append((n[i], _exact_div(n[i - 1] * n[i] - 1, F * F, f"q_{i + 1}")))
    if ge:
        pairs.append((F * F, n[-1]))
    else:
        pairs.append((F, _exact_div(n[-1] + 1, F, "final q")))
    return degree, tuple(pairs)


def kashiwara_curve(kind: str, l: int, lambdas: tuple[int, ...] = ()) -> CurveRecord:
    """Kashiwara curve of the given type.

    The two one-pair types take only l; the four N-pair types take l and
    (lambda_1, ..., lambda_N).  Every divisibility condition in the pair
    formulas is checked at runtime; combinations producing non-integral
    entries or data violating the cusp invariants are rejected with a
    diagnostic.  (Both "minus" types always fail the q_1 > p_1 invariant:
    q_1/p_1 is roughly (phi_{2l+1}/phi_{2l+3})^2 < 1, so no parameter
    choice yields genuine cusp data.)
    """
    if kind not in KASHIWARA_KINDS:
        raise FamilyParameterError(f"unknown Kashiwara type {kind!r}")
    degree, pairs = _kashiwara_data(kind, l, tuple(lambdas))
    try:
        return curve_record(
            degree,
            pairs,
            family=FamilySpec(kind, (l, *lambdas)),
            kodaira=KODAIRA_NEG_INF,
            existence=PROVED_FAMILY,
        )
    except inv.InvalidCuspData as exc:
        raise FamilyParameterError(f"{kind}(l={l}, lambdas={lambdas}): {exc}") from exc


# ---------------------------------------------------------------------------
# Tono curves

def tono_curve(kind: str, params: tuple[int, ...]) -> CurveRecord:
    """Tono curve of the given type: ia (a,), ib (a, s), iia (n,), iib (n, s).

    The published iib pair data is internally inconsistent: the pairs fail
    coprimality and first-pair ordering for small s, and their delta
    invariant does not match the genus of the stated degree.  iib records
    are therefore built on the lenient path, flagged, and left with
    existence "candidate"; see also :func:`invariant_closed_forms`.
    """
    if kind == TONO_IA:
        (a,) = params
        if a < 3:
            raise FamilyParameterError(f"type ia needs a >= 3, got {a}")
        pairs = ((a - 1, a), (a, (a + 1) ** 2))
        return curve_record(
            a * a + 1,
            pairs,
            family=FamilySpec(kind, (a,)),
            kodaira=1,
            existence=PROVED_FAMILY,
        )
    if kind == TONO_IB:
        a, s = params
        if a < 3 or s < 2:
            raise FamilyParameterError(f"type ib needs a >= 3 and s >= 2, got a={a}, s={s}")
        pairs = ((a - 1, a), (s, a * s + 1), (a, a * s + 1))
        return curve_record(
            a * a * s + 1,
            pairs,
            family=FamilySpec(kind, (a, s)),
            kodaira=1,
            existence=PROVED_FAMILY,
        )
    if kind == TONO_IIA:
        (n,) = params
        if n < 2:
            raise FamilyParameterError(f"type iia needs n >= 2, got {n}")
        pairs = ((n, 4 * n + 1), (4 * n + 1, (2 * n + 1) ** 2))
        return curve_record(
            8 * n * n + 4 * n + 1,
            pairs,
            family=FamilySpec(kind, (n,)),
            kodaira=1,
            existence=PROVED_FAMILY,
        )
    if kind == TONO_IIB:
        n, s = params
        if n < 2 or s < 2:
            raise FamilyParameterError(f"type iib needs n >= 2 and s >= 2, got n={n}, s={s}")
        v = 4 * n + 1
        pairs = (
            (n * (4 * s - 1), (s - 1) * v),
            (4 * s - 1, v * s - n),
            (v, v * s - n),
        )
        return curve_record(
            2 * v * v * s - 4 * n * (2 * n + 1),
            pairs,
            family=FamilySpec(kind, (n, s)),
            kodaira=1,
            existence=CANDIDATE,
            flags=(FLAG_INCONSISTENT,),
            strict=False,
        )
    raise FamilyParameterError(f"unknown Tono type {kind!r}")


# ---------------------------------------------------------------------------
# Orevkov curves

def orevkov_curve(k: int, starred: bool = False) -> CurveRecord:
    """Orevkov curve: plain family at degree 8 (k = 1) and phi_{4k+2}
    (k > 1); starred family at twice those degrees."""
    if k < 1:
        raise FamilyParameterError(f"k must be >= 1, got {k}")
    if k == 1:
        degree, pairs = ((16, ((6, 43),)) if starred else (8, ((3, 22),)))
    else:
        f4k, f4k4 = inv.fibonacci(4 * k), inv.fibonacci(4 * k + 4)
        assert f4k % 3 == 0 and f4k4 % 3 == 0  # fib(4) = 3 divides fib(4k)
        head = (f4k // 3, f4k4 // 3)
        if starred:
            degree, pairs = 2 * inv.fibonacci(4 * k + 2), (head, (6, 1))
        else:
            degree, pairs = inv.fibonacci(4 * k + 2), (head, (3, 1))
    return curve_record(
        degree,
        pairs,
        family=FamilySpec(OREVKOV_STAR if starred else OREVKOV, (k,)),
        kodaira=2,
        existence=PROVED_FAMILY,
    )


# ---------------------------------------------------------------------------
# dispatch, closed forms, attribution

def family_curve(spec: FamilySpec) -> CurveRecord:
    """Generate the curve of a family spec (dispatch on kind)."""
    if spec.kind == AMS:
        return ams_curve(spec.params)
    if spec.kind in KASHIWARA_KINDS:
        return kashiwara_curve(spec.kind, spec.params[0], spec.params[1:])
    if spec.kind in TONO_KINDS:
        return tono_curve(spec.kind, spec.params)
    if spec.kind == OREVKOV:
        return orevkov_curve(spec.params[0])
    if spec.kind == OREVKOV_STAR:
        return orevkov_curve(spec.params[0], starred=True)
    raise FamilyParameterError(f"unknown family kind {spec.kind!r}")


def invariant_closed_forms(spec: FamilySpec) -> tuple[Fraction, int]:
    """Closed-form (lct, self-intersection) of a family member.

    These are evaluated directly from the family parameters, independently
    of the pair pipeline, and are compared against recomputed invariants in
    the table-reproduction checks.  Notes on two branches:

    * first-factor-2 AMS curves: the leading Puiseux exponent is
      (4 f_2 - 1) f_3 ... f_r rather than the degree, so the second lct
      term uses that value (the formula 1/((f_1-1) f_2...f_r) + 1/d holds
      only for first factor >= 3; the factorization (2,) is the smooth
      conic with lct 1 and self-intersection 4);
    * tono-iib: the published threshold expression is singular at s = 1
      and disagrees with the threshold computed from the published pairs
      for every s; it is returned verbatim here so the discrepancy stays
      visible, and records of that type carry an inconsistency flag.
    """
    kind, params = spec.kind, spec.params
    if kind == AMS:
        factors = params
        if any(f < 2 for f in factors) or not factors:
            raise FamilyParameterError(f"invalid factorization {factors}")
        d = prod(factors)
        if factors == (2,):
            return Fraction(1), 4
        if factors[0] == 2:
            lct = Fraction(2, d) + Fraction(1, (4 * factors[1] - 1) * prod(factors[2:]))
        else:
            lct = Fraction(1, (factors[0] - 1) * prod(factors[1:])) + Fraction(1, d)
        return lct, factors[-1]
    if kind in KASHIWARA_KINDS:
        l = params[0]
        lambdas = params[1:]
        F = inv.fibonacci(2 * l + 3)
        if kind == KASHIWARA_II_GE:
            return Fraction(1, F * F) + Fraction(1, inv.fibonacci(2 * l + 5) ** 2), 0
        if kind == KASHIWARA_II_SP:
            return (
                Fraction(1, inv.fibonacci(2 * l + 1)) + Fraction(1, inv.fibonacci(2 * l + 5)),
                -1,
            )
        _, pairs = _kashiwara_data(kind, l, lambdas)
        n = [p for p, _ in pairs[:-1]]
        lead = inv.fibonacci(2 * l + 5) if kind in (KASHIWARA_IIPLUS_GE, KASHIWARA_IIPLUS_SP) else inv.fibonacci(2 * l + 1)
        rest = prod(n[1:]) if len(n) > 1 else 1
        if kind in (KASHIWARA_IIPLUS_GE, KASHIWARA_IIMINUS_GE):
            return Fraction(1, prod(n) * F * F) + Fraction(1, (lead * lead * n[0] - 1) * rest), 0
        return Fraction(1, prod(n) * F) + Fraction(F, (lead * lead * n[0] - 1) * rest), -1
    if kind == TONO_IA:
        (a,) = params
        return Fraction(1, a * (a - 1)) + Fraction(1, a * a), 1 - a
    if kind == TONO_IB:
        a, s = params
        return Fraction(1, a * s * (a - 1)) + Fraction(1, a * a * s), 1 - a
    if kind == TONO_IIA:
        (n,) = params
        return Fraction(1, n * (4 * n + 1)) + Fraction(1, (4 * n + 1) ** 2), -n
    if kind == TONO_IIB:
        n, s = params
        if s == 1:
            raise FamilyParameterError("tono-iib threshold expression is singular at s = 1")
        return (
            Fraction(1, n * (4 * n + 1) * (4 * s - 1))
            + Fraction(1, (4 * n + 1) ** 2 * (s - 1)),
            -n,
        )
    if kind in (OREVKOV, OREVKOV_STAR):
        (k,) = params
        if k == 1:
            return (
                (Fraction(1, 6) + Fraction(1, 43), -2)
                if kind == OREVKOV_STAR
                else (Fraction(1, 3) + Fraction(1, 22), -2)
            )
        half = 2 if kind == OREVKOV_STAR else 1
        return (
            Fraction(1, half * inv.fibonacci(4 * k))
            + Fraction(1, half * inv.fibonacci(4 * k + 4)),
            -2,
        )
    raise FamilyParameterError(f"unknown family kind {kind!r}")


def _kashiwara_specs_of_degree(degree: int):
    for kind in (KASHIWARA_II_GE, KASHIWARA_II_SP):
        l = 0
        while True:
            F = inv.fibonacci(2 * l + 3)
            base = F * inv.fibonacci(2 * l + 5) if kind == KASHIWARA_II_GE else F
            if base > degree:
                break
            if base == degree and not (kind == KASHIWARA_II_SP and l == 0):
                yield FamilySpec(kind, (l,))
            l += 1
    for kind in (
        KASHIWARA_IIPLUS_GE,
        KASHIWARA_IIPLUS_SP,
        KASHIWARA_IIMINUS_GE,
        KASHIWARA_IIMINUS_SP,
    ):
        plus = kind in (KASHIWARA_IIPLUS_GE, KASHIWARA_IIPLUS_SP)
        ge = kind in (KASHIWARA_IIPLUS_GE, KASHIWARA_IIMINUS_GE)
        l = 0
        while True:
            F = inv.fibonacci(2 * l + 3)
            lead = inv.fibonacci(2 * l + 5) if plus else inv.fibonacci(2 * l + 1)
            base = (F if ge else 1) * lead
            # smallest achievable n_i at this l bounds the search
            lam_min = 1 if l == 0 else 0
            prev = inv.fibonacci(2 * l - 1)
            c_vals = (F * prev - 1, F * (F - prev) - 1)
            min_n = max(2, lam_min * F * F + min(c_vals))
            if base * min_n > degree:
                if base > degree:
                    break
                l += 1
                continue
            if degree % base == 0:
                yield from (
                    FamilySpec(kind, (l, *lams))
                    for lams in _lambda_assignments(degree // base, F, c_vals, lam_min, min_n)
                )
            l += 1


def _lambda_assignments(remaining, F, c_vals, lam_min, min_n, index=1):
    """Ordered lambda tuples whose n_i values multiply to `remaining`."""
    c_odd, c_even = c_vals
    c = c_odd if index % 2 == 1 else c_even
    for v in range(min_n, remaining + 1):
        if remaining % v or (v - c) % (F * F) or (v - c) // (F * F) < lam_min:
            continue
        lam = (v - c) // (F * F)
        if remaining == v:
            yield (lam,)
        for rest in _lambda_assignments(remaining // v, F, c_vals, lam_min, min_n, index + 1):
            yield (lam, *rest)


def _family_specs_of_degree(degree: int):
    for factors in ordered_factorizations(degree):
        yield FamilySpec(AMS, factors)
    yield from _kashiwara_specs_of_degree(degree)
    a = 3
    while a * a <= degree - 1:
        if (degree - 1) % (a * a) == 0:
            s = (degree - 1) // (a * a)
            if s == 1:
                yield FamilySpec(TONO_IA, (a,))
            else:
                yield FamilySpec(TONO_IB, (a, s))
        a += 1
    n = 2
    while 8 * n * n + 4 * n + 1 <= degree:
        if 8 * n * n + 4 * n + 1 == degree:
            yield FamilySpec(TONO_IIA, (n,))
        n += 1
    n = 2
    while 2 * (4 * n + 1) ** 2 * 2 - 4 * n * (2 * n + 1) <= degree:
        s = 2
        while (d := 2 * (4 * n + 1) ** 2 * s - 4 * n * (2 * n + 1)) <= degree:
            if d == degree:
                yield FamilySpec(TONO_IIB, (n, s))
            s += 1
        n += 1
    if degree == 8:
        yield FamilySpec(OREVKOV, (1,))
    if degree == 16:
        yield FamilySpec(OREVKOV_STAR, (1,))
    k = 2
    while inv.fibonacci(4 * k + 2) <= degree:
        if inv.fibonacci(4 * k + 2) == degree:
            yield FamilySpec(OREVKOV, (k,))
        if 2 * inv.fibonacci(4 * k + 2) == degree:
            yield FamilySpec(OREVKOV_STAR, (k,))
        k += 1


def attribute_family(degree: int, newton: inv.Pairs) -> FamilySpec | None:
    """Find the family spec whose generated curve has exactly these Newton
    pairs at this degree; None when no family matches.  The search space is
    bounded because every family degree is monotone in each parameter."""
    for spec in _family_specs_of_degree(degree):
        try:
            record = family_curve(spec)
        except FamilyParameterError:
            continue
        if record.degree == degree and record.newton == newton and not record.flags:
            return spec
    return None


# ---------------------------------------------------------------------------
# prime-degree utilities

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def prime_degree_scan(limit: int) -> list[tuple[int, tuple[tuple, ...]]]:
    """Primes p <= limit carrying a nontrivial unicuspidal rational curve.

    Every prime degree has the one-pair curve (p-1, p); the nontrivial
    sources are: a Fibonacci prime phi_j at odd prime index j >= 5, a prime
    of the form a^2 s + 1 with a >= 3, or a prime of the form
    8 n^2 + 4 n + 1 with n >= 2.  Returns (prime, witnesses) sorted by
    prime, where each witness names its source: ("fibonacci", j),
    ("square-family", a, s) or ("tono-iia", n).
    """
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    hits: dict[int, list[tuple]] = {}

    def add(p: int, witness: tuple) -> None:
        hits.setdefault(p, []).append(witness)

    j = 5
    while inv.fibonacci(j) <= limit:
        if j % 2 and _is_prime(j) and _is_prime(inv.fibonacci(j)):
            add(inv.fibonacci(j), ("fibonacci", j))
        j += 1
    for a in range(3, limit):
        if a * a + 1 > limit:
            break
        for s in range(1, limit):
            p = a * a * s + 1
            if p > limit:
                break
            if _is_prime(p):
                add(p, ("square-family", a, s))
    n = 2
    while 8 * n * n + 4 * n + 1 <= limit:
        p = 8 * n * n + 4 * n + 1
        if _is_prime(p):
            add(p, ("tono-iia", n))
        n += 1
    return [(p, tuple(w)) for p, w in sorted(hits.items())]


def bunyakovsky_condition_check(family: str, s: int | None = None):
    """Finite gcd evidence for the no-common-factor condition.

    family "sn2+1" (requires s >= 1): returns ((f(1), f(2), f(3)), g) for
    f(n) = s n^2 + 1, where g is the gcd of the three values and must be 1.
    family "8n2+4n+1": returns ((13, 41), 1), the coprime witness pair
    (f(1), f(2)).
    """
    if family == "sn2+1":
        if s is None or s < 1:
            raise ValueError("family sn2+1 needs s >= 1")
        values = (s + 1, 4 * s + 1, 9 * s + 1)
        return values, gcd(gcd(values[0], values[1]), values[2])
    if family == "8n2+4n+1":
        values = (13, 41)
        return values, gcd(*values)
    raise ValueError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# parameter grids for the cross-check suites

def ams_grid(max_degree: int):
    for d in range(2, max_degree + 1):
        for factors in ordered_factorizations(d):
            yield FamilySpec(AMS, factors)


def kashiwara_grid(l_max: int, n_max: int, lambda_max: int):
    """All Kashiwara specs with l <= l_max, N <= n_max, lambda_i <= lambda_max
    (including combinations the generator will reject)."""
    for l in range(l_max + 1):
        yield FamilySpec(KASHIWARA_II_GE, (l,))
        yield FamilySpec(KASHIWARA_II_SP, (l,))
    for kind in (
        KASHIWARA_IIPLUS_GE,
        KASHIWARA_IIPLUS_SP,
        KASHIWARA_IIMINUS_GE,
        KASHIWARA_IIMINUS_SP,
    ):
        for l in range(l_max + 1):
            for N in range(1, n_max + 1):
                yield from (
                    FamilySpec(kind, (l, *lams))
                    for lams in _tuples(range(lambda_max + 1), N)
                )


def _tuples(values, length):
    if length == 0:
        yield ()
        return
    for v in values:
        for rest in _tuples(values, length - 1):
            yield (v, *rest)


def tono_grid(a_max: int, s_max: int, n_max: int):
    for a in range(3, a_max + 1):
        yield FamilySpec(TONO_IA, (a,))
        for s in range(2, s_max + 1):
            yield FamilySpec(TONO_IB, (a, s))
    for n in range(2, n_max + 1):
        yield FamilySpec(TONO_IIA, (n,))
        for s in range(2, s_max + 1):
            yield FamilySpec(TONO_IIB, (n, s))


def orevkov_grid(k_max: int):
    for k in range(1, k_max + 1):
        yield FamilySpec(OREVKOV, (k,))
        yield FamilySpec(OREVKOV_STAR, (k,))
