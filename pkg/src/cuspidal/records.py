"""Curve records and their JSON/CSV/Markdown serialization.

A :class:`CurveRecord` bundles everything this package knows about one
rational unicuspidal plane curve: degree, all four cusp representations,
the scalar invariants, the semigroup generators, an optional family
attribution with its logarithmic Kodaira dimension, an existence status and
the reduction chain that proves it.  Records are immutable; derived fields
are computed once by :func:`curve_record` and every stored invariant can be
recomputed from the Newton pairs.

Serialized output always lists records in canonical order (degree, then
lexicographic Newton pairs) so that repeated runs are byte-identical.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import invariants as inv
from .existence import CANDIDATE, ReductionStep
from .semigroup import generators_from_newton

KODAIRA_NEG_INF = float("-inf")

FLAG_INCONSISTENT = "inconsistent-source-data"
FLAG_FRONTIER = "frontier"


@dataclass(frozen=True)
class FamilySpec:
    """A family attribution: which closed-form construction, which parameters.

    kinds: ams (params = ordered factorization of the degree);
    kashiwara-ii-{ge,sp} (params = (l,)); kashiwara-ii{plus,minus}-{ge,sp}
    (params = (l, lambda_1, ..., lambda_N)); tono-ia (a,); tono-ib (a, s);
    tono-iia (n,); tono-iib (n, s); orevkov / orevkov-star (k,).
    """

    kind: str
    params: tuple[int, ...]

    def describe(self) -> str:
        return f"{self.kind}{list(self.params)}"


@dataclass(frozen=True)
class CurveRecord:
    degree: int
    newton: inv.Pairs
    puiseux: inv.Pairs
    mult: inv.MultRuns
    delta: int
    semigroup_generators: tuple[int, ...]
    lct: Fraction
    self_intersection: int
    family: FamilySpec | None = None
    kodaira: float | int | None = None
    existence: str = CANDIDATE
    reduction_chain: tuple[ReductionStep, ...] = ()
    flags: tuple[str, ...] = ()

    def sort_key(self) -> tuple:
        return (self.degree, self.newton)


def curve_record(
    degree: int,
    newton: inv.Pairs,
    *,
    family: FamilySpec | None = None,
    kodaira: float | int | None = None,
    existence: str = CANDIDATE,
    reduction_chain: tuple[ReductionStep, ...] = (),
    flags: tuple[str, ...] = (),
    strict: bool = True,
) -> CurveRecord:
    """Build a record with all derived fields computed from the Newton pairs.

    With ``strict`` (the default) the delta invariant must equal the genus
    (d-1)(d-2)/2 of a degree-d curve; records carrying known-bad source data
    are built with ``strict=False`` and a flag instead.

    The empty Newton sequence is the degenerate smooth branch (no cusp);
    it is only meaningful at degree <= 2 and is used for the smooth conic.
    """
    if not newton:
        if inv.genus_target(degree) != 0:
            raise inv.InvalidCuspData(
                f"a smooth degree-{degree} curve is not rational; no record"
            )
        return CurveRecord(
            degree=degree,
            newton=(),
            puiseux=(),
            mult=(),
            delta=0,
            semigroup_generators=(1,),
            lct=Fraction(1),
            self_intersection=3 * degree - 2,
            family=family,
            kodaira=kodaira,
            existence=existence,
            reduction_chain=reduction_chain,
            flags=flags,
        )
    if strict:
        puiseux = inv.newton_to_puiseux(newton)
        delta = inv.delta_from_puiseux(puiseux)
        if delta != inv.genus_target(degree):
            raise inv.InvalidCuspData(
                f"delta {delta} != genus {inv.genus_target(degree)} at degree {degree}"
            )
        mult = inv.multiplicity_sequence(newton)
        gens = generators_from_newton(newton)
        lct_value = inv.lct(puiseux)
        self_int = inv.self_intersection(degree, puiseux)
    else:
        # Lenient path: the pair data may violate cusp invariants, so
        # compute what is still well defined and record delta via the
        # multiplicity formula (always an integer).
        tail = 1
        rev = []
        for p, q in reversed(newton):
            rev.append((p * tail, q * tail))
            tail *= p
        puiseux = tuple(reversed(rev))
        mult = inv._staged_euclid(puiseux)
        delta = sum(c * v * (v - 1) // 2 for v, c in mult)
        gens = _lenient_generators(newton, puiseux)
        P1, Q1 = puiseux[0]
        lct_value = Fraction(1, P1) + Fraction(1, Q1)
        self_int = 3 * degree - 1 - P1 - sum(Q for _, Q in puiseux)
    return CurveRecord(
        degree=degree,
        newton=newton,
        puiseux=puiseux,
        mult=mult,
        delta=delta,
        semigroup_generators=gens,
        lct=lct_value,
        self_intersection=self_int,
        family=family,
        kodaira=kodaira,
        existence=existence,
        reduction_chain=reduction_chain,
        flags=flags,
    )


def _lenient_generators(newton: inv.Pairs, puiseux: inv.Pairs) -> tuple[int, ...]:
    w = [puiseux[0][0], puiseux[0][1]]
    for j in range(1, len(newton)):
        w.append(newton[j - 1][0] * w[-1] + puiseux[j][1])
    return tuple(w)


# ---------------------------------------------------------------------------
# serialization

def _kodaira_to_json(value: float | int | None):
    if value is None:
        return None
    if value == KODAIRA_NEG_INF:
        return "-inf"
    return int(value)


def _kodaira_from_json(value) -> float | int | None:
    if value is None:
        return None
    if value == "-inf":
        return KODAIRA_NEG_INF
    return int(value)


def _step_to_json(step: ReductionStep) -> dict:
    out = {
        "rule": step.rule,
        "from": {
            "degree": step.from_degree,
            "mult": inv.format_multiplicity(step.from_mult),
        },
        "to": None,
    }
    if step.to_degree is not None:
        out["to"] = {
            "degree": step.to_degree,
            "mult": inv.format_multiplicity(step.to_mult),
        }
    return out


def _step_from_json(data: dict) -> ReductionStep:
    to = data.get("to")
    return ReductionStep(
        rule=data["rule"],
        from_degree=data["from"]["degree"],
        from_mult=inv.parse_multiplicity(data["from"]["mult"]),
        to_degree=None if to is None else to["degree"],
        to_mult=None if to is None else inv.parse_multiplicity(to["mult"]),
    )


def record_to_json_dict(record: CurveRecord) -> dict:
    out = {
        "degree": record.degree,
        "newton_pairs": [list(p) for p in record.newton],
        "puiseux_pairs": [list(p) for p in record.puiseux],
        "multiplicity_sequence": inv.format_multiplicity(record.mult),
        "delta": record.delta,
        "semigroup_generators": list(record.semigroup_generators),
        "lct": {"num": record.lct.numerator, "den": record.lct.denominator},
        "self_intersection": record.self_intersection,
        "family": None
        if record.family is None
        else {"kind": record.family.kind, "params": list(record.family.params)},
        "kodaira": _kodaira_to_json(record.kodaira),
        "existence": record.existence,
        "reduction_chain": [_step_to_json(s) for s in record.reduction_chain],
    }
    if record.flags:
        out["flags"] = list(record.flags)
    return out


def record_from_json_dict(data: dict) -> CurveRecord:
    return CurveRecord(
        degree=data["degree"],
        newton=tuple(tuple(p) for p in data["newton_pairs"]),
        puiseux=tuple(tuple(p) for p in data["puiseux_pairs"]),
        mult=inv.parse_multiplicity(data["multiplicity_sequence"]),
        delta=data["delta"],
        semigroup_generators=tuple(data["semigroup_generators"]),
        lct=Fraction(data["lct"]["num"], data["lct"]["den"]),
        self_intersection=data["self_intersection"],
        family=None
        if data["family"] is None
        else FamilySpec(data["family"]["kind"], tuple(data["family"]["params"])),
        kodaira=_kodaira_from_json(data["kodaira"]),
        existence=data["existence"],
        reduction_chain=tuple(_step_from_json(s) for s in data["reduction_chain"]),
        flags=tuple(data.get("flags", ())),
    )


CSV_COLUMNS = [
    "degree",
    "newton_pairs",
    "puiseux_pairs",
    "multiplicity_sequence",
    "delta",
    "semigroup_generators",
    "lct",
    "self_intersection",
    "family",
    "kodaira",
    "existence",
    "reduction_chain",
    "flags",
]


def record_to_flat_dict(record: CurveRecord) -> dict:
    """Stringified fields, identical data to the JSON form."""
    return {
        "degree": record.degree,
        "newton_pairs": inv.format_newton(record.newton),
        "puiseux_pairs": inv.format_newton(record.puiseux),
        "multiplicity_sequence": inv.format_multiplicity(record.mult),
        "delta": record.delta,
        "semigroup_generators": ",".join(map(str, record.semigroup_generators)),
        "lct": f"{record.lct.numerator}/{record.lct.denominator}",
        "self_intersection": record.self_intersection,
        "family": "" if record.family is None else record.family.describe(),
        "kodaira": "" if record.kodaira is None else str(_kodaira_to_json(record.kodaira)),
        "existence": record.existence,
        "reduction_chain": "; ".join(s.describe() for s in record.reduction_chain),
        "flags": "; ".join(record.flags),
    }


@dataclass(frozen=True)
class OutputDocument:
    """A batch of records plus run metadata, ready to serialize."""

    records: tuple[CurveRecord, ...]
    metadata: dict = field(default_factory=dict)

    def sorted(self) -> "OutputDocument":
        return OutputDocument(
            tuple(sorted(self.records, key=CurveRecord.sort_key)), self.metadata
        )

    def to_json(self) -> str:
        payload = {
            "metadata": self.metadata,
            "records": [record_to_json_dict(r) for r in self.records],
        }
        return json.dumps(payload, indent=2, sort_keys=False) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for record in self.records:
            writer.writerow(record_to_flat_dict(record))
        return buf.getvalue()

    def to_markdown(self) -> str:
        lines = [
            "| " + " | ".join(CSV_COLUMNS) + " |",
            "| " + " | ".join("---" for _ in CSV_COLUMNS) + " |",
        ]
        for record in self.records:
            flat = record_to_flat_dict(record)
            lines.append("| " + " | ".join(str(flat[c]) for c in CSV_COLUMNS) + " |")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "md":
            return self.to_markdown()
        raise ValueError(f"unknown output format {fmt!r}")


def document_from_json(text: str) -> OutputDocument:
    payload = json.loads(text)
    return OutputDocument(
        tuple(record_from_json_dict(r) for r in payload["records"]),
        payload.get("metadata", {}),
    )
