"""Check records, suite reports and exact number formatting."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .algebra import AlgebraicElement, IntPoly, QuadraticNumber, RealAlgebraic

REPORT_VERSION = 1


def exact_str(x) -> str:
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, QuadraticNumber):
        return x.exact_str()
    if isinstance(x, AlgebraicElement):
        root = x.field.root
        if list(x.coeffs) in ([0, 1], [Fraction(0), Fraction(1)]):
            return f"root of {_frac_poly_str(root.poly)} in ({root.lo}, {root.hi})"
        poly = "+".join(f"({c})*a^{i}" for i, c in enumerate(x.coeffs) if c) or "0"
        return f"{poly} where a = root of {_frac_poly_str(root.poly)} in ({root.lo}, {root.hi})"
    if isinstance(x, RealAlgebraic):
        return f"root of {_frac_poly_str(x.poly)} in ({x.lo}, {x.hi})"
    if isinstance(x, IntPoly):
        return str(x)
    return str(x)


def _frac_poly_str(c) -> str:
    den = 1
    for a in c:
        den = den * Fraction(a).denominator // _gcd(den, Fraction(a).denominator)
    return str(IntPoly(tuple(int(Fraction(a) * den) for a in c)))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def fmt_value(x) -> str:
    """Exact value plus a decimal marked approximate."""
    if isinstance(x, bool) or (isinstance(x, (int, Fraction)) and Fraction(x).denominator == 1):
        return exact_str(x)
    try:
        approx = float(x)
    except (TypeError, ValueError):
        return exact_str(x)
    return f"{exact_str(x)} (approx. {approx:.6f})"


def to_jsonable(x) -> Any:
    """Deterministic JSON form; exact values become strings."""
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    if isinstance(x, (frozenset, set)):
        return sorted(to_jsonable(v) for v in x)
    if x is None or isinstance(x, (bool, str)):
        return x
    if isinstance(x, int):
        return x
    if hasattr(x, "to_json"):
        return x.to_json()
    return exact_str(x)


@dataclass
class CheckReport:
    """Result of one verification: ``ok`` plus a short ``outcome`` label."""

    name: str
    ok: bool
    outcome: str = ""
    data: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "outcome": self.outcome, "data": to_jsonable(self.data)}

    def __bool__(self):
        return self.ok


@dataclass
class CheckRecord:
    claim_id: str
    anchor: str
    status: str  # pass | fail | skipped
    data: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "claim": self.claim_id,
            "anchor": self.anchor,
            "status": self.status,
            "data": to_jsonable(self.data),
        }


@dataclass
class SuiteReport:
    suite: str
    records: list[CheckRecord] = field(default_factory=list)

    def add(self, claim_id: str, anchor: str, passed: bool | None, **data) -> CheckRecord:
        status = "skipped" if passed is None else ("pass" if passed else "fail")
        rec = CheckRecord(claim_id, anchor, status, data)
        self.records.append(rec)
        return rec

    @property
    def exit_status(self) -> int:
        return 1 if any(r.status == "fail" for r in self.records) else 0

    def sorted_records(self) -> list[CheckRecord]:
        return sorted(self.records, key=lambda r: r.claim_id)

    def to_json(self) -> dict:
        return {
            "report_version": REPORT_VERSION,
            "suite": self.suite,
            "exit_status": self.exit_status,
            "records": [r.to_json() for r in self.sorted_records()],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def table(self) -> str:
        recs = self.sorted_records()
        w = max((len(r.claim_id) for r in recs), default=5)
        lines = [f"suite {self.suite}: {'PASS' if self.exit_status == 0 else 'FAIL'}"]
        for r in recs:
            lines.append(f"  {r.status.upper():7s} {r.claim_id:<{w}}  [{r.anchor}]")
        return "\n".join(lines)
