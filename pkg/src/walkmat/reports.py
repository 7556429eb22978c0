"""Structured outcomes of theorem checks, serializable as JSON lines."""

import json
from dataclasses import dataclass, field

from .polys import IntPolynomial

PASS = "pass"
FAIL = "fail"
SKIP = "skip"


def fmt_value(v, var="x"):
    """Decimal string for ints, polynomial string otherwise."""
    if v is None:
        return None
    if isinstance(v, int):
        return str(v)
    if isinstance(v, IntPolynomial):
        return str(v).replace("x", var)
    return str(v)


@dataclass
class VerificationReport:
    check: str
    status: str
    lhs: str | None = None
    rhs: str | None = None
    sign: int | None = None
    graph6: str | None = None
    m: int | None = None
    ell: int | None = None
    detail: str = ""

    @property
    def passed(self):
        return self.status == PASS

    @property
    def failed(self):
        return self.status == FAIL

    def to_dict(self):
        return {
            "check": self.check,
            "graph6": self.graph6,
            "m": self.m,
            "ell": self.ell,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "sign": "n/a" if self.sign is None else f"{self.sign:+d}",
            "status": self.status,
            "detail": self.detail,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(", ", ": "))

    def to_tsv(self):
        d = self.to_dict()
        return "\t".join(
            "" if d[k] is None else str(d[k])
            for k in ("check", "graph6", "m", "ell", "lhs", "rhs", "sign", "status", "detail")
        )


TSV_HEADER = "check\tgraph6\tm\tell\tlhs\trhs\tsign\tstatus\tdetail"


def match_abs(lhs, rhs):
    """(status, sign) for checks stated only up to sign in the source results."""
    if lhs == rhs == 0:
        return PASS, None
    if lhs == rhs:
        return PASS, 1
    if lhs == -rhs:
        return PASS, -1
    return FAIL, None
