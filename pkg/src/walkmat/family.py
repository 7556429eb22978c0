"""Membership in the family F (det A = +-1, det W = +-2^(n/2)) and its
closure under rooted products with paths.

Membership implies determination by the generalized spectrum; that is
reported only as a consequence label, never checked by cospectral-mate
enumeration.
"""

from dataclasses import dataclass
from math import gcd

from .graphs import enumerate_graphs, graph6_decode, graph6_encode, rooted_product_path
from .matrix import adjacency_det, walk_det
from .reports import PASS, SKIP, VerificationReport, fmt_value, match_abs


@dataclass(frozen=True)
class FamilyStep:
    """One rooted-product step (m, ell) with gcd(ell, m+1) = 1."""

    m: int
    ell: int

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("need m >= 2")
        if not (1 <= self.ell <= (self.m + 1) // 2):
            raise ValueError(
                f"root position {self.ell} not in 1..floor((m+1)/2) for m={self.m}"
            )
        if gcd(self.ell, self.m + 1) != 1:
            raise ValueError(f"gcd({self.ell}, {self.m + 1}) != 1")


@dataclass(frozen=True)
class FMembership:
    graph6: str
    n: int
    det_adjacency: int
    det_walk: int
    member: bool

    def to_dict(self):
        return {
            "graph6": self.graph6,
            "n": self.n,
            "detA": str(self.det_adjacency),
            "detW": str(self.det_walk),
            "member": self.member,
        }


class FamilyClosureError(RuntimeError):
    """A rooted-product step left the family (would falsify the closure)."""

    def __init__(self, step, membership):
        super().__init__(
            f"closure violated at step {step}: {membership.to_dict()}"
        )
        self.step = step
        self.membership = membership


def f_member(g):
    """Exact F-membership certificate for a graph."""
    det_a = adjacency_det(g)
    det_w = walk_det(g)
    member = (
        g.n % 2 == 0
        and abs(det_a) == 1
        and abs(det_w) == 2 ** (g.n // 2)
    )
    return FMembership(graph6_encode(g), g.n, det_a, det_w, member)


def verify_detA_closure(g, m, ell):
    """|det A(G o P_m^(ell))| = 1 whenever |det A(G)| = 1 and gcd(ell, m+1) = 1."""
    g6 = graph6_encode(g)
    if abs(adjacency_det(g)) != 1:
        return VerificationReport(
            "detA-closure", SKIP, graph6=g6, m=m, ell=ell, detail="|det A(G)| != 1"
        )
    if gcd(ell, m + 1) != 1:
        return VerificationReport(
            "detA-closure",
            SKIP,
            graph6=g6,
            m=m,
            ell=ell,
            detail=f"gcd({ell},{m + 1}) != 1",
        )
    value = adjacency_det(rooted_product_path(g, m, ell))
    status, sign = match_abs(value, 1)
    return VerificationReport(
        "detA-closure",
        status,
        lhs=fmt_value(value),
        rhs="1",
        sign=sign,
        graph6=g6,
        m=m,
        ell=ell,
    )


def build_family(g, steps, vertex_budget=200):
    """Iterated rooted products from a seed in F, recertified at each level.

    Membership is recomputed from scratch after every step (the chain
    doubles as an end-to-end test of the determinant theorem); a failure
    raises FamilyClosureError. The chain stops cleanly once the next
    product would exceed the vertex budget.
    """
    seed = f_member(g)
    if not seed.member:
        raise ValueError(f"seed is not in F: {seed.to_dict()}")
    chain = [(g, seed)]
    current = g
    for step in steps:
        if not isinstance(step, FamilyStep):
            step = FamilyStep(*step)
        if current.n * step.m > vertex_budget:
            break
        current = rooted_product_path(current, step.m, step.ell)
        cert = f_member(current)
        if not cert.member:
            raise FamilyClosureError(step, cert)
        chain.append((current, cert))
    return chain


def search_f(source, on_error=None):
    """Scan a graph source for members of F, in deterministic order.

    ``source`` is either a vertex count (labeled enumeration, n <= 6) or
    an iterable of graph6 lines. Malformed lines are reported through
    ``on_error`` (line, exception) and skipped.
    """
    if isinstance(source, int):
        graphs = enumerate_graphs(source)
    else:
        def _decoded():
            for line in source:
                line = line.strip()
                if not line:
                    continue
                try:
                    yield graph6_decode(line)
                except ValueError as exc:
                    if on_error is not None:
                        on_error(line, exc)
        graphs = _decoded()
    members = []
    for g in graphs:
        cert = f_member(g)
        if cert.member:
            members.append(cert)
    return members
