"""Renormalized Chebyshev polynomials S_k and the consecutive-ones layer.

S_k satisfies S_k = x*S_{k-1} - S_{k-2} with S_0 = 1, S_1 = x, and
S_{-1} = 0 by convention; S_k(x) = U_k(x/2) where U_k is the Chebyshev
polynomial of the second kind. S_m is the characteristic polynomial of
the path P_m.
"""

from dataclasses import dataclass
from functools import lru_cache

from .matrix import ExactMatrix
from .polys import IntPolynomial


@lru_cache(maxsize=None)
def s_poly(k):
    if k < -1:
        raise ValueError("index must be >= -1")
    if k == -1:
        return IntPolynomial()
    if k == 0:
        return IntPolynomial((1,))
    if k == 1:
        return IntPolynomial((0, 1))
    return IntPolynomial((0, 1)) * s_poly(k - 1) - s_poly(k - 2)


def u_poly(m):
    """Chebyshev polynomial of the second kind, U_m(x) = S_m(2x)."""
    if m < 0:
        raise ValueError("index must be >= 0")
    return s_poly(m).scale_arg(2)


@dataclass(frozen=True)
class IndexSet:
    """The arithmetic set {a, a+2, ..., b} with a, b of equal parity."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.a > self.b or (self.a - self.b) % 2:
            raise ValueError(f"bad index set bounds ({self.a}, {self.b})")

    def members(self):
        return range(self.a, self.b + 1, 2)

    def __contains__(self, i):
        return self.a <= i <= self.b and (i - self.a) % 2 == 0

    def __iter__(self):
        return iter(self.members())

    def __len__(self):
        return (self.b - self.a) // 2 + 1


def s_product_indexset(p, q):
    """Index set of the expansion S_p*S_q = sum of S_i over I(p-q, p+q)."""
    if p < q or q < 0:
        raise ValueError("need p >= q >= 0")
    return IndexSet(p - q, p + q)


def _check_shape(m, ell):
    if m < 2:
        raise ValueError("need m >= 2")
    if not (1 <= ell <= (m + 1) // 2):
        raise ValueError(f"root position {ell} not in 1..floor((m+1)/2) for m={m}")


def f_poly(m, ell, k):
    """The k-th bridge polynomial between the eta blocks and the S basis.

    S_{ell-1}*S_{m-k} - S_m*S_{ell-k-1} for 1 <= k <= ell-1, and
    S_{ell-1}*S_{m-k} for ell <= k <= m.
    """
    _check_shape(m, ell)
    if not (1 <= k <= m):
        raise ValueError(f"k={k} not in 1..{m}")
    head = s_poly(ell - 1) * s_poly(m - k)
    if k <= ell - 1:
        return head - s_poly(m) * s_poly(ell - k - 1)
    return head


def s_sum_poly(m, ell):
    """S(x) = S_{ell-1} * sum_{k<m} S_k - S_m * sum_{k<ell-1} S_k.

    Monic of degree m-1; for ell = 1 the subtracted sum is empty.
    """
    _check_shape(m, ell)
    first = IntPolynomial()
    for k in range(m):
        first = first + s_poly(k)
    second = IntPolynomial()
    for k in range(ell - 1):
        second = second + s_poly(k)
    return s_poly(ell - 1) * first - s_poly(m) * second


def f_index_set(m, ell, k):
    """The index set I_k with f_k = sum of S_i over I_k."""
    _check_shape(m, ell)
    if not (1 <= k <= m):
        raise ValueError(f"k={k} not in 1..{m}")
    if k <= ell - 1:
        return IndexSet(m - ell - k + 1, m - ell + k - 1)
    if k <= m + 1 - ell:
        return IndexSet(m - ell - k + 1, m + ell - k - 1)
    return IndexSet(ell + k - m - 1, ell - k + m - 1)


def cones_matrix(m, ell):
    """The 0/1 matrix B with (f_1..f_m)^T = B (S_0..S_{m-1})^T.

    Returns (B, [I_1, ..., I_m]); B[k-1][i] = 1 iff i is in I_k. For
    ell = 1 every row is a single S_{m-k}, so B is a permutation matrix.
    """
    _check_shape(m, ell)
    sets = [f_index_set(m, ell, k) for k in range(1, m + 1)]
    rows = []
    for s in sets:
        row = [0] * m
        for i in s:
            if i >= m:
                raise AssertionError(f"index set {s} escapes 0..{m - 1}")
            row[i] = 1
        rows.append(row)
    return ExactMatrix.from_rows(rows), sets


def parity_permuted_columns(m):
    """Column order (as S-indices) with even indices first, then odd.

    This is the witness permutation under which every row of the
    consecutive-ones matrix B has its ones contiguous.
    """
    return [i for i in range(m) if i % 2 == 0] + [i for i in range(m) if i % 2]


def has_consecutive_ones(b):
    """True iff each row of B has contiguous ones after the parity permutation."""
    order = parity_permuted_columns(b.cols)
    pos = {col: p for p, col in enumerate(order)}
    for r in range(b.rows):
        placed = sorted(pos[j] for j in range(b.cols) if b[r, j])
        if placed and placed[-1] - placed[0] != len(placed) - 1:
            return False
    return True
