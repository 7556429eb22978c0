"""Ring-generic dense matrices and exact determinant/charpoly kernels.

Two determinant routes are deliberately kept separate:

* Bareiss (``det_bareiss``): fraction-free elimination, needs exact
  integer division, used over Z -- the fast path for every integer
  determinant in the sweeps.
* Berkowitz (``charpoly_berkowitz`` / ``det_berkowitz``): division-free,
  valid over any commutative ring whose elements interoperate with
  Python ints, used for characteristic polynomials and Z[t] work.
"""

from . import kernels
from .polys import IntPolynomial


class ExactMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match dimensions")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows_data):
        rows = len(rows_data)
        cols = len(rows_data[0]) if rows else 0
        flat = []
        for r in rows_data:
            if len(r) != cols:
                raise ValueError("ragged rows")
            flat.extend(r)
        return cls(rows, cols, flat)

    @classmethod
    def identity(cls, n):
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row_lists(self):
        c = self.cols
        return [list(self.entries[i * c : (i + 1) * c]) for i in range(self.rows)]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        a, b = self.row_lists(), other.row_lists()
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = 0
                for k in range(self.cols):
                    acc = acc + a[i][k] * b[k][j]
                out.append(acc)
        return ExactMatrix(self.rows, other.cols, out)

    def __repr__(self):
        return f"ExactMatrix.from_rows({self.row_lists()!r})"


def kronecker(a, b):
    """Kronecker product A (x) B."""
    out = []
    for i in range(a.rows):
        for p in range(b.rows):
            for j in range(a.cols):
                for q in range(b.cols):
                    out.append(a[i, j] * b[p, q])
    return ExactMatrix(a.rows * b.rows, a.cols * b.cols, out)


def _require_square(m):
    if m.rows != m.cols:
        raise ValueError("matrix must be square")


def det_bareiss(m):
    """Exact integer determinant (entries must be ints)."""
    _require_square(m)
    return kernels.det_bareiss(m.row_lists())


def berkowitz_coeffs(rows):
    """Charpoly coefficients (constant first) over a generic ring.

    Entries need +, -, * among themselves and with ints. For all-int
    matrices the selected kernel backend is used instead.
    """
    n = len(rows)
    if n == 0:
        return [1]
    if all(isinstance(x, int) for row in rows for x in row):
        return kernels.charpoly(rows)
    coeffs = [1, -rows[n - 1][n - 1]]
    for r in range(n - 2, -1, -1):
        k = n - r - 1
        row = rows[r]
        t = [1, -row[r]]
        v = [rows[i][r] for i in range(r + 1, n)]
        for step in range(k):
            acc = 0
            for j in range(k):
                acc = acc + row[r + 1 + j] * v[j]
            t.append(-acc)
            if step < k - 1:
                w = []
                for i in range(k):
                    bi = rows[r + 1 + i]
                    s = 0
                    for j in range(k):
                        s = s + bi[r + 1 + j] * v[j]
                    w.append(s)
                v = w
        new = []
        for i in range(k + 2):
            acc = 0
            for j in range(min(i, k) + 1):
                acc = acc + t[i - j] * coeffs[j]
            new.append(acc)
        coeffs = new
    coeffs.reverse()
    return coeffs


def charpoly_berkowitz(m):
    """det(xI - M), division-free.

    Returns an IntPolynomial for integer matrices; for matrices over
    IntPolynomial entries, returns the coefficient list (constant first)
    whose elements live in the entry ring.
    """
    _require_square(m)
    coeffs = berkowitz_coeffs(m.row_lists())
    if all(isinstance(c, int) for c in coeffs):
        return IntPolynomial(coeffs)
    return coeffs


def det_berkowitz(m):
    """Division-free determinant via the Berkowitz constant term."""
    _require_square(m)
    coeffs = berkowitz_coeffs(m.row_lists())
    c0 = coeffs[0]
    return -c0 if (m.rows % 2) else c0


def walk_matrix(m):
    """[e, Ae, ..., A^(n-1)e] by iterated matrix-vector products."""
    _require_square(m)
    n = m.rows
    rows = m.row_lists()
    v = [1] * n
    cols = [v]
    for _ in range(n - 1):
        v = [sum(rows[i][j] * v[j] for j in range(n)) for i in range(n)]
        cols.append(v)
    return ExactMatrix(n, n, [cols[k][i] for i in range(n) for k in range(n)])


def adjacency_matrix(g):
    return ExactMatrix.from_rows(g.adjacency_rows())


def walk_det(g):
    """det W(G), exact."""
    return det_bareiss(walk_matrix(adjacency_matrix(g)))


def adjacency_det(g):
    """det A(G), exact."""
    return kernels.det_bareiss(g.adjacency_rows())


def graph_charpoly(g):
    """phi(G; x) = det(xI - A(G)) as an IntPolynomial."""
    return IntPolynomial(kernels.charpoly(g.adjacency_rows()))
