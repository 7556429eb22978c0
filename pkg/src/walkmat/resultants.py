"""Sylvester-matrix resultants over Z and Z[t], and subresultant gcds.

The sign convention throughout is Res(f, g) = det(Sylvester(f, g)).
Checks against results stated only up to sign compare absolute values
and record the observed sign in the report.
"""

from math import gcd

from .cheb import u_poly
from .matrix import ExactMatrix, berkowitz_coeffs, det_bareiss
from .polys import IntPolynomial
from .reports import FAIL, PASS, SKIP, VerificationReport, fmt_value


class BivarPolynomial:
    """Polynomial in x whose coefficients are IntPolynomial values in t."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        lst = [
            c if isinstance(c, IntPolynomial) else IntPolynomial((c,))
            for c in coeffs
        ]
        while lst and lst[-1].is_zero():
            lst.pop()
        self.coeffs = tuple(lst)

    @property
    def degree(self):
        """Degree in x, -1 for zero."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, BivarPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        return f"BivarPolynomial({list(self.coeffs)!r})"


def _coeff_list(f):
    if isinstance(f, IntPolynomial):
        return list(f.coeffs)
    if isinstance(f, BivarPolynomial):
        return list(f.coeffs)
    return list(f)


def _sylvester_rows(fc, gc):
    """Rows of the Sylvester matrix for coefficient lists (constant first)."""
    n = len(fc) - 1
    m = len(gc) - 1
    size = n + m
    rows = []
    frev = fc[::-1]
    grev = gc[::-1]
    for i in range(m):
        rows.append([0] * i + frev + [0] * (m - 1 - i))
    for i in range(n):
        rows.append([0] * i + grev + [0] * (n - 1 - i))
    assert all(len(r) == size for r in rows)
    return rows


def sylvester(f, g):
    """Sylvester matrix of two nonzero polynomials (n + m >= 1)."""
    fc, gc = _coeff_list(f), _coeff_list(g)
    if not fc or not gc:
        raise ValueError("sylvester matrix needs nonzero polynomials")
    if len(fc) == 1 and len(gc) == 1:
        raise ValueError("resultant of two constants is degenerate")
    return ExactMatrix.from_rows(_sylvester_rows(fc, gc))


def _det_generic(rows):
    coeffs = berkowitz_coeffs(rows)
    c0 = coeffs[0]
    return -c0 if (len(rows) % 2) else c0


def _resultant_from_coeffs(fc, gc, det):
    if not fc or not gc:
        raise ValueError("resultant needs nonzero polynomials")
    if len(fc) == 1 and len(gc) == 1:
        raise ValueError("resultant of two constants is degenerate")
    if len(fc) == 1:
        return fc[0] ** (len(gc) - 1)
    if len(gc) == 1:
        return gc[0] ** (len(fc) - 1)
    return det(_sylvester_rows(fc, gc))


def resultant_int(f, g):
    """Res(f, g) over Z as the Bareiss determinant of the Sylvester matrix."""
    return _resultant_from_coeffs(list(f.coeffs), list(g.coeffs), det_bareiss_rows)


def det_bareiss_rows(rows):
    return det_bareiss(ExactMatrix.from_rows(rows))


def resultant_generic(fc, gc):
    """Resultant for coefficient lists over any ring mixing with ints.

    Uses the division-free Berkowitz determinant, so it is valid over
    Z[t] (and over Z[x] when eliminating another variable).
    """
    return _resultant_from_coeffs(list(fc), list(gc), _det_generic)


def resultant_bivar(f, g):
    """Res_x of two BivarPolynomial values, as an IntPolynomial in t."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant needs nonzero polynomials")
    res = resultant_generic(f.coeffs, g.coeffs)
    if isinstance(res, int):
        return IntPolynomial((res,))
    return res


def _pseudo_rem(f, g):
    dg = g.degree
    lg = g.leading
    r = f
    while not r.is_zero() and r.degree >= dg:
        r = r * lg - g.shift(r.degree - dg) * r.leading
    return r


def poly_gcd(f, g):
    """Primitive gcd over Z (subresultant-style primitive remainder sequence)."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) undefined")
    f, g = f.primitive_part(), g.primitive_part()
    if f.degree < g.degree:
        f, g = g, f
    while not g.is_zero():
        r = _pseudo_rem(f, g)
        f, g = g, r.primitive_part()
    return f


def poly_gcd_degree(f, g):
    """Degree of gcd(f, g) over the rationals."""
    return poly_gcd(f, g).degree


def is_squarefree(f):
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.degree == 0:
        return True
    return poly_gcd_degree(f, f.derivative()) == 0


def _res_hypotheses(check, m, ell):
    """Common gating for the two resultant identity checks."""
    if m < 2:
        raise ValueError("need m >= 2")
    if not (1 <= ell <= (m + 1) // 2):
        raise ValueError(f"root position {ell} not in 1..floor((m+1)/2) for m={m}")
    if ell < 2:
        return VerificationReport(
            check, SKIP, m=m, ell=ell, detail="hypothesis needs ell >= 2"
        )
    if gcd(ell, m + 1) != 1:
        return VerificationReport(
            check,
            SKIP,
            m=m,
            ell=ell,
            detail=f"gcd({ell}, {m + 1}) = {gcd(ell, m + 1)} != 1",
        )
    return None


def verify_res1(m, ell):
    """Check |Res(U_m, U_{ell-1} U_{m-ell})| = 2^(m(m-1))."""
    skip = _res_hypotheses("res1", m, ell)
    if skip is not None:
        return skip
    value = resultant_int(u_poly(m), u_poly(ell - 1) * u_poly(m - ell))
    expected = 2 ** (m * (m - 1))
    if abs(value) == expected:
        status, sign = PASS, (1 if value > 0 else -1)
    else:
        status, sign = FAIL, None
    return VerificationReport(
        "res1",
        status,
        lhs=fmt_value(value),
        rhs=fmt_value(expected),
        sign=sign,
        m=m,
        ell=ell,
    )


def _u_sum_poly(m, ell):
    """U_{ell-1} * sum_{k<m} U_k - U_m * sum_{k<ell-1} U_k, over Z."""
    first = IntPolynomial()
    for k in range(m):
        first = first + u_poly(k)
    second = IntPolynomial()
    for k in range(ell - 1):
        second = second + u_poly(k)
    return u_poly(ell - 1) * first - u_poly(m) * second


def verify_res2(m, ell, max_m=12):
    """Check Res_x(U_m + t U_{ell-1} U_{m-ell}, U-sum) = +-2^(m(m-1)) t^floor(m/2).

    Computed symbolically over Z[t]; the Sylvester matrix has order
    2m - 1, hence the size guard (override with max_m).
    """
    skip = _res_hypotheses("res2", m, ell)
    if skip is not None:
        return skip
    if m > max_m:
        raise ValueError(f"m={m} above the size guard {max_m}; pass max_m to raise it")
    prod = u_poly(ell - 1) * u_poly(m - ell)
    um = u_poly(m)
    width = max(len(um.coeffs), len(prod.coeffs))
    f = BivarPolynomial(
        IntPolynomial((
            um.coeffs[k] if k < len(um.coeffs) else 0,
            prod.coeffs[k] if k < len(prod.coeffs) else 0,
        ))
        for k in range(width)
    )
    g = BivarPolynomial(_u_sum_poly(m, ell).coeffs)
    res = resultant_bivar(f, g)
    mag = 2 ** (m * (m - 1))
    power = m // 2
    expected = IntPolynomial((0,) * power + (mag,))
    nonzero = [k for k, c in enumerate(res.coeffs) if c]
    ok = nonzero == [power] and abs(res.coeffs[power]) == mag
    sign = (1 if res.coeffs[power] > 0 else -1) if ok else None
    return VerificationReport(
        "res2",
        PASS if ok else FAIL,
        lhs=fmt_value(res, var="t"),
        rhs=fmt_value(expected, var="t"),
        sign=sign,
        m=m,
        ell=ell,
    )
