import random
from math import gcd

import pytest
import sympy

from walkmat import (
    BivarPolynomial,
    IntPolynomial,
    det_bareiss,
    poly_gcd_degree,
    resultant_bivar,
    resultant_int,
    s_poly,
    sylvester,
    u_poly,
    verify_res1,
    verify_res2,
)
from walkmat.resultants import is_squarefree

X = sympy.Symbol("x")


def to_sympy(p):
    return sympy.Poly(list(reversed(p.coeffs)), X)


def rand_poly(rng, max_deg=4, lo=-5, hi=5):
    while True:
        p = IntPolynomial([rng.randint(lo, hi) for _ in range(rng.randint(1, max_deg + 1))])
        if not p.is_zero():
            return p


class TestSylvester:
    def test_example_3x3(self):
        m = sylvester(IntPolynomial((-1, 0, 1)), IntPolynomial((-2, 1)))
        assert m.rows == m.cols == 3
        assert det_bareiss(m) == 3  # (1-2)(-1-2)

    def test_rejects_constants(self):
        with pytest.raises(ValueError):
            sylvester(IntPolynomial((3,)), IntPolynomial((5,)))
        with pytest.raises(ValueError):
            sylvester(IntPolynomial(), IntPolynomial((0, 1)))


class TestResultantInt:
    def test_linear_pair(self):
        assert resultant_int(IntPolynomial((-3, 1)), IntPolynomial((-5, 1))) == -2

    def test_self_resultant_vanishes(self):
        rng = random.Random(1)
        for _ in range(10):
            p = rand_poly(rng)
            if p.degree >= 1:
                assert resultant_int(p, p) == 0

    def test_against_sympy(self):
        rng = random.Random(2024)
        for _ in range(50):
            f, g = rand_poly(rng), rand_poly(rng)
            if f.degree == 0 and g.degree == 0:
                continue
            expected = int(sympy.resultant(to_sympy(f), to_sympy(g)))
            # sympy's PRS route does not pin down the Sylvester sign
            assert abs(resultant_int(f, g)) == abs(expected)

    def test_swap_sign(self):
        rng = random.Random(77)
        for _ in range(25):
            f, g = rand_poly(rng), rand_poly(rng)
            if f.degree == 0 and g.degree == 0:
                continue
            n, m = max(f.degree, 0), max(g.degree, 0)
            assert resultant_int(f, g) == (-1) ** (n * m) * resultant_int(g, f)

    def test_constant_argument(self):
        assert resultant_int(IntPolynomial((3,)), IntPolynomial((-1, 0, 1))) == 9

    @pytest.mark.parametrize("m", range(1, 13))
    def test_u_discriminant_nonzero(self, m):
        # U_m has simple roots
        assert resultant_int(u_poly(m), u_poly(m).derivative()) != 0

    @pytest.mark.parametrize("m", range(2, 11))
    def test_s_resultant_is_unit_when_coprime(self, m):
        for ell in range(2, (m + 1) // 2 + 1):
            if gcd(ell, m + 1) != 1:
                continue
            r = resultant_int(s_poly(m), s_poly(ell - 1) * s_poly(m - ell))
            assert abs(r) == 1

    def test_argument_scaling(self):
        # Res(f(tx+s), g(tx+s)) = t^(nm) Res(f, g)
        rng = random.Random(8)
        for _ in range(15):
            f, g = rand_poly(rng, 4), rand_poly(rng, 4)
            if f.degree < 1 or g.degree < 1:
                continue
            t = rng.choice([-3, -2, -1, 1, 2, 3])
            s = rng.randint(-3, 3)
            lhs = resultant_int(f.compose_linear(t, s), g.compose_linear(t, s))
            assert lhs == t ** (f.degree * g.degree) * resultant_int(f, g)

    @pytest.mark.parametrize("m", range(2, 9))
    def test_scaling_bridge_s_to_u(self, m):
        for ell in range(2, (m + 1) // 2 + 1):
            if gcd(ell, m + 1) != 1:
                continue
            s_res = resultant_int(s_poly(m), s_poly(ell - 1) * s_poly(m - ell))
            u_res = resultant_int(u_poly(m), u_poly(ell - 1) * u_poly(m - ell))
            assert abs(s_res * 2 ** (m * (m - 1))) == abs(u_res)


class TestResultantBivar:
    def test_linear_hand_oracle(self):
        # Res_x(x - t, x - 2): the 2x2 Sylvester determinant is t - 2
        f = BivarPolynomial([IntPolynomial((0, -1)), IntPolynomial((1,))])
        g = BivarPolynomial([IntPolynomial((-2,)), IntPolynomial((1,))])
        assert resultant_bivar(f, g) == IntPolynomial((-2, 1))

    @pytest.mark.parametrize("m", range(2, 9))
    def test_shifted_resultant_constant_in_t(self, m):
        # Res(S_m + t*S_{ell-1}S_{m-ell}, S_{ell-1}S_{m-ell}) loses the t term
        for ell in range(2, (m + 1) // 2 + 1):
            if gcd(ell, m + 1) != 1:
                continue
            prod = s_poly(ell - 1) * s_poly(m - ell)
            sm = s_poly(m)
            width = m + 1
            f = BivarPolynomial(
                IntPolynomial((
                    sm.coeffs[k] if k < len(sm.coeffs) else 0,
                    prod.coeffs[k] if k < len(prod.coeffs) else 0,
                ))
                for k in range(width)
            )
            g = BivarPolynomial(prod.coeffs)
            res = resultant_bivar(f, g)
            assert res.degree == 0 and abs(res.coeffs[0]) == 1


class TestGcd:
    def test_self_gcd(self):
        p = IntPolynomial((1, 0, -2, 1))
        assert poly_gcd_degree(p, p) == p.degree

    def test_shared_factor(self):
        f = IntPolynomial((2, -3, 1))  # (x-1)(x-2)
        g = IntPolynomial((6, -5, 1))  # (x-2)(x-3)
        assert poly_gcd_degree(f, g) == 1

    @pytest.mark.parametrize("m", range(2, 11))
    def test_s_pair_coprime_iff(self, m):
        for ell in range(1, (m + 1) // 2 + 1):
            d = poly_gcd_degree(s_poly(m), s_poly(ell - 1) * s_poly(m - ell))
            assert (d == 0) == (gcd(ell, m + 1) == 1)

    def test_rejects_double_zero(self):
        with pytest.raises(ValueError):
            poly_gcd_degree(IntPolynomial(), IntPolynomial())

    def test_squarefree_matches_resultant(self):
        rng = random.Random(6)
        for _ in range(30):
            f = rand_poly(rng, 5)
            if f.degree < 1:
                continue
            assert is_squarefree(f) == (resultant_int(f, f.derivative()) != 0)


class TestVerifyRes1:
    def test_m4(self):
        r = verify_res1(4, 2)
        assert r.passed and r.rhs == str(2**12)

    def test_m6(self):
        r = verify_res1(6, 2)
        assert r.passed and r.rhs == str(2**30)

    def test_gcd_skip(self):
        r = verify_res1(5, 2)
        assert r.status == "skip"

    @pytest.mark.parametrize("m", range(2, 11))
    def test_sweep(self, m):
        for ell in range(2, (m + 1) // 2 + 1):
            r = verify_res1(m, ell)
            expected = "pass" if gcd(ell, m + 1) == 1 else "skip"
            assert r.status == expected


class TestVerifyRes2:
    def test_m4(self):
        r = verify_res2(4, 2)
        assert r.passed and "t^2" in r.lhs and str(2**12) in r.lhs

    def test_ell_one_skip(self):
        assert verify_res2(3, 1).status == "skip"

    def test_m6(self):
        r = verify_res2(6, 3)
        assert r.passed and "t^3" in r.lhs and str(2**30) in r.lhs

    def test_size_guard(self):
        with pytest.raises(ValueError):
            verify_res2(13, 3)
        assert verify_res2(13, 3, max_m=13).status == "pass"

    @pytest.mark.parametrize("m", range(2, 11))
    def test_sweep(self, m):
        for ell in range(2, (m + 1) // 2 + 1):
            r = verify_res2(m, ell)
            expected = "pass" if gcd(ell, m + 1) == 1 else "skip"
            assert r.status == expected
