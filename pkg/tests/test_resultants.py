import random
from fractions import Fraction

import mpmath
import pytest

from ratsos.errors import ZeroPolynomial
from ratsos.poly import Poly, UniPoly
from ratsos.resultants import det_ring, discriminant, resultant, resultant_rational

x1 = Poly.variable(1, 3)
x2 = Poly.variable(2, 3)
x3 = Poly.variable(3, 3)
one = Poly.constant(3, 1)


def test_det_ring_rational():
    assert det_ring([[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]], Fraction(0)) == -2
    assert det_ring([[Fraction(2)]], Fraction(0)) == 2


def test_gaussian_integer_norm():
    # Res_t(t^2+1, x1 + t*x2) = x1^2 + x2^2
    r = resultant([one, Poly.zero(3), one], [x1, x2])
    assert r == x1**2 + x2**2


def test_canonical_quadratic_norm():
    # Res_t(t^2+1, x1 + t*x2 + t^2*x3) expanded by hand over t = +-i:
    # (x1 - x3 + i x2)(x1 - x3 - i x2) = (x1 - x3)^2 + x2^2
    r = resultant([one, Poly.zero(3), one], [x1, x2, x3])
    assert r == (x1 - x3) ** 2 + x2**2


def test_constant_second_argument():
    # Res_t(m, c) = c^deg(m)
    m = [one, one, Poly.zero(3), Poly.zero(3), one]  # t^4 + t + 1
    c = Poly.constant(3, Fraction(5, 3))
    assert resultant(m, [c]) == Poly.constant(3, Fraction(5, 3) ** 4)


def test_zero_polynomial_rejected():
    with pytest.raises(ZeroPolynomial):
        resultant([], [x1])
    with pytest.raises(ZeroPolynomial):
        resultant([one], [Poly.zero(3)])


def test_swap_sign_property():
    rng = random.Random(41)
    for _ in range(25):
        da = rng.randint(1, 3)
        db = rng.randint(1, 3)

        def rand_coeffs(d):
            cs = []
            for _ in range(d + 1):
                terms = {}
                for _ in range(rng.randint(0, 2)):
                    exp = tuple(rng.randint(0, 1) for _ in range(3))
                    terms[exp] = Fraction(rng.randint(-3, 3))
                cs.append(Poly(3, terms))
            if not cs[-1]:
                cs[-1] = Poly.constant(3, rng.randint(1, 3))
            return cs

        a = rand_coeffs(da)
        b = rand_coeffs(db)
        rab = resultant(a, b)
        rba = resultant(b, a)
        sign = -1 if (da * db) % 2 else 1
        assert rab == sign * rba


def test_quartic_norm_vs_numeric_product():
    # Res_t(t^4+t+1, x1 + t x2 + t^2 x3): cross-check against the numeric
    # product of the four conjugate linear forms at 256 bits.
    m = [one, one, Poly.zero(3), Poly.zero(3), one]
    f = resultant(m, [x1, x2, x3])
    assert f.is_homogeneous() and f.degree() == 4
    with mpmath.workprec(256):
        roots = mpmath.polyroots([1, 0, 0, 1, 1], maxsteps=200, extraprec=128)
        prod_terms = {(0, 0, 0): mpmath.mpc(1)}
        for alpha in roots:
            lin = {(1, 0, 0): mpmath.mpc(1), (0, 1, 0): alpha, (0, 0, 1): alpha**2}
            new = {}
            for e1, c1 in prod_terms.items():
                for e2, c2 in lin.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    new[e] = new.get(e, mpmath.mpc(0)) + c1 * c2
            prod_terms = new
        residual = mpmath.mpf(0)
        for e in set(prod_terms) | set(f.terms):
            approx = prod_terms.get(e, mpmath.mpc(0))
            exact = complex(f.coefficient(e))
            residual = max(residual, abs(approx - exact))
        assert residual < mpmath.mpf(10) ** -20


def test_resultant_rational_and_discriminant():
    # disc(t^4 + t + 1) = 229; quadratic discriminant sanity on randoms.
    assert discriminant(UniPoly.parse("t^4+t+1")) == 229
    assert discriminant(UniPoly.parse("t^2+1")) == -4
    rng = random.Random(43)
    for _ in range(20):
        p = Fraction(rng.randint(-6, 6))
        q = Fraction(rng.randint(-6, 6))
        m = UniPoly([q, p, Fraction(1)])
        assert discriminant(m) == p * p - 4 * q
    r = resultant_rational(UniPoly.parse("t^2-1"), UniPoly.parse("t-2"))
    assert r == 3  # (2^2 - 1) with monic first argument
