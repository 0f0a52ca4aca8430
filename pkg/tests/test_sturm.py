import random
from fractions import Fraction

import numpy as np
import pytest

from ratsos.errors import ZeroPolynomial
from ratsos.poly import UniPoly
from ratsos.sturm import (
    count_real_roots,
    isolate_real_roots,
    rational_roots,
    refine_interval,
    root_bound,
    sturm_chain,
)


def U(s):
    return UniPoly.parse(s)


def test_known_counts():
    assert count_real_roots(U("t^2+1")) == 0
    assert count_real_roots(U("t^4+t+1")) == 0
    assert count_real_roots(U("t^4-t-1")) == 2
    assert count_real_roots(U("t^3 - t")) == 3
    assert count_real_roots(U("t^2 - 2*t + 1")) == 1  # double root counted once
    assert count_real_roots(U("5")) == 0
    with pytest.raises(ZeroPolynomial):
        count_real_roots(UniPoly())


def test_isolation_basic():
    p = U("t^3 - t")  # roots -1, 0, 1
    ivs = isolate_real_roots(p)
    assert len(ivs) == 3
    for (a, b), root in zip(ivs, (-1, 0, 1)):
        assert a < root <= b
    # restricted window
    assert len(isolate_real_roots(p, lo=Fraction(1, 2), hi=Fraction(10))) == 1


def test_refine_interval():
    p = U("t^2 - 2")
    (iv,) = isolate_real_roots(p, lo=Fraction(0), hi=Fraction(2))
    a, b = refine_interval(p, iv, Fraction(1, 10**6))
    if a != b:
        assert b - a <= Fraction(1, 10**6)
    assert float(a) == pytest.approx(2**0.5, abs=1e-5)


def test_refine_hits_exact_rational_root():
    p = U("t^2 - 4")
    (iv,) = isolate_real_roots(p, lo=Fraction(0), hi=Fraction(5))
    a, b = refine_interval(p, iv, Fraction(1, 2**40))
    assert (a, b) == (2, 2) or (a < 2 <= b)


def test_rational_roots():
    assert rational_roots(U("t^2 - 4")) == [-2, 2]
    assert rational_roots(U("t^3 - 4*t - 1")) == []
    assert rational_roots(U("2*t^2 - t")) == [0, Fraction(1, 2)]
    assert rational_roots(U("t^3 - 8*t")) == [0]
    assert Fraction(-1, 3) in rational_roots(U("3*t^2 - 2*t - 1"))


def _oracle_real_root_count(p: UniPoly) -> int:
    """Interval-bisection oracle: exact sign changes on a numpy-guided grid."""
    q = p.squarefree_part()
    if q.degree() == 0:
        return 0
    coeffs = [float(c) for c in reversed(q.coeffs)]
    roots = np.roots(coeffs)
    sep = 1.0
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            d = abs(roots[i] - roots[j])
            if d > 1e-12:
                sep = min(sep, d)
    m = root_bound(q) + 1
    step = Fraction(min(sep / 4, 0.5)).limit_denominator(10**9)
    count = 0
    x = -m
    prev_sign = None
    while x <= m:
        v = q(x)
        if v == 0:
            count += 1
            prev_sign = None
        else:
            s = 1 if v > 0 else -1
            if prev_sign is not None and s != prev_sign:
                count += 1
            prev_sign = s
        x += step
    return count


def test_sturm_vs_bisection_oracle_200():
    rng = random.Random(31)
    for _ in range(200):
        deg = rng.randint(1, 8)
        coeffs = [rng.randint(-9, 9) for _ in range(deg)] + [rng.randint(1, 9)]
        p = UniPoly(coeffs)
        assert count_real_roots(p) == _oracle_real_root_count(p)


def test_isolation_intervals_are_isolating():
    rng = random.Random(37)
    for _ in range(40):
        deg = rng.randint(1, 6)
        coeffs = [rng.randint(-6, 6) for _ in range(deg)] + [rng.randint(1, 6)]
        p = UniPoly(coeffs)
        ivs = isolate_real_roots(p)
        assert len(ivs) == count_real_roots(p)
        chain = sturm_chain(p)
        from ratsos.sturm import count_roots_in

        for a, b in ivs:
            assert count_roots_in(chain, a, b) == 1
        for (a1, b1), (a2, b2) in zip(ivs, ivs[1:]):
            assert b1 <= a2
