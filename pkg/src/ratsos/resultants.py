"""Sylvester resultants with polynomial coefficients.

``resultant`` eliminates the auxiliary variable t from two polynomials in t
whose coefficients are multivariate :class:`Poly`; for a monic minimal
polynomial this equals the norm of the second argument, which is how the
number-field norm forms are produced.  The determinant is expanded exactly
by memoized minor expansion (no division needed -- works over any
commutative ring), which is fine at desk scale.
"""

from fractions import Fraction
from typing import Sequence

from .errors import ZeroPolynomial
from .poly import Poly, UniPoly


def det_ring(rows: list[list], zero):
    """Determinant over a commutative ring via memoized Laplace expansion.

    Entries need ``+``, ``*``, unary ``-`` and truthiness (zero is falsy).
    Exponential in the matrix size; intended for small elimination matrices.
    """
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix is not square")
    if n == 0:
        raise ValueError("empty matrix")
    memo: dict[frozenset, object] = {}

    def minor(remaining: tuple[int, ...]):
        key = frozenset(remaining)
        if key in memo:
            return memo[key]
        col = n - len(remaining)
        if len(remaining) == 1:
            val = rows[remaining[0]][col]
            memo[key] = val
            return val
        acc = zero
        for pos, r in enumerate(remaining):
            entry = rows[r][col]
            if not entry:
                continue
            sub = minor(remaining[:pos] + remaining[pos + 1 :])
            term = entry * sub
            acc = acc + term if pos % 2 == 0 else acc + (-term)
        memo[key] = acc
        return acc

    return minor(tuple(range(n)))


def sylvester_matrix(a: Sequence, b: Sequence, zero) -> list[list]:
    """Sylvester matrix of coefficient sequences (ascending in t).

    ``a`` has degree m, ``b`` degree n; the matrix is (m+n) x (m+n) with n
    shifted rows of ``a`` then m shifted rows of ``b``, coefficients written
    descending along each row.
    """
    m = len(a) - 1
    n = len(b) - 1
    if m < 0 or not a[-1]:
        raise ZeroPolynomial("first polynomial is zero or has zero leading coefficient")
    if n < 0 or not b[-1]:
        raise ZeroPolynomial("second polynomial is zero or has zero leading coefficient")
    size = m + n
    rows = [[zero] * size for _ in range(size)]
    a_desc = list(reversed(list(a)))
    b_desc = list(reversed(list(b)))
    for i in range(n):
        for j, c in enumerate(a_desc):
            rows[i][i + j] = c
    for i in range(m):
        for j, c in enumerate(b_desc):
            rows[n + i][i + j] = c
    return rows


def resultant(a: Sequence[Poly], b: Sequence[Poly]) -> Poly:
    """Res_t(A, B) for A, B polynomials in t with Poly coefficients.

    Equals the determinant of the Sylvester matrix, expanded exactly.  When
    A is monic with constant (rational) coefficients this is the product of
    B evaluated at all roots of A, i.e. the norm form.
    """
    a = list(a)
    b = list(b)
    while a and not a[-1]:
        a.pop()
    while b and not b[-1]:
        b.pop()
    if not a or not b:
        raise ZeroPolynomial("resultant of the zero polynomial")
    nvars = next((c.nvars for c in a + b if isinstance(c, Poly)), None)
    if nvars is None:
        raise ValueError("need at least one Poly coefficient; use resultant_rational otherwise")
    a = [c if isinstance(c, Poly) else Poly.constant(nvars, c) for c in a]
    b = [c if isinstance(c, Poly) else Poly.constant(nvars, c) for c in b]
    zero = Poly.zero(nvars)
    m, n = len(a) - 1, len(b) - 1
    if m == 0 and n == 0:
        return Poly.constant(nvars, 1)
    if m == 0:
        return a[0] ** n
    if n == 0:
        return b[0] ** m
    return det_ring(sylvester_matrix(a, b, zero), zero)


def resultant_rational(a: UniPoly, b: UniPoly) -> Fraction:
    """Resultant of two rational univariate polynomials."""
    if not a or not b:
        raise ZeroPolynomial("resultant of the zero polynomial")
    m, n = a.degree(), b.degree()
    if m == 0 and n == 0:
        return Fraction(1)
    if m == 0:
        return a.coeffs[0] ** n
    if n == 0:
        return b.coeffs[0] ** m
    return det_ring(sylvester_matrix(a.coeffs, b.coeffs, Fraction(0)), Fraction(0))


def discriminant(p: UniPoly) -> Fraction:
    """disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p)."""
    n = p.degree()
    if n < 1:
        raise ZeroPolynomial("discriminant needs degree >= 1")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant_rational(p, p.derivative()) / p.lead()
