"""Number-field pipeline: certified root isolation, the complex-conjugation
involution, norm forms, general position, quartic Galois groups, and the
Galois-theoretic obstruction certificate for rational sums of squares.

The obstruction: for a totally imaginary field of degree 2d >= 4 whose
Galois action together with complex conjugation tau has characteristic
number c > d (condition (**)), the norm form of a sufficiently general
linear form is a real sum of two squares but not a rational sum of squares.
Every check feeding that conclusion here is either exact (Sturm counts,
gcds, Vandermonde reasoning) or interval-certified.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import mpmath

from .errors import (
    DegreeTooSmall,
    GaloisDataMissing,
    NotMonic,
    NotSquarefree,
    NotTotallyImaginary,
    PrecisionExhausted,
    Reducible,
    ZeroPolynomial,
)
from .errors import OrderExceeded
from .intervals import Box, Interval, det3_box, eval_unipoly_box
from .permgroup import GroupDesc, Perm, char_number, enumerate_group
from .poly import Poly, UniPoly
from .resultants import discriminant, resultant
from .sturm import count_real_roots, rational_roots

DEFAULT_PRECISION_BITS = 128
PRECISION_CAP_BITS = 1024


def canonical_linear_form() -> tuple[UniPoly, UniPoly, UniPoly]:
    """Coefficients (1, alpha, alpha^2) of the default l = x1 + a x2 + a^2 x3."""
    return (UniPoly([1]), UniPoly([0, 1]), UniPoly([0, 0, 1]))


# ---------------------------------------------------------------------------
# certified root isolation


@dataclass(frozen=True)
class RootSystem:
    """Certified complex roots: disjoint rational boxes, one root each.

    ``pairing`` is the complex-conjugation permutation on box indices (real
    roots are its fixed points); when the polynomial is totally imaginary it
    is a fixed-point-free involution.  ``approx`` carries high-precision
    approximations aligned with the boxes (not part of the certificate).
    """

    boxes: tuple[Box, ...]
    pairing: Perm
    totally_imaginary: bool
    precision_bits: int
    approx: tuple = ()

    @property
    def degree(self) -> int:
        return len(self.boxes)


def _mpf_to_fraction(x) -> Fraction:
    """Exact rational value of an mpmath float (dyadic, so always exact)."""
    p, q = mpmath.libmp.to_rational(mpmath.mpf(x)._mpf_)
    return Fraction(p, q)


def _eval_exact_sq(coeffs: list[Fraction], re: Fraction, im: Fraction) -> Fraction:
    """|p(re + i*im)|^2, exactly."""
    a, b = Fraction(0), Fraction(0)  # accumulated real and imaginary parts
    for c in reversed(coeffs):
        a, b = a * re - b * im + c, a * im + b * re
    return a * a + b * b


def _verified_upper_root(value: Fraction, k: int) -> Fraction:
    """A rational B with B^k >= value, via dyadic bracketing (value > 0)."""
    e = value.numerator.bit_length() - value.denominator.bit_length() + 1
    b = Fraction(2) ** -(-e // k)
    assert b**k >= value
    for _ in range(8):  # sharpen; each halving is exactly verified
        half = b / 2
        if half**k >= value:
            b = half
        else:
            break
    return b


def _candidate_radius(m: UniPoly, re: Fraction, im: Fraction) -> Fraction:
    """Rational radius so the disc around (re, im) surely contains a root.

    Uses two exact a-posteriori bounds on the distance to the nearest root:
    min_i |z - r_i| <= (|m(z)|/|lc|)^(1/n) and <= n |m(z)/m'(z)|.
    """
    n = m.degree()
    coeffs = list(m.coeffs)
    fz_sq = _eval_exact_sq(coeffs, re, im)
    if fz_sq == 0:
        return Fraction(0)
    lc_sq = m.lead() ** 2
    b1 = _verified_upper_root(fz_sq / lc_sq, 2 * n)
    dcoeffs = list(m.derivative().coeffs)
    dfz_sq = _eval_exact_sq(dcoeffs, re, im)
    if dfz_sq > 0:
        b2 = _verified_upper_root(Fraction(n * n) * fz_sq / dfz_sq, 2)
        return min(b1, b2)
    return b1


def isolate_roots(m: UniPoly, precision_bits: int = DEFAULT_PRECISION_BITS) -> RootSystem:
    """Isolate all complex roots of a squarefree polynomial in disjoint boxes.

    Certification is by counting: each box provably contains at least one
    root (exact a-posteriori bound) and the boxes are pairwise disjoint, so
    each contains exactly one of the deg(m) roots.  Boxes symmetric about
    the real axis contain the real roots (their count is cross-checked
    against the exact Sturm count); the conjugation pairing is certified by
    mirror overlap.  Precision doubles until everything separates.
    """
    if not m or m.degree() < 1:
        raise ZeroPolynomial("need a nonconstant polynomial")
    if not m.is_squarefree():
        raise NotSquarefree("polynomial has repeated roots")
    n_real = count_real_roots(m)
    n = m.degree()
    prec = max(precision_bits, 53)
    while prec <= PRECISION_CAP_BITS:
        result = _try_isolate(m, n_real, prec)
        if result is not None:
            boxes, pairing_images, approx = result
            return RootSystem(
                boxes=tuple(boxes),
                pairing=Perm(pairing_images),
                totally_imaginary=(n_real == 0),
                precision_bits=prec,
                approx=tuple(approx),
            )
        prec *= 2
    raise PrecisionExhausted(f"root isolation failed at {PRECISION_CAP_BITS} bits")


def _try_isolate(m: UniPoly, n_real: int, prec: int):
    n = m.degree()
    with mpmath.workprec(prec):
        coeffs_desc = [mpmath.mpf(c.numerator) / mpmath.mpf(c.denominator) for c in reversed(m.coeffs)]
        try:
            roots = mpmath.polyroots(coeffs_desc, maxsteps=200, extraprec=prec)
        except mpmath.libmp.NoConvergence:
            return None
        data = []
        for z in roots:
            re = _mpf_to_fraction(mpmath.re(z))
            im = _mpf_to_fraction(mpmath.im(z))
            rad = _candidate_radius(m, re, im)
            data.append((re, im, rad, z))
    # the n_real approximations closest to the axis are the real candidates
    order = sorted(range(n), key=lambda i: (abs(data[i][1]), i))
    real_idx = set(order[:n_real])
    boxes = []
    for i, (re, im, rad, _) in enumerate(data):
        if i in real_idx:
            # symmetric about the axis and still containing the disc
            boxes.append(Box(Interval.around(re, rad), Interval.around(0, rad + abs(im))))
        else:
            boxes.append(Box.around(re, im, rad))
    # disjointness (strict: touching edges force a refinement)
    for i in range(n):
        for j in range(i + 1, n):
            if boxes[i].overlaps(boxes[j]):
                return None
    # non-real boxes must avoid the axis
    for i in range(n):
        if i in real_idx:
            continue
        if not (boxes[i].strictly_above_axis() or boxes[i].strictly_below_axis()):
            return None
    # conjugation pairing via mirror overlap (exactly one partner each)
    pairing = [None] * n
    for i in range(n):
        if i in real_idx:
            pairing[i] = i
            continue
        mirror = boxes[i].conjugate()
        partners = [j for j in range(n) if boxes[j].overlaps(mirror)]
        if len(partners) != 1 or partners[0] == i:
            return None
        pairing[i] = partners[0]
    for i in range(n):
        if pairing[pairing[i]] != i:
            return None
    # deterministic ordering by box corner
    perm = sorted(range(n), key=lambda i: (boxes[i].re.lo, boxes[i].im.lo))
    inv = [0] * n
    for new, old in enumerate(perm):
        inv[old] = new
    boxes_sorted = [boxes[old] for old in perm]
    approx_sorted = [data[old][3] for old in perm]
    pairing_sorted = [inv[pairing[old]] for old in perm]
    return boxes_sorted, pairing_sorted, approx_sorted


# ---------------------------------------------------------------------------
# norm forms


def _linear_form_coeff_polys(lin: tuple[UniPoly, ...]) -> list[Poly]:
    """Coefficients of l(t; x) = sum_j lin_j(t) x_j as a polynomial in t."""
    nvars = len(lin)
    deg_t = max((c.degree() for c in lin if c), default=-1)
    if deg_t < 0:
        raise ZeroPolynomial("linear form is identically zero")
    out = []
    for k in range(deg_t + 1):
        terms = {}
        for j, c in enumerate(lin):
            v = c[k]
            if v:
                exp = tuple(1 if i == j else 0 for i in range(nvars))
                terms[exp] = v
        out.append(Poly(nvars, terms))
    return out


def norm_form(m: UniPoly, lin: tuple[UniPoly, ...] | None = None) -> Poly:
    """The norm of l = sum lin_j(alpha) x_j down to the rationals.

    Computed as Res_t(m(t), l(t; x)); for monic squarefree m this is the
    product of l over all conjugates of alpha, a form of degree deg(m) with
    rational coefficients.
    """
    if not m or m.degree() < 1:
        raise ZeroPolynomial("need a nonconstant minimal polynomial")
    if not m.is_monic():
        raise NotMonic("minimal polynomial must be monic")
    if not m.is_squarefree():
        raise NotSquarefree("minimal polynomial has repeated roots")
    if lin is None:
        lin = canonical_linear_form()
    b = _linear_form_coeff_polys(tuple(lin))
    a = [Poly.constant(len(lin), c) for c in m.coeffs]
    return resultant(a, b)


@dataclass(frozen=True)
class TwoSquareWitness:
    """Floating-point factorization f = g_re^2 + g_im^2 over the reals."""

    g_re: dict
    g_im: dict
    residual: float
    precision_bits: int


def real_sos2_witness(
    m: UniPoly,
    lin: tuple[UniPoly, ...] | None = None,
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> TwoSquareWitness:
    """Numeric two-squares decomposition of the norm form over the reals.

    g is the product of the conjugates of l at roots in the upper half
    plane; the residual is the largest coefficient error of
    f - (g_re^2 + g_im^2) against the exact norm form.
    """
    if count_real_roots(m) != 0:
        raise NotTotallyImaginary(f"{m} has {count_real_roots(m)} real roots")
    if lin is None:
        lin = canonical_linear_form()
    lin = tuple(lin)
    rs = isolate_roots(m, precision_bits)
    f = norm_form(m, lin)
    nvars = len(lin)
    with mpmath.workprec(rs.precision_bits):
        prod = {(0,) * nvars: mpmath.mpc(1)}
        for i, box in enumerate(rs.boxes):
            if not box.strictly_above_axis():
                continue
            alpha = rs.approx[i]
            lin_coeffs = {}
            for j, c in enumerate(lin):
                val = mpmath.mpc(0)
                for k in range(c.degree(), -1, -1):
                    val = val * alpha + mpmath.mpf(c[k].numerator) / mpmath.mpf(c[k].denominator)
                if val != 0:
                    exp = tuple(1 if t == j else 0 for t in range(nvars))
                    lin_coeffs[exp] = val
            new = {}
            for e1, c1 in prod.items():
                for e2, c2 in lin_coeffs.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    new[e] = new.get(e, mpmath.mpc(0)) + c1 * c2
            prod = new
        g_re = {e: float(mpmath.re(c)) for e, c in prod.items()}
        g_im = {e: float(mpmath.im(c)) for e, c in prod.items()}
        residual = mpmath.mpf(0)
        square = {}
        for parts in (mpmath.re, mpmath.im):
            for e1, c1 in prod.items():
                for e2, c2 in prod.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    square[e] = square.get(e, mpmath.mpf(0)) + parts(c1) * parts(c2)
        for e in set(square) | set(f.terms):
            exact = f.coefficient(e)
            got = square.get(e, mpmath.mpf(0))
            err = abs(got - mpmath.mpf(exact.numerator) / mpmath.mpf(exact.denominator))
            residual = max(residual, err)
    return TwoSquareWitness(g_re=g_re, g_im=g_im, residual=float(residual), precision_bits=rs.precision_bits)


# ---------------------------------------------------------------------------
# general position


class GeneralPosition(enum.Enum):
    EXACT_VANDERMONDE = "ExactVandermonde"
    NUMERIC_CERTIFIED = "NumericCertified"
    INCONCLUSIVE = "Inconclusive"


def general_position(
    m: UniPoly,
    lin: tuple[UniPoly, ...] | None = None,
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> GeneralPosition:
    """Certify that no three conjugates of l share a nontrivial complex zero.

    For the canonical l = x1 + a x2 + a^2 x3 the 3x3 coefficient minors are
    Vandermonde determinants in distinct roots, nonzero by squarefreeness:
    exact verdict.  Otherwise every triple determinant is evaluated in
    rational interval arithmetic, refining until all exclude zero.
    """
    if not m.is_squarefree():
        raise NotSquarefree("minimal polynomial has repeated roots")
    if lin is None:
        lin = canonical_linear_form()
    lin = tuple(lin)
    if len(lin) != 3:
        raise ValueError("general position applies to ternary linear forms")
    if lin == canonical_linear_form():
        return GeneralPosition.EXACT_VANDERMONDE
    if m.degree() < 3:
        # fewer than three conjugates: nothing to check
        return GeneralPosition.EXACT_VANDERMONDE
    prec = max(precision_bits, 53)
    while prec <= PRECISION_CAP_BITS:
        try:
            rs = isolate_roots(m, prec)
        except PrecisionExhausted:
            return GeneralPosition.INCONCLUSIVE
        rows = [[eval_unipoly_box(c.coeffs, box) for c in lin] for box in rs.boxes]
        all_ok = True
        for i, j, k in combinations(range(len(rows)), 3):
            det = det3_box([rows[i], rows[j], rows[k]])
            if not det.excludes_zero():
                all_ok = False
                break
        if all_ok:
            return GeneralPosition.NUMERIC_CERTIFIED
        prec *= 2
    return GeneralPosition.INCONCLUSIVE


# ---------------------------------------------------------------------------
# quartic Galois groups


@dataclass(frozen=True)
class GaloisData:
    """Galois action on root indices plus the conjugation involution."""

    group: GroupDesc
    tau: Perm
    label: str = ""


def _is_rational_square(x: Fraction) -> bool:
    if x < 0:
        return False
    from math import isqrt

    p, q = x.numerator, x.denominator
    rp, rq = isqrt(p), isqrt(q)
    return rp * rp == p and rq * rq == q


def _depress_quartic(m: UniPoly) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """(shift, p, q, r) with m(t) = (t + shift)^4 + p(...)... i.e. roots move by +shift."""
    a3, a2, a1, a0 = m[3], m[2], m[1], m[0]
    p = a2 - 3 * a3**2 / 8
    q = a1 - a3 * a2 / 2 + a3**3 / 8
    r = a0 - a3 * a1 / 4 + a3**2 * a2 / 16 - 3 * a3**4 / 256
    return a3 / 4, p, q, r


def _quartic_reducible(m: UniPoly, p: Fraction, q: Fraction, r: Fraction) -> bool:
    if rational_roots(m):
        return True
    resolvent = UniPoly([4 * p * r - q * q, -4 * r, -p, Fraction(1)])
    for y0 in rational_roots(resolvent):
        if q != 0:
            e1 = y0 - p
            if e1 != 0 and _is_rational_square(e1):
                return True
        else:
            if _is_rational_square(p * p - 4 * r):
                return True
            if _is_rational_square(r):
                from math import isqrt

                sr = Fraction(isqrt(r.numerator), isqrt(r.denominator))
                for b in (sr, -sr):
                    if _is_rational_square(2 * b - p):
                        return True
    return False


@dataclass(frozen=True)
class QuarticGalois:
    label: str
    group: GroupDesc
    roots: RootSystem
    resolvent: UniPoly
    discriminant: Fraction


def quartic_galois(m: UniPoly, precision_bits: int = DEFAULT_PRECISION_BITS) -> QuarticGalois:
    """Galois group of an irreducible quartic via the resolvent cubic.

    Returns the label (S4, A4, D4, C4, V4) together with generators acting
    on the root indices of the isolated root system; for the groups that
    stabilize a pairing, the pairing is identified against the rational
    resolvent root by interval arithmetic.
    """
    if m.degree() != 4:
        raise DegreeTooSmall("quartic Galois analysis needs degree exactly 4")
    m = m.monic()
    if not m.is_squarefree():
        raise Reducible("polynomial has repeated roots")
    _, p, q, r = _depress_quartic(m)
    if _quartic_reducible(m, p, q, r):
        raise Reducible(f"{m} has a proper rational factor")
    resolvent = UniPoly([4 * p * r - q * q, -4 * r, -p, Fraction(1)])
    disc = discriminant(m)
    roots = rational_roots(resolvent)
    rs = isolate_roots(m, precision_bits)
    if len(roots) == 0:
        label = "A4" if _is_rational_square(disc) else "S4"
        gens = {
            "S4": ("(1 2 3 4)", "(1 2)"),
            "A4": ("(1 2 3)", "(2 3 4)"),
        }[label]
        group = GroupDesc(4, tuple(Perm.parse(g, 4) for g in gens), label)
        return QuarticGalois(label, group, rs, resolvent, disc)
    if len(roots) == 3:
        group = GroupDesc(4, (Perm.parse("(1 2)(3 4)"), Perm.parse("(1 3)(2 4)")), "V4")
        return QuarticGalois("V4", group, rs, resolvent, disc)
    assert len(roots) == 1, "resolvent of a squarefree quartic cannot have 2 rational roots"
    y0 = roots[0]
    e1 = y0 - p
    e2 = y0 * y0 - 4 * r
    is_c4 = (e1 != 0 and _is_rational_square(e1 * disc)) or (e2 != 0 and _is_rational_square(e2 * disc))
    label = "C4" if is_c4 else "D4"
    pairing = _identify_pairing(m, rs, y0, precision_bits)
    (a, b), (c, d) = pairing
    if label == "D4":
        gens = (
            Perm.from_cycles([(a + 1, b + 1)], 4),
            Perm.from_cycles([(a + 1, c + 1), (b + 1, d + 1)], 4),
        )
    else:
        gens = (Perm.from_cycles([(a + 1, c + 1, b + 1, d + 1)], 4),)
    group = GroupDesc(4, gens, label)
    return QuarticGalois(label, group, rs, resolvent, disc)


def _identify_pairing(m: UniPoly, rs: RootSystem, y0: Fraction, precision_bits: int):
    """Which root pairing {{a,b},{c,d}} has b_a b_b + b_c b_d = y0 (depressed roots)."""
    shift, *_ = _depress_quartic(m)
    pairings = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))]
    prec = max(precision_bits, 53)
    current = rs
    while prec <= PRECISION_CAP_BITS:
        shift_box = Box.point(shift)
        depressed = [b + shift_box for b in current.boxes]
        hits = []
        for pairing in pairings:
            (a, b), (c, d) = pairing
            val = depressed[a] * depressed[b] + depressed[c] * depressed[d]
            if val.re.contains(y0) and val.im.contains_zero():
                hits.append(pairing)
        if len(hits) == 1:
            return hits[0]
        prec *= 2
        current = isolate_roots(m, prec)
    raise PrecisionExhausted("could not separate the resolvent pairings")


# ---------------------------------------------------------------------------
# the obstruction certificate


class Conclusion(enum.Enum):
    NOT_Q_SOS = "NotQSos"
    NO_OBSTRUCTION = "NoObstruction"


@dataclass(frozen=True)
class CheckRecord:
    name: str
    status: str  # "pass" | "fail" | "inconclusive"
    detail: str


@dataclass(frozen=True)
class ObstructionCert:
    """Machine-checkable outcome of the norm-form obstruction pipeline.

    ``conclusion`` is NOT_Q_SOS only when the totally-imaginary, squarefree
    and general-position checks all pass and c >= d + 1 (condition (**)).
    """

    minpoly: str
    degree: int
    d: int
    conclusion: Conclusion
    checks: tuple[CheckRecord, ...]
    c: int | None = None
    tau: str | None = None
    group_label: str | None = None
    group_order: int | None = None
    general_position_verdict: GeneralPosition | None = None
    membership_verified: bool | None = None
    precision_bits: int | None = None

    def render(self) -> str:
        lines = [
            "== obstruction certificate ==",
            f"minimal polynomial: {self.minpoly}",
            f"degree 2d = {self.degree}, d = {self.d}",
        ]
        if self.group_label:
            lines.append(f"Galois action: {self.group_label} (order {self.group_order})")
        if self.tau is not None:
            lines.append(f"conjugation tau = {self.tau}")
        if self.c is not None:
            lines.append(
                f"characteristic number c = {self.c}; "
                f"(*) requires {self.degree - 1}, (**) requires >= {self.d + 1}"
            )
        if self.membership_verified is not None:
            lines.append(f"tau membership in group: {'verified' if self.membership_verified else 'UNVERIFIED'}")
        if self.precision_bits is not None:
            lines.append(f"working precision: {self.precision_bits} bits")
        for rec in self.checks:
            lines.append(f"check {rec.name}: {rec.status} ({rec.detail})")
        lines.append(f"conclusion: {self.conclusion.value}")
        return "\n".join(lines)


def obstruction_check(
    m: UniPoly,
    lin: tuple[UniPoly, ...] | None = None,
    galois: GaloisData | None = None,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    enum_bound: int = 10**6,
) -> ObstructionCert:
    """Run the full norm-form obstruction pipeline.

    Degree-4 inputs derive their Galois data automatically; higher degrees
    require it as input.  The certificate is monotone: an inconclusive or
    failing check always yields NO_OBSTRUCTION with the check named.
    """
    if not m or m.degree() < 4:
        raise DegreeTooSmall(f"need degree 2d >= 4, got {m.degree() if m else 'zero polynomial'}")
    if lin is None:
        lin = canonical_linear_form()
    lin = tuple(lin)
    two_d = m.degree()
    d = two_d // 2
    checks: list[CheckRecord] = []

    def bail(conclusion=Conclusion.NO_OBSTRUCTION, **extra):
        return ObstructionCert(
            minpoly=str(m),
            degree=two_d,
            d=d,
            conclusion=conclusion,
            checks=tuple(checks),
            precision_bits=precision_bits,
            **extra,
        )

    if two_d % 2 == 1:
        checks.append(CheckRecord("even degree", "fail", f"degree {two_d} is odd"))
        return bail()
    if not m.is_monic():
        raise NotMonic("minimal polynomial must be monic")
    if not m.is_squarefree():
        checks.append(CheckRecord("squarefree", "fail", "gcd(m, m') is nonconstant"))
        return bail()
    checks.append(CheckRecord("squarefree", "pass", "gcd(m, m') constant"))

    n_real = count_real_roots(m)
    if n_real != 0:
        checks.append(CheckRecord("totally imaginary", "fail", f"Sturm count {n_real} real roots"))
        return bail()
    checks.append(CheckRecord("totally imaginary", "pass", "Sturm count 0, exact"))

    if galois is None:
        if two_d != 4:
            raise GaloisDataMissing("degree > 4 requires explicit Galois data")
        try:
            qg = quartic_galois(m, precision_bits)
        except Reducible as exc:
            checks.append(CheckRecord("irreducible", "fail", str(exc)))
            return bail()
        checks.append(CheckRecord("irreducible", "pass", "quartic screens"))
        group = qg.group
        rs = qg.roots
        tau = rs.pairing
        label = qg.label
    else:
        group = galois.group
        label = galois.label or group.label
        rs = isolate_roots(m, precision_bits)
        tau = galois.tau
        if not rs.pairing.is_fixed_point_free() or not rs.pairing.is_involution():
            checks.append(CheckRecord("conjugation", "fail", "root pairing not a fpf involution"))
            return bail()

    if not tau.is_involution() or not tau.is_fixed_point_free():
        checks.append(CheckRecord("tau fpf involution", "fail", str(tau)))
        return bail(tau=str(tau), group_label=label)
    checks.append(CheckRecord("tau fpf involution", "pass", str(tau)))

    membership_verified: bool | None
    order: int | None
    try:
        elements = enumerate_group(group, enum_bound)
        order = len(elements)
        membership_verified = tau in set(elements)
        if not membership_verified:
            checks.append(CheckRecord("tau in group", "fail", "tau not in the generated group"))
            return bail(tau=str(tau), group_label=label, group_order=order, membership_verified=False)
        checks.append(CheckRecord("tau in group", "pass", f"group order {order}"))
    except OrderExceeded:
        order = None
        membership_verified = False
        checks.append(
            CheckRecord("tau in group", "inconclusive", f"group not enumerable within {enum_bound}")
        )

    gp = general_position(m, lin, precision_bits)
    if gp is GeneralPosition.INCONCLUSIVE:
        checks.append(CheckRecord("general position", "inconclusive", "interval refinement capped"))
        return bail(
            tau=str(tau),
            group_label=label,
            group_order=order,
            general_position_verdict=gp,
            membership_verified=membership_verified,
        )
    checks.append(CheckRecord("general position", "pass", gp.value))

    c = char_number(group, tau, bound=enum_bound, check_membership=False)
    starstar = 2 * c > two_d
    detail = f"c = {c}, threshold d + 1 = {d + 1}"
    if starstar and membership_verified:
        checks.append(CheckRecord("condition (**)", "pass", detail))
        conclusion = Conclusion.NOT_Q_SOS
    elif starstar and not membership_verified:
        checks.append(CheckRecord("condition (**)", "inconclusive", detail + "; membership unverified"))
        conclusion = Conclusion.NO_OBSTRUCTION
    else:
        checks.append(CheckRecord("condition (**)", "fail", detail))
        conclusion = Conclusion.NO_OBSTRUCTION
    return ObstructionCert(
        minpoly=str(m),
        degree=two_d,
        d=d,
        conclusion=conclusion,
        checks=tuple(checks),
        c=c,
        tau=str(tau),
        group_label=label,
        group_order=order,
        general_position_verdict=gp,
        membership_verified=membership_verified,
        precision_bits=precision_bits,
    )
