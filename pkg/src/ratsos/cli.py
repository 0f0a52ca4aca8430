"""Command-line surface.

Exit codes: 0 = certified/success, 1 = refuted/negative verdict,
2 = inconclusive, 3 = input error.  A NotQSos certificate is a *success*
of the obstruction method (exit 0); negative verdicts about the inputs
(alpha(f) != 0, an indefinite Gram matrix) map to exit 1.  Reports embed
every intermediate exact value so they can be re-verified independently.
"""

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import boundary as bd
from . import gram as gr
from . import numfield as nf
from .errors import (
    DegreeTooSmall,
    EqualPoints,
    NotPsd,
    NotQuadraticallyIndependent,
    NoSolution,
    RatsosError,
    SpansDiffer,
)
from .linalg import SymMatrix, psd_check
from .permgroup import (
    DEFAULT_ENUM_BOUND,
    GroupDesc,
    Perm,
    char_number,
    classify,
    classify_catalog,
    load_bundled_catalog,
    parse_catalog,
    parse_generators,
)
from .poly import Poly, UniPoly, parse_rational

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INCONCLUSIVE = 2
EXIT_INPUT = 3


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    report: str


def _parse_linform(text: str) -> tuple[UniPoly, ...]:
    chunks = [c.strip() for c in text.split(";")]
    if not chunks or not all(chunks):
        raise RatsosError(f"linear form needs ';'-separated entries, got {text!r}")
    return tuple(UniPoly.parse(c, var="t") for c in chunks)


def _load_catalog(source: str):
    path = Path(source)
    if path.is_file():
        return parse_catalog(path.read_text())
    if source in ("degree4.cat", "degree6.cat", "degree8.cat"):
        return load_bundled_catalog(int(source[6]))
    raise FileNotFoundError(f"no catalog file or bundled catalog named {source!r}")


def _read_poly_file(source: str, nvars: int | None = None) -> Poly:
    path = Path(source)
    text = path.read_text() if path.is_file() else source
    return Poly.parse(text.strip(), nvars=nvars)


def _parse_gram_file(text: str) -> gr.GramPoint:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines or not lines[0].startswith("gram"):
        raise RatsosError("gram file must start with 'gram n=<vars> d=<half-degree>'")
    header = dict(part.split("=") for part in lines[0].split()[1:])
    nvars, d = int(header["n"]), int(header["d"])
    rows = [[parse_rational(v) for v in ln.split()] for ln in lines[1:]]
    return gr.GramPoint(nvars, d, SymMatrix.from_rows(rows))


def format_gram(point: gr.GramPoint) -> str:
    head = f"gram n={point.nvars} d={point.half_degree}"
    body = "\n".join(" ".join(str(v) for v in row) for row in point.matrix.rows)
    basis = " ".join("*".join(f"x{i+1}^{e}" if e > 1 else f"x{i+1}" for i, e in enumerate(exp) if e) or "1"
                     for exp in point.basis())
    return f"{head}\n# basis: {basis}\n{body}"


# ---------------------------------------------------------------------------
# groups


def cmd_groups(args) -> CommandResult:
    if args.subcommand == "table":
        catalog = _load_catalog(args.catalog)
        table = classify_catalog(catalog, bound=args.enum_bound)
        if table.failures:
            return CommandResult(EXIT_INCONCLUSIVE, table.render())
        if args.json:
            payload = {
                "degree": table.degree,
                "row": list(table.row()),
                "columns": {
                    "fpf": list(table.labels_fpf),
                    "two_transitive": list(table.labels_two_transitive),
                    "star_not_2transitive": list(table.labels_star_not_2trans),
                    "starstar_not_star": list(table.labels_starstar_not_star),
                },
            }
            return CommandResult(EXIT_OK, json.dumps(payload, indent=2))
        row = table.row()
        lines = ["  ".join(str(v) for v in row), table.render()]
        return CommandResult(EXIT_OK, "\n".join(lines))

    if args.subcommand == "classify":
        group = GroupDesc.from_text(args.gens, args.degree, label=args.label or "")
        analysis = classify(group, bound=args.enum_bound)
        lines = [
            f"group on {group.degree} points, order {analysis.order}",
            f"transitive: {analysis.is_transitive}",
            f"2-transitive: {analysis.is_two_transitive}",
            f"fpf involution classes: {len(analysis.fpf_classes)}",
        ]
        for info in analysis.fpf_classes:
            lines.append(
                f"  t = {info.rep}: c = {info.c}, (*) {'yes' if info.satisfies_star else 'no'},"
                f" (**) {'yes' if info.satisfies_starstar else 'no'}"
            )
        return CommandResult(EXIT_OK, "\n".join(lines))

    if args.subcommand == "char-number":
        gens = parse_generators(args.gens, args.degree)
        degree = args.degree or max(g.degree for g in gens)
        group = GroupDesc(degree, tuple(g if g.degree == degree else _pad(g, degree) for g in gens))
        inv = Perm.parse(args.inv, degree)
        c = char_number(group, inv, bound=args.enum_bound)
        star = c == degree - 1
        starstar = 2 * c > degree
        report = f"c={c}, (*) {'yes' if star else 'no'}, (**) {'yes' if starstar else 'no'}"
        return CommandResult(EXIT_OK, report)

    raise AssertionError(f"unknown groups subcommand {args.subcommand}")


def _pad(p: Perm, degree: int) -> Perm:
    return Perm(tuple(p.images) + tuple(range(p.degree, degree)))


# ---------------------------------------------------------------------------
# field


def cmd_field(args) -> CommandResult:
    m = UniPoly.parse(args.minpoly, var="t")
    lin = _parse_linform(args.linform) if getattr(args, "linform", None) else None

    if args.subcommand == "normform":
        f = nf.norm_form(m, lin)
        return CommandResult(EXIT_OK, str(f))

    if args.subcommand == "galois":
        qg = nf.quartic_galois(m, precision_bits=args.precision_bits)
        gens = ",".join(str(g) for g in qg.group.generators)
        lines = [
            f"label: {qg.label}",
            f"generators on root indices: {gens}",
            f"resolvent cubic: {qg.resolvent}",
            f"discriminant: {qg.discriminant}",
            f"conjugation tau: {qg.roots.pairing}",
        ]
        return CommandResult(EXIT_OK, "\n".join(lines))

    if args.subcommand == "obstruct":
        galois = None
        if args.galois_gens:
            gens = parse_generators(args.galois_gens, m.degree())
            rs = nf.isolate_roots(m, args.precision_bits)
            galois = nf.GaloisData(
                group=GroupDesc(m.degree(), gens, args.galois_label or "user"),
                tau=rs.pairing,
                label=args.galois_label or "user",
            )
        cert = nf.obstruction_check(
            m,
            lin,
            galois=galois,
            precision_bits=args.precision_bits,
            enum_bound=args.enum_bound,
        )
        if cert.conclusion is nf.Conclusion.NOT_Q_SOS:
            return CommandResult(EXIT_OK, cert.render())
        return CommandResult(EXIT_INCONCLUSIVE, cert.render())

    raise AssertionError(f"unknown field subcommand {args.subcommand}")


# ---------------------------------------------------------------------------
# boundary


def _boundary_chain(points: bd.NinePointConfig, tup: bd.WeightTuple) -> tuple[int, str]:
    lines = []
    u = bd.cb_relation(points)
    lines.append(f"Cayley-Bacharach relation u = ({', '.join(str(v) for v in u)})")
    verdict = bd.check_tuple(u, tup.a)
    lines.append(f"tuple check: {verdict.reason}")
    if not verdict.ok:
        return EXIT_NEGATIVE, "\n".join(lines)
    alpha = bd.functional_from_tuple(points, tup)
    lines.append(
        "functional alpha on the graded-lex sextic basis: ("
        + ", ".join(str(c) for c in alpha.coeffs)
        + ")"
    )
    b = bd.moment_matrix(alpha)
    pv = psd_check(b)
    if not pv.is_psd:
        lines.append("moment matrix: NOT PSD")
        return EXIT_NEGATIVE, "\n".join(lines)
    lines.append(f"moment matrix: PSD, rank {pv.rank}")
    kernel = bd.kernel_cubics(b)
    lines.append(f"kernel cubics ({len(kernel)}): " + "; ".join(str(p) for p in kernel))
    if len(kernel) != 3:
        lines.append("kernel dimension != 3: construction inconclusive")
        return EXIT_INCONCLUSIVE, "\n".join(lines)
    f = bd.assemble_sextic(kernel)
    lines.append(f"assembled sextic f = {f}")
    hf = bd.hilbert_function(kernel)
    lines.append(f"Hilbert function of A/(U): {hf}")
    positivity = bd.strict_positivity_cert(f, kernel)
    lines.append(f"strict positivity: {positivity.value}")
    cert = bd.boundary_cert(f, alpha)
    lines.append(cert.render())
    if not cert.certified:
        return EXIT_NEGATIVE, "\n".join(lines)
    uc = bd.uniqueness_cert(f, alpha)
    lines.append(uc.render())
    if not uc.certified:
        return EXIT_INCONCLUSIVE, "\n".join(lines)
    if positivity is not bd.PositivityVerdict.STRICTLY_POSITIVE:
        return EXIT_INCONCLUSIVE, "\n".join(lines)
    return EXIT_OK, "\n".join(lines)


def cmd_boundary(args) -> CommandResult:
    if args.subcommand == "demo":
        points = bd.demo_points()
        tup = bd.demo_tuple()
        code, report = _boundary_chain(points, tup)
        if code == EXIT_OK:
            expected = {
                "u magnitudes": [1, 1, 1, 1, 2, 2, 2, 2, 4],
                "rank": 7,
                "hilbert": (1, 3, 6, 7, 6, 3, 1, 0),
            }
            u = bd.cb_relation(points)
            checks_ok = (
                [abs(v) for v in u] == expected["u magnitudes"]
                and bd.hilbert_function(list(bd.demo_kernel_cubics())) == expected["hilbert"]
            )
            if not checks_ok:
                return CommandResult(EXIT_INCONCLUSIVE, report + "\nexpected-value check FAILED")
            report += "\nall stages match their expected values"
        return CommandResult(code, report)

    if args.subcommand == "construct":
        try:
            points = bd.NinePointConfig.parse(Path(args.points).read_text())
            tup = bd.WeightTuple.parse(args.tuple)
        except (OSError, ValueError, RatsosError) as exc:
            return CommandResult(EXIT_INPUT, f"input error: {exc}")
        code, report = _boundary_chain(points, tup)
        if args.save_functional and code != EXIT_INPUT:
            alpha = bd.functional_from_tuple(points, tup)
            Path(args.save_functional).write_text(alpha.to_text())
            report += f"\nfunctional written to {args.save_functional}"
        return CommandResult(code, report)

    if args.subcommand == "certify":
        try:
            f = _read_poly_file(args.form, nvars=3)
            alpha = bd.LinearFunctional.parse(Path(args.functional).read_text())
            witness = None
            if args.witness:
                witness = _parse_gram_file(Path(args.witness).read_text())
        except (OSError, ValueError, RatsosError) as exc:
            return CommandResult(EXIT_INPUT, f"input error: {exc}")
        cert = bd.boundary_cert(f, alpha, witness=witness)
        if not cert.certified:
            return CommandResult(EXIT_NEGATIVE, cert.render())
        uc = bd.uniqueness_cert(f, alpha)
        report = cert.render() + "\n" + uc.render()
        return CommandResult(EXIT_OK if uc.certified else EXIT_INCONCLUSIVE, report)

    raise AssertionError(f"unknown boundary subcommand {args.subcommand}")


# ---------------------------------------------------------------------------
# gram


def _parse_poly_list(text: str, nvars: int | None = None) -> list[Poly]:
    return [Poly.parse(c.strip(), nvars=nvars) for c in text.split(";") if c.strip()]


def cmd_gram(args) -> CommandResult:
    if args.subcommand == "verify":
        f = _read_poly_file(args.form)
        squares = _parse_poly_list(args.squares, nvars=f.nvars)
        rep = gr.SosRep(tuple(squares))
        point = gr.gram_from_squares(rep)
        ok = gr.is_gram_point(point, f)
        if not ok:
            return CommandResult(
                EXIT_NEGATIVE, f"squares expand to {rep.polynomial()}, not the given form"
            )
        dim, extreme = gr.face_dimension(rep)
        span = gr.span_basis(point)
        lines = [
            "valid Gram point",
            f"span dimension: {len(span)}",
            f"span basis: {'; '.join(str(p) for p in span)}",
            f"supporting face dimension: {dim}",
            f"extreme point: {'yes' if extreme else 'no'}",
            format_gram(point),
        ]
        return CommandResult(EXIT_OK, "\n".join(lines))

    if args.subcommand == "extract-q":
        f = _read_poly_file(args.form)
        basis = _parse_poly_list(args.basis, nvars=f.nvars)
        try:
            witness = gr.extract_qsos(f, basis)
        except NotPsd as exc:
            return CommandResult(EXIT_NEGATIVE, f"NotPsd: {exc}")
        except NoSolution as exc:
            return CommandResult(EXIT_NEGATIVE, f"NoSolution: {exc}")
        except NotQuadraticallyIndependent as exc:
            return CommandResult(EXIT_INCONCLUSIVE, f"NotQuadraticallyIndependent: {exc}")
        lines = [
            f"f = {witness.render()}",
            "weighted form: f = "
            + " + ".join(f"{w}*({p})^2" for w, p in zip(witness.weights, witness.polys)),
            "reconstruction verified exactly",
        ]
        return CommandResult(EXIT_OK, "\n".join(lines))

    if args.subcommand == "shrink":
        try:
            g1 = _parse_gram_file(Path(args.g1).read_text())
            g2 = _parse_gram_file(Path(args.g2).read_text())
        except (OSError, ValueError, RatsosError) as exc:
            return CommandResult(EXIT_INPUT, f"input error: {exc}")
        try:
            res = gr.shrink_span(g1, g2)
        except (SpansDiffer, EqualPoints) as exc:
            return CommandResult(EXIT_NEGATIVE, f"{type(exc).__name__}: {exc}")
        if res.deferred:
            lo, hi = res.s_interval
            return CommandResult(
                EXIT_INCONCLUSIVE,
                f"DeferredKernel: boundary parameter s* is irrational, isolated in ({lo}, {hi}]",
            )
        lines = [
            f"boundary parameter s* = {res.s_exact}",
            f"rank drops {res.rank_before} -> {res.rank_after}",
            format_gram(res.boundary),
        ]
        return CommandResult(EXIT_OK, "\n".join(lines))

    raise AssertionError(f"unknown gram subcommand {args.subcommand}")


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ratsos",
        description="Exact rational sums-of-squares certificates: Galois "
        "obstructions, Gram spectrahedra, boundary sextics.",
        epilog="Exit codes: 0 certified/success, 1 refuted, 2 inconclusive, 3 input error. "
        "A NotQSos certificate is a success of the method and exits 0.",
    )
    parser.add_argument("--precision-bits", type=int, default=128, help="working precision (default 128)")
    parser.add_argument("--enum-bound", type=int, default=DEFAULT_ENUM_BOUND,
                        help="group enumeration bound (default 10^6)")
    sub = parser.add_subparsers(dest="command", required=True)

    groups = sub.add_parser("groups", help="permutation group classification")
    gsub = groups.add_subparsers(dest="subcommand", required=True)
    table = gsub.add_parser("table", help="classification table row for a catalog")
    table.add_argument("--catalog", required=True, help="catalog file or bundled name (degree6.cat)")
    table.add_argument("--json", action="store_true", help="emit structured records")
    cls = gsub.add_parser("classify", help="analyze one group")
    cls.add_argument("--gens", required=True)
    cls.add_argument("--degree", type=int)
    cls.add_argument("--label")
    cn = gsub.add_parser("char-number", help="characteristic number of an involution")
    cn.add_argument("--gens", required=True)
    cn.add_argument("--inv", required=True)
    cn.add_argument("--degree", type=int)

    field = sub.add_parser("field", help="number-field pipeline")
    fsub = field.add_subparsers(dest="subcommand", required=True)
    nform = fsub.add_parser("normform", help="norm form of a linear form")
    nform.add_argument("--minpoly", required=True)
    nform.add_argument("--linform", help="';'-separated coefficients in t, e.g. \"1; t; t^2\"")
    gal = fsub.add_parser("galois", help="quartic Galois group")
    gal.add_argument("--minpoly", required=True)
    obs = fsub.add_parser("obstruct", help="run the obstruction certificate")
    obs.add_argument("--minpoly", required=True)
    obs.add_argument("--linform")
    obs.add_argument("--galois-gens", help="generators of the Galois action (degree > 4)")
    obs.add_argument("--galois-label")

    boundary = sub.add_parser("boundary", help="nine-point boundary constructions")
    bsub = boundary.add_subparsers(dest="subcommand", required=True)
    bsub.add_parser("demo", help="run the bundled nine-point example end to end")
    con = bsub.add_parser("construct", help="run the chain on points and a weight tuple")
    con.add_argument("--points", required=True, help="file with 9 lines of p/q,p/q,p/q")
    con.add_argument("--tuple", required=True, help="nine comma-separated rationals")
    con.add_argument("--save-functional", help="write the functional to this file")
    cert = bsub.add_parser("certify", help="boundary + uniqueness certificates for (f, alpha)")
    cert.add_argument("--form", required=True)
    cert.add_argument("--functional", required=True)
    cert.add_argument("--witness", help="optional Gram matrix file")

    gram = sub.add_parser("gram", help="Gram spectrahedron operations")
    grsub = gram.add_subparsers(dest="subcommand", required=True)
    ver = grsub.add_parser("verify", help="verify a square list as a Gram point")
    ver.add_argument("--form", required=True)
    ver.add_argument("--squares", required=True, help="';'-separated polynomials")
    ext = grsub.add_parser("extract-q", help="rational SOS extraction on a basis")
    ext.add_argument("--form", required=True)
    ext.add_argument("--basis", required=True, help="';'-separated polynomials")
    shr = grsub.add_parser("shrink", help="walk two Gram points to a smaller span")
    shr.add_argument("--g1", required=True, help="gram matrix file")
    shr.add_argument("--g2", required=True, help="gram matrix file")

    return parser


DISPATCH = {
    "groups": cmd_groups,
    "field": cmd_field,
    "boundary": cmd_boundary,
    "gram": cmd_gram,
}


def run(argv=None) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage; remap to the input-error code
        raise SystemExit(EXIT_INPUT if exc.code else 0)
    try:
        return DISPATCH[args.command](args)
    except (DegreeTooSmall,) as exc:
        return CommandResult(EXIT_INPUT, f"{type(exc).__name__}: {exc}")
    except FileNotFoundError as exc:
        return CommandResult(EXIT_INPUT, f"input error: {exc}")
    except RatsosError as exc:
        return CommandResult(EXIT_INPUT, f"{type(exc).__name__}: {exc}")


def main(argv=None):
    result = run(argv)
    print(result.report)
    sys.exit(result.exit_code)


if __name__ == "__main__":
    main()
