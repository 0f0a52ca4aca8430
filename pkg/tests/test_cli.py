import subprocess
import sys

import pytest

from ratsos.boundary import demo_points, demo_tuple, functional_from_tuple
from ratsos.cli import EXIT_INCONCLUSIVE, EXIT_INPUT, EXIT_NEGATIVE, EXIT_OK, run
from ratsos.poly import Poly


def test_groups_table_degree4():
    res = run(["groups", "table", "--catalog", "degree4.cat"])
    assert res.exit_code == EXIT_OK
    assert res.report.splitlines()[0] == "4  5  2  0  0"


def test_groups_table_json():
    res = run(["groups", "table", "--catalog", "degree6.cat", "--json"])
    assert res.exit_code == EXIT_OK
    import json

    payload = json.loads(res.report)
    assert payload["row"] == [6, 11, 2, 2, 0]
    assert sorted(payload["columns"]["star_not_2transitive"]) == ["6T11", "6T8"]


def test_groups_char_number():
    res = run(["groups", "char-number", "--gens", "(1 2 3 4),(1 3)", "--inv", "(1 2)(3 4)"])
    assert res.exit_code == EXIT_OK
    assert res.report == "c=2, (*) no, (**) no"


def test_groups_char_number_not_involution():
    res = run(["groups", "char-number", "--gens", "(1 2 3 4),(1 3)", "--inv", "(1 2 3)"])
    assert res.exit_code == EXIT_INPUT
    assert "NotInvolution" in res.report


def test_groups_classify():
    res = run(["groups", "classify", "--gens", "(1 2 3 4),(1 3)"])
    assert res.exit_code == EXIT_OK
    assert "2-transitive: False" in res.report
    assert "c = 2" in res.report and "c = 1" in res.report


def test_field_obstruct_s4():
    res = run(["field", "obstruct", "--minpoly", "t^4+t+1"])
    assert res.exit_code == EXIT_OK
    assert "conclusion: NotQSos" in res.report
    assert "c = 3" in res.report


def test_field_obstruct_d4():
    res = run(["field", "obstruct", "--minpoly", "t^4+2"])
    assert res.exit_code == EXIT_INCONCLUSIVE
    assert "conclusion: NoObstruction" in res.report


def test_field_obstruct_degree_too_small():
    res = run(["field", "obstruct", "--minpoly", "t^2+1"])
    assert res.exit_code == EXIT_INPUT


def test_field_normform():
    res = run(["field", "normform", "--minpoly", "t^2+1", "--linform", "1; t; t^2"])
    assert res.exit_code == EXIT_OK
    assert Poly.parse(res.report) == Poly.parse("x1^2 - 2*x1*x3 + x2^2 + x3^2")


def test_field_galois():
    res = run(["field", "galois", "--minpoly", "t^4+2"])
    assert res.exit_code == EXIT_OK
    assert "label: D4" in res.report


def test_boundary_demo():
    res = run(["boundary", "demo"])
    assert res.exit_code == EXIT_OK
    assert "all stages match their expected values" in res.report
    assert "rank 7" in res.report


def test_boundary_construct(tmp_path):
    pts = tmp_path / "pts.txt"
    pts.write_text("\n".join(",".join(str(c) for c in p) for p in demo_points().points))
    out = tmp_path / "alpha.txt"
    res = run(
        [
            "boundary",
            "construct",
            "--points",
            str(pts),
            "--tuple",
            "1,1,1,1,4,4,4,4,-2",
            "--save-functional",
            str(out),
        ]
    )
    assert res.exit_code == EXIT_OK
    assert out.exists()


def test_boundary_construct_bad_tuple(tmp_path):
    pts = tmp_path / "pts.txt"
    pts.write_text("\n".join(",".join(str(c) for c in p) for p in demo_points().points))
    res = run(["boundary", "construct", "--points", str(pts), "--tuple", "1,1,1,1,4,4,4,4,-3"])
    assert res.exit_code == EXIT_NEGATIVE


def test_boundary_certify_rejects_interior(tmp_path):
    alpha = functional_from_tuple(demo_points(), demo_tuple())
    afile = tmp_path / "alpha.txt"
    afile.write_text(alpha.to_text())
    ffile = tmp_path / "f.txt"
    ffile.write_text("x1^6 + x2^6 + x3^6")
    res = run(["boundary", "certify", "--form", str(ffile), "--functional", str(afile)])
    assert res.exit_code == EXIT_NEGATIVE
    assert "alpha(f) = 42" in res.report


def test_boundary_certify_demo_form(tmp_path):
    alpha = functional_from_tuple(demo_points(), demo_tuple())
    afile = tmp_path / "alpha.txt"
    afile.write_text(alpha.to_text())
    ffile = tmp_path / "f.txt"
    ffile.write_text(
        "x1^6 + x2^6 + 7*x1^4*x3^2 + 7*x2^4*x3^2 + 18*x1^2*x2^2*x3^2"
        " - 23*x1^2*x3^4 - 23*x2^2*x3^4 + 16*x3^6"
    )
    res = run(["boundary", "certify", "--form", str(ffile), "--functional", str(afile)])
    assert res.exit_code == EXIT_OK
    assert "certified singleton" in res.report


def test_gram_extract_q():
    res = run(["gram", "extract-q", "--form", "x1^4+x2^4", "--basis", "x1^2;x2^2"])
    assert res.exit_code == EXIT_OK
    assert "(x1^2)^2 + (x2^2)^2" in res.report


def test_gram_extract_q_not_psd():
    res = run(["gram", "extract-q", "--form", "x1^4+x2^4-3*x1^2*x2^2", "--basis", "x1^2;x2^2"])
    assert res.exit_code == EXIT_NEGATIVE
    assert "NotPsd" in res.report


def test_gram_verify_demo_triple():
    form = (
        "x1^6 + x2^6 + 7*x1^4*x3^2 + 7*x2^4*x3^2 + 18*x1^2*x2^2*x3^2"
        " - 23*x1^2*x3^4 - 23*x2^2*x3^4 + 16*x3^6"
    )
    squares = "x1^3 - x1*x3^2; x2^3 - x2*x3^2; 3*x1^2*x3 + 3*x2^2*x3 - 4*x3^3"
    res = run(["gram", "verify", "--form", form, "--squares", squares])
    assert res.exit_code == EXIT_OK
    assert "valid Gram point" in res.report
    assert "extreme point: yes" in res.report


def test_gram_shrink(tmp_path):
    from ratsos.cli import format_gram
    from ratsos.gram import GramPoint
    from ratsos.linalg import SymMatrix

    def family(a):
        from fractions import Fraction

        a = Fraction(a)
        return GramPoint(2, 2, SymMatrix.from_rows([[1, 0, a], [0, 2 - 2 * a, 0], [a, 0, 1]]))

    f1 = tmp_path / "g1.txt"
    f2 = tmp_path / "g2.txt"
    f1.write_text(format_gram(family(0)))
    f2.write_text(format_gram(family("1/2")))
    res = run(["gram", "shrink", "--g1", str(f1), "--g2", str(f2)])
    assert res.exit_code == EXIT_OK
    assert "s* = 2" in res.report
    assert "rank drops 3 -> 1" in res.report


def test_gram_shrink_spans_differ(tmp_path):
    from ratsos.cli import format_gram
    from ratsos.gram import SosRep, gram_from_squares

    x1 = Poly.variable(1, 3)
    x2 = Poly.variable(2, 3)
    x3 = Poly.variable(3, 3)
    ga = gram_from_squares(SosRep((x1**3, x2**3, x3**3)))
    gb = gram_from_squares(SosRep((x1**3 - 2 * x1 * x2**2, 2 * x1**2 * x2 - x2**3, x3**3)))
    f1 = tmp_path / "g1.txt"
    f2 = tmp_path / "g2.txt"
    f1.write_text(format_gram(ga))
    f2.write_text(format_gram(gb))
    res = run(["gram", "shrink", "--g1", str(f1), "--g2", str(f2)])
    assert res.exit_code == EXIT_NEGATIVE
    assert "SpansDiffer" in res.report


def test_reports_deterministic():
    a = run(["boundary", "demo"])
    b = run(["boundary", "demo"])
    assert a.report == b.report and a.exit_code == b.exit_code


def test_round_trip_printed_polynomials():
    res = run(["field", "normform", "--minpoly", "t^4+t+1"])
    assert res.exit_code == EXIT_OK
    p = Poly.parse(res.report)
    assert str(p) == res.report


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ratsos", "groups", "table", "--catalog", "degree4.cat"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "4  5  2  0  0"


def test_bad_usage_exit_code():
    with pytest.raises(SystemExit) as exc:
        run(["groups"])
    assert exc.value.code == EXIT_INPUT
