#!/usr/bin/env python3
"""
Laurent polynomials and symbolic reconstruction of the standard network
"""
from fractions import Fraction

import pytest

from hexanet.core.exceptions import BoundExceeded, NonGeneric, NonLaurent, PrerequisiteMissing
from hexanet.services.laurent import (
    HERMITIAN_LETTERS_4,
    LaurentPoly,
    catalan_report,
    face_name,
    format_laurent,
    hermitian_rules,
    hermitian_symbolic_reconstruct,
    letter_names,
    parse_laurent,
    position_names,
    symbolic_reconstruct,
    vertex_name,
)
from hexanet.services.minors import FaceConvention
from hexanet.services.networks import matrix_to_network
from hexanet.services.scalars import Ring, Scalar


def point_of(net):
    point = {vertex_name(v): x for v, x in net.vertices.items() if v}
    point.update({face_name(i, j): x for (i, j), x in net.faces.items()})
    return point


def test_polynomial_arithmetic():
    a, b = LaurentPoly.var("a"), LaurentPoly.var("b")

    assert (a + b) * (a - b) == a * a - b * b
    assert len((a + b) * (a + b)) == 3
    assert (a * b) / b == a
    assert len((a + b) / a) == 2
    assert (a - a).is_zero()
    assert LaurentPoly.const(2) * a == a + a
    with pytest.raises(NonLaurent):
        a / (a + b)


def test_format_and_parse():
    cases = [
        "a*c/b + h/b",
        "a*j/(b*d)",
        "(3/2)*x",
        "-a^2/(c^3)",
        "u/b + x~*y~/b",
        "1",
    ]
    for text in cases:
        assert format_laurent(parse_laurent(text)) == text, text
    assert format_laurent(LaurentPoly()) == "0"


def test_evaluate():
    p = parse_laurent("a*c/b + h/b")
    assert p.evaluate({"a": 2, "b": 4, "c": 3, "h": 6}) == Scalar.rat(3)
    with pytest.raises(PrerequisiteMissing):
        p.evaluate({"a": 2, "b": 4})
    with pytest.raises(NonGeneric):
        p.evaluate({"a": 2, "b": 0, "c": 3, "h": 6})

    q = parse_laurent("x*x~")
    assert q.evaluate({"x": Scalar.gauss(1, 2)}, Ring.GAUSS) == Scalar.gauss(5)


def test_conjugate_and_rename():
    p = parse_laurent("f12*v1/f13")
    assert p.conjugate() == parse_laurent("f12~*v1/f13~")
    assert p.conjugate().conjugate() == p
    assert parse_laurent("f12~*v2").rename(HERMITIAN_LETTERS_4) == parse_laurent("x~*b")


def test_variable_names():
    assert position_names(3) == ["v1", "f12", "v2", "f23", "v3", "v12", "f13", "v23", "v123"]
    letters = letter_names(4)
    assert [letters[name] for name in ("v1", "f12", "v2", "v12", "v123", "v1234")] == ["a", "b", "c", "h", "m", "p"]


def test_lower_symbolic_matrix():
    matrix = symbolic_reconstruct(4, FaceConvention.LOWER).renamed(letter_names(4))

    assert matrix.term_counts() == [[1, 2, 6, 22], [1, 1, 2, 6], [2, 1, 1, 2], [6, 2, 1, 1]]
    assert matrix.entry(1, 1) == parse_laurent("a")
    assert matrix.entry(1, 2) == parse_laurent("a*c/b + h/b")
    assert matrix.entry(2, 1) == parse_laurent("b")
    assert matrix.entry(3, 1) == parse_laurent("b*d/c + i/c")
    assert parse_laurent("a*j/(b*d)") in matrix.entry(1, 3).monomials()
    for row in matrix.rows:
        for entry in row:
            assert all(c == 1 for c in entry.coefficients())


def test_symbolic_evaluation_matches_numeric(generator):
    for n in (4, 5):
        symbolic = symbolic_reconstruct(n, FaceConvention.LOWER)
        for _ in range(3):
            m = generator.generic_matrix(n)
            point = point_of(matrix_to_network(m, convention=FaceConvention.LOWER))
            assert symbolic.evaluate(point) == m.rows()


def test_odd_symbolic_matrix_evaluates(generator):
    symbolic = symbolic_reconstruct(4, FaceConvention.ODD)
    m = generator.generic_matrix(4, Ring.GAUSS)
    assert symbolic.evaluate(point_of(matrix_to_network(m)), Ring.GAUSS) == m.rows()


def test_symbolic_bound():
    with pytest.raises(BoundExceeded):
        symbolic_reconstruct(9)


def test_hermitian_rules():
    assert hermitian_rules(4) == {("f23", "f23~"): parse_laurent("v23 + v2*v3")}
    assert set(hermitian_rules(5)) == {("f23", "f23~"), ("f34", "f34~"), ("f24", "f24~")}


def test_hermitian_symbolic_matrix():
    matrix = hermitian_symbolic_reconstruct(4).renamed(HERMITIAN_LETTERS_4)

    assert matrix.entry(1, 1) == parse_laurent("a")
    cases = [
        {"entry": (1, 2), "polynomial": "x~"},
        {"entry": (2, 1), "polynomial": "x"},
        {"entry": (3, 4), "polynomial": "z~"},
        {"entry": (1, 3), "polynomial": "x~*y~/b + u/b"},
        {"entry": (3, 1), "polynomial": "x*y/b + u~/b"},
        {"entry": (2, 4), "polynomial": "y~*z~/c + v/c"},
        {"entry": (4, 2), "polynomial": "y*z/c + v~/c"},
        {"entry": (1, 4), "polynomial": "u*v*y/(b*c*f) + u*z~/(b*c) + v*x~/(b*c) + x~*y~*z~/(b*c) + w~/f"},
        {"entry": (4, 1), "polynomial": "u~*v~*y~/(b*c*f) + u~*z/(b*c) + v~*x/(b*c) + x*y*z/(b*c) + w/f"},
    ]
    for case in cases:
        assert matrix.entry(*case["entry"]) == parse_laurent(case["polynomial"]), case["entry"]
    assert matrix.term_counts()[0] == [1, 1, 2, 5]
    assert matrix.entry(1, 4).variables() == {"u", "v", "y", "z~", "x~", "w~", "b", "c", "f"}
    for i in range(1, 5):
        for j in range(1, 5):
            assert matrix.entry(j, i) == matrix.entry(i, j).conjugate(lambda name: name in "abcdf")
    for row in matrix.rows:
        for entry in row:
            for powers in entry.denominators():
                assert set(powers) <= {"b", "c", "f"}


def test_hermitian_symbolic_matches_numeric(generator):
    symbolic = hermitian_symbolic_reconstruct(4)
    m = generator.generic_hermitian(4)
    net = matrix_to_network(m)
    point = point_of(net)
    assert symbolic.evaluate(point, Ring.GAUSS) == m.rows()


def test_catalan_report():
    report = catalan_report((4,))
    assert list(report.columns) == ["n", "entry", "terms", "catalan", "matches"]
    assert list(report["catalan"]) == [1, 1, 2, 5]
    assert list(report["terms"])[:3] == [1, 1, 2]


def test_catalan_report_order_five():
    report = catalan_report((5,))
    assert list(report["terms"]) == [1, 1, 2, 5, 14]
    assert report["matches"].all()


def test_coefficients():
    p = parse_laurent("(1/3)*a - 2*b")
    assert p.coefficients() == [Fraction(1, 3), Fraction(-2)]
    assert format_laurent(p) == "(1/3)*a - 2*b"
