from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from liext.extending import extract_datum
from liext.field import GF, QQ
from liext.io import (
    FormatError,
    format_algebra,
    format_datum,
    format_pair,
    format_terms,
    parse_algebra,
    parse_datum,
    parse_matrix,
    parse_pair,
    parse_scalars,
    parse_terms,
)
from liext.lie import CATALOG_NAMES, catalog

FIXTURES = Path(__file__).parent / "fixtures"


def test_terms():
    assert parse_terms("1*3 - 2/3*1", QQ, 3).tolist() == [QQ.scalar("-2/3"), 0, 1]
    assert parse_terms("2 + 3", QQ, 3).tolist() == [0, 1, 1]
    assert parse_terms("-1", GF(5), 2).tolist() == [4, 0]
    assert parse_terms("", QQ, 2).tolist() == [0, 0]
    assert parse_terms("1*1 + 1*1", QQ, 1).tolist() == [2]
    assert format_terms(QQ.array([-1, 0, "1/2"]), QQ) == "-1*1 + 1/2*3"
    assert format_terms(QQ.array([1, -2]), QQ) == "1*1 - 2*2"


@pytest.mark.parametrize("rhs,msg", [
    ("1*4", "out of range"),
    ("1*1 2*2", "missing"),
    ("x", "cannot parse"),
    ("1/0*1", "division by zero"),
])
def test_term_errors(rhs, msg):
    with pytest.raises(FormatError, match=msg) as info:
        parse_terms(rhs, QQ, 3, lineno=7)
    assert str(info.value).startswith("line 7: ")


@pytest.mark.parametrize("name", [n.replace(":n", ":2") for n in CATALOG_NAMES])
@pytest.mark.parametrize("field", [QQ, GF(7)])
def test_algebra_roundtrip(name, field):
    L = catalog(name, field)
    assert parse_algebra(format_algebra(L)) == L


def test_fixture_matches_catalog():
    L = parse_algebra((FIXTURES / "perfect5.lie").read_text())
    assert L == catalog("perfect5")


@pytest.mark.parametrize("text,line,msg", [
    ("dim 2\n[1,2] = 1\n[1,2] = 2\n", 3, "already given on line 2"),
    ("dim 2\n[2,1] = 1\n", 2, "i < j"),
    ("dim 2\n[1,3] = 1\n", 2, "out of range"),
    ("algebra a\nfield F4\ndim 2\n", 2, "prime"),
    ("dim x\n", 1, "bad dimension"),
    ("dim 2\nfoo\n", 2, "unrecognised"),
])
def test_algebra_errors_name_the_line(text, line, msg):
    with pytest.raises(FormatError, match=msg) as info:
        parse_algebra(text)
    assert info.value.line == line


def test_missing_dim():
    with pytest.raises(FormatError, match="dim"):
        parse_algebra("algebra x\n")


def test_comments_and_default_field():
    L = parse_algebra("# nothing\ndim 2  # plane\n[1,2] = 2  # e2\n", GF(3))
    assert L.field == GF(3) and L.sc[0, 1].tolist() == [0, 1]


def test_datum_roundtrip():
    om = extract_datum(catalog("perfect5"), 3, QQ.array([[1, 0, 0, "1/2", 0], [0, 1, 0, 0, -1], [0, 0, 1, 2, 0]]))
    assert parse_datum(format_datum(om)) == om
    om = parse_datum((FIXTURES / "heisenberg.datum").read_text())
    assert om.dimV == 2 and om.cocycle[1, 0].tolist() == [-1]


@pytest.mark.parametrize("body,msg", [
    ("laction 1,1 = 1\n", "dimV"),
    ("dimV 1\nlaction 2,1 = 1\n", "out of range"),
    ("dimV 2\ncocycle 2,1 = 1\n", "x < y"),
    ("dimV 1\nraction 1,1 = 1\nraction 1,1 = 1\n", "already given"),
])
def test_datum_errors(body, msg):
    with pytest.raises(FormatError, match=msg):
        parse_datum("dim 1\n" + body)


def test_pairs_and_matrices():
    pair = parse_pair((FIXTURES / "gl2_inner.pair").read_text(), QQ, 4)
    assert pair.lam.tolist() == [1, 0, 0, 1]
    assert parse_pair(format_pair(pair.lam, pair.D, QQ), QQ, 4).D.tolist() == pair.D.tolist()
    assert parse_matrix("1 2\n3 4\n", QQ).tolist() == [[1, 2], [3, 4]]
    assert parse_scalars("1, -1/2", QQ).tolist() == [1, QQ.scalar("-1/2")]
    with pytest.raises(FormatError, match="expected 2 entries") as info:
        parse_matrix("1 2\n3\n", QQ, 2)
    assert info.value.line == 2
    with pytest.raises(FormatError, match="square"):
        parse_matrix("1 2\n", QQ)
    with pytest.raises(FormatError, match="lambda"):
        parse_pair("D\n1\n", QQ, 1)
    with pytest.raises(FormatError, match="needs 2"):
        parse_pair("lambda 1\nD\n1 0\n0 1\n", QQ, 2)


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6), st.integers(1, 9))
def test_terms_roundtrip(coeffs, den):
    vec = QQ.array([QQ.normalize(c, den) for c in coeffs])
    assert parse_terms(format_terms(vec, QQ), QQ, len(coeffs)).tolist() == vec.tolist()
