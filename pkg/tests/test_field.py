from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from liext.field import GF, QQ, FieldError, FieldSpec, egcd_inverse, normalize


def test_normalize_reduces_and_fixes_sign():
    assert normalize(4, -6) == Fraction(-2, 3)
    with pytest.raises(ZeroDivisionError, match="division by zero"):
        normalize(1, 0)


def test_prime_field_inverse():
    assert GF(7).invert(3) == 5
    assert egcd_inverse(3, 7) == 5
    with pytest.raises(ZeroDivisionError, match="not invertible"):
        GF(7).invert(0)


@pytest.mark.parametrize("text,expected", [("Q", QQ), ("F7", GF(7)), ("F_2", GF(2))])
def test_parse_field(text, expected):
    assert FieldSpec.parse(text) == expected
    assert FieldSpec.parse(str(expected)) == expected


@pytest.mark.parametrize("text", ["F4", "F1", "R", "F"])
def test_parse_field_rejects(text):
    with pytest.raises(FieldError):
        FieldSpec.parse(text)


def test_scalar_literals():
    assert QQ.parse_scalar("-3/6") == Fraction(-1, 2)
    assert GF(7).parse_scalar("1/2") == 4
    assert GF(7).parse_scalar("-1") == 6
    for bad in ("1/0", "x", "1.5", ""):
        with pytest.raises(FieldError):
            QQ.parse_scalar(bad)


def test_dtype_choice():
    assert QQ.dtype is object
    assert GF(7).dtype is np.int64
    assert GF(4093).dtype is np.int64
    assert GF(4099).dtype is object


def test_arrays_are_exact():
    a = QQ.array([[1, "1/3"], [Fraction(2, 4), -2]])
    assert a[0, 1] == Fraction(1, 3) and a[1, 0] == Fraction(1, 2)
    b = GF(5).array([[7, -1]])
    assert b.tolist() == [[2, 4]]
    assert QQ.is_zero(QQ.zeros((2, 2)))
    assert (GF(3).eye(2) == np.eye(2, dtype=np.int64)).all()


@given(st.integers(-10**6, 10**6), st.integers(1, 10**6))
def test_rational_roundtrip(num, den):
    x = QQ.normalize(num, den)
    assert QQ.parse_scalar(QQ.format_scalar(x)) == x


@given(st.sampled_from([2, 3, 5, 7, 101, 1_000_003]), st.integers(-10**9, 10**9))
def test_prime_field_inverse_law(p, a):
    F = GF(p)
    a = F.reduce_scalar(a)
    if a:
        assert F.reduce_scalar(a * F.invert(a)) == 1
    assert F.parse_scalar(F.format_scalar(a)) == a


def test_elements():
    assert list(GF(3).elements()) == [0, 1, 2]
    with pytest.raises(FieldError):
        QQ.elements()
