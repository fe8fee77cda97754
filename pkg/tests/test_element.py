from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from supertropical.element import (
    BOTTOM,
    ONE,
    Element,
    Layer,
    ParseError,
    ghost_surpasses,
    nu_map,
    parse_scalar,
    s_add,
    s_mul,
    tangible_lift,
)

from conftest import E

values = st.fractions(min_value=-20, max_value=20, max_denominator=4)
elements = st.one_of(
    st.just(BOTTOM),
    values.map(Element),
    values.map(Element.ghost),
)


@pytest.mark.parametrize("a, b, want", [
    ("3", "5", "5"), ("3", "3", "3g"), ("3g", "2", "3g"), ("7", "-inf", "7"),
    ("-inf", "2g", "2g"), ("2", "2g", "2g"),
])
def test_add(a, b, want):
    assert s_add(E(a), E(b)) == E(want)


@pytest.mark.parametrize("a, b, want", [
    ("3", "5", "8"), ("3g", "5", "8g"), ("-inf", "7g", "-inf"), ("-4/3", "1/3", "-1"),
])
def test_mul(a, b, want):
    assert s_mul(E(a), E(b)) == E(want)


def test_nu_and_lift():
    assert nu_map(E(3)) == E("3g")
    assert nu_map(E("3g")) == E("3g")
    assert nu_map(BOTTOM) == BOTTOM
    assert tangible_lift(E("3g")) == E(3)
    assert tangible_lift(E(3)) == E(3)
    assert tangible_lift(BOTTOM) == BOTTOM


@pytest.mark.parametrize("a, b, want", [
    ("3g", "2", True), ("3", "3g", False), ("2g", "3", False), ("3", "3", True),
    ("-inf", "-inf", True), ("2", "-inf", False), ("2g", "-inf", True),
])
def test_ghost_surpasses(a, b, want):
    assert ghost_surpasses(E(a), E(b)) is want


def test_bottom_is_canonical():
    assert Element(None, Layer.GHOST) == BOTTOM
    assert BOTTOM.layer is Layer.TANGIBLE
    assert hash(Element(None, Layer.GHOST)) == hash(BOTTOM)


@pytest.mark.parametrize("text, value, ghost", [
    ("3", Fraction(3), False), ("-4/3", Fraction(-4, 3), False), ("2.5g", Fraction(5, 2), True),
    ("0g", Fraction(0), True), ("-inf", None, False),
])
def test_parse(text, value, ghost):
    x = parse_scalar(text)
    assert x.value == value
    assert x.is_ghost is ghost


@pytest.mark.parametrize("text", ["", "g", "3gg", "1/", "inf", "-inf g", "1e3", "/3"])
def test_parse_rejects(text):
    with pytest.raises(ParseError):
        parse_scalar(text)


def test_render():
    assert [str(E(t)) for t in ["3", "-4/3", "3g", "-inf", "16/3g", "2.5"]] == ["3", "-4/3", "3g", "-inf", "16/3g", "5/2"]


@given(elements)
def test_render_round_trip(a):
    assert parse_scalar(str(a)) == a


def test_inverse():
    assert E(3).inverse() == E(-3)
    with pytest.raises(ZeroDivisionError):
        E("3g").inverse()
    with pytest.raises(ZeroDivisionError):
        BOTTOM.inverse()


@given(elements, elements, elements)
def test_semiring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * ONE == a
    assert a + BOTTOM == a
    assert a * BOTTOM == BOTTOM


@given(elements, elements)
def test_supertropical_axioms(a, b):
    assert a + a == nu_map(a)
    if a.nu_key() != b.nu_key():
        assert a + b in (a, b)


@given(elements, elements)
def test_nu_is_an_endomorphism(a, b):
    assert nu_map(a + b) == nu_map(a) + nu_map(b)
    assert nu_map(a * b) == nu_map(a) * nu_map(b)
    assert nu_map(nu_map(a)) == nu_map(a)


@given(elements, elements, st.integers(1, 6))
def test_frobenius(a, b, m):
    assert ghost_surpasses((a + b) ** m, a ** m + b ** m)


@given(elements, elements, elements)
def test_surpassing_order(a, b, c):
    assert ghost_surpasses(a, a)
    if ghost_surpasses(a, b) and ghost_surpasses(b, c):
        assert ghost_surpasses(a, c)
    if ghost_surpasses(a, b) and ghost_surpasses(b, a):
        assert a == b
    if ghost_surpasses(a, b):
        assert ghost_surpasses(a + c, b + c)
        assert ghost_surpasses(a * c, b * c)
