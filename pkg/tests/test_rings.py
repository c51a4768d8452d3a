import random
import warnings
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from witt.checks import standard_rings
from witt.errors import (
    NotDivisible,
    NotPrime,
    NotUnique,
    ParseError,
    PreconditionError,
    UnsupportedRing,
)
from witt.rings import (
    FiniteField,
    Integers,
    IntegersMod,
    LocalizedRationals,
    PolynomialRing,
    PrimeField,
    Rationals,
    RingElement,
    default_modulus,
    exact_div_int,
    int_image,
    parse_ring,
    pth_root,
)

RINGS = standard_rings()
F4 = FiniteField(2, 2, (1, 1, 1))
ZU = PolynomialRing(Integers(), "u")


@pytest.mark.parametrize("R", RINGS, ids=str)
def test_ring_axioms(R):
    rng = random.Random(str(R))
    for _ in range(100):
        a, b, c = (RingElement(R, R.random(rng)) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + 0 == a and a * 1 == a and a * 0 == 0
        assert a - a == 0


@pytest.mark.parametrize("R", RINGS, ids=str)
@given(m=st.integers(-10**6, 10**6), n=st.integers(-10**6, 10**6))
@settings(max_examples=30)
def test_int_image_homomorphism(R, m, n):
    assert int_image(m + n, R) == int_image(m, R) + int_image(n, R)
    assert int_image(m * n, R) == int_image(m, R) * int_image(n, R)


def test_int_image_examples():
    for R in RINGS:
        assert int_image(0, R).is_zero()
    assert int_image(5, IntegersMod(3)).value == 2
    assert int_image(7, F4) == RingElement(F4, (1, 0))


def test_exact_div_int_examples():
    assert exact_div_int(RingElement(Integers(), 6), 3).value == 2
    assert exact_div_int(ZU((4, 2)), 2) == ZU((2, 1))
    with pytest.raises(NotDivisible):
        exact_div_int(RingElement(Integers(), 3), 2)


def test_exact_div_int_torsion():
    Z6 = IntegersMod(6)
    assert exact_div_int(Z6(4), 5) == Z6(2)
    with pytest.raises(NotUnique):
        exact_div_int(Z6(4), 2)
    with pytest.raises(NotDivisible):
        exact_div_int(Z6(3), 2)
    with pytest.raises(NotUnique):
        exact_div_int(PrimeField(3)(0), 3)
    with pytest.raises(NotDivisible):
        exact_div_int(PrimeField(3)(1), 3)


def test_localized_rationals():
    Z3 = LocalizedRationals(3)
    assert Z3("2/5").value == Fraction(2, 5)
    with pytest.raises(UnsupportedRing):
        Z3(Fraction(1, 3))
    with pytest.raises(NotDivisible):
        exact_div_int(Z3(1), 3)
    assert exact_div_int(Z3(1), 2).value == Fraction(1, 2)
    with pytest.raises(NotPrime):
        LocalizedRationals(4)


def test_pth_root_examples():
    F = PrimeField(5)
    assert pth_root(F(3)) == F(3)
    g = RingElement(F4, (0, 1))
    assert pth_root(g) == RingElement(F4, (1, 1))
    assert pth_root(RingElement(F4, (0, 0))).is_zero()
    with pytest.raises(UnsupportedRing):
        pth_root(RingElement(Integers(), 4))


@pytest.mark.parametrize("R", [PrimeField(3), F4, FiniteField(3, 2, (2, 2, 1))], ids=str)
def test_pth_root_properties(R):
    p = R.characteristic
    rng = random.Random(1)
    for _ in range(100):
        a, b = RingElement(R, R.random(rng)), RingElement(R, R.random(rng))
        assert pth_root(a) ** p == a
        assert pth_root(a + b) == pth_root(a) + pth_root(b)


def test_finite_field_construction():
    with pytest.raises(PreconditionError):
        FiniteField(2, 2, (1, 0, 1))  # (g + 1)^2
    with pytest.raises(PreconditionError):
        FiniteField(2, 2, (1, 1, 0))  # not monic of degree 2
    assert default_modulus(2, 2) == (1, 1, 1)
    assert default_modulus(3, 2) == (1, 0, 1)
    with pytest.warns(UserWarning):
        big = FiniteField(2, 5, (1, 0, 1, 0, 0, 1))
    assert not big.verified
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert F4.verified


def test_finite_field_is_a_field():
    R = FiniteField(3, 2, (2, 2, 1))
    elems = [RingElement(R, (a, b)) for a in range(3) for b in range(3)]
    for x in elems[1:]:
        assert any(x * y == 1 for y in elems)


def test_polynomial_ring_depth():
    inner = PolynomialRing(ZU, "v")
    with pytest.raises(PreconditionError):
        PolynomialRing(inner, "w")


def test_polynomial_trimming_and_format():
    assert ZU((1, 2, 0, 0)).value == (1, 2)
    assert ZU.format(ZU.zero) == "[0]"
    assert ZU.format(ZU.parse("[1,0,3]")) == "[1,0,3]"
    assert ZU.parse("1,2") == (1, 2)


@pytest.mark.parametrize(
    "text",
    ["int", "rat", "zloc:3", "zmod:6", "gf:5", "gf:2^2:1,1,1", "gf:3^2:2,2,1", "poly:int:u", "poly:zmod:4:t"],
)
def test_parse_ring_roundtrip(text):
    R = parse_ring(text)
    assert str(R) == text
    assert parse_ring(str(R)) == R


def test_parse_ring_default_modulus():
    assert parse_ring("gf:2^2") == F4


@pytest.mark.parametrize("text", ["", "integers", "zmod:x", "gf:2^a", "poly:int"])
def test_parse_ring_errors(text):
    with pytest.raises(ParseError):
        parse_ring(text)


@pytest.mark.parametrize("R", RINGS, ids=str)
def test_element_text_roundtrip(R):
    rng = random.Random(0)
    for _ in range(50):
        a = R.random(rng)
        assert R.parse(R.format(a)) == a


def test_residues_canonical():
    Z9 = IntegersMod(9)
    assert Z9(-1).value == 8
    assert Z9(10).value == 1
    assert Rationals()("6/4").value == Fraction(3, 2)
