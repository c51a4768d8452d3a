import random

import pytest

from witt import core
from witt.errors import ParseError, PreconditionError
from witt.lambda_ring import (
    d_operator,
    frobenius_lambda,
    lambda_to_witt,
    lambda_witt_add,
    lambda_witt_mul,
    lambda_witt_neg,
    one_series,
    parse_series,
    reciprocal,
    series,
    verschiebung_lambda,
    witt_to_lambda,
)
from witt.profiles import full_profile
from witt.rings import Integers, IntegersMod, PolynomialRing, PrimeField

Z = Integers()
ZU = PolynomialRing(Z, "u")
Z6, Z9, F3 = IntegersMod(6), IntegersMod(9), PrimeField(3)


def test_conversion_examples():
    assert witt_to_lambda(core.teichmuller(Z(5), full_profile(3))).coeffs == (1, -5, 0, 0)
    assert witt_to_lambda(core.zero(Z, full_profile(3))).coeffs == (1, 0, 0, 0)
    x = core.witt_vector(ZU, full_profile(2), [(0, 1), (0, 0, 1)])  # (u, u^2)
    assert witt_to_lambda(x) == series(ZU, [1, (0, -1), (0, 0, -1)])
    assert lambda_to_witt(series(Z, [1, 1, 0, 0])).values == (-1, 0, 0)
    assert lambda_to_witt(one_series(Z, 4)) == core.zero(Z, full_profile(4))


@pytest.mark.parametrize("R", [Z6, Z9, F3, ZU], ids=str)
def test_conversion_bijection(R):
    rng = random.Random(0)
    for _ in range(50):
        x = core.random_vector(R, full_profile(6), rng)
        f = witt_to_lambda(x)
        assert f.is_lambda()
        assert lambda_to_witt(f) == x
        assert witt_to_lambda(lambda_to_witt(f)) == f


def test_d_operator():
    a = 2
    assert d_operator(series(Z, [1, -a, 0, 0, 0])).coeffs == (0, 2, 4, 8, 16)
    rng = random.Random(1)
    for _ in range(50):
        x = core.random_vector(Z9, full_profile(8), rng)
        assert d_operator(witt_to_lambda(x)).coeffs[1:] == core.ghost(x).values
        f = witt_to_lambda(x)
        g = witt_to_lambda(core.random_vector(Z9, full_profile(8), rng))
        assert d_operator(lambda_witt_add(f, g)) == d_operator(f) + d_operator(g)


def test_add_and_neg():
    N = 4
    a, b = Z(3), Z(-2)
    f = witt_to_lambda(core.teichmuller(a, full_profile(N)))
    g = witt_to_lambda(core.teichmuller(b, full_profile(N)))
    want = core.teichmuller(a, full_profile(N)) + core.teichmuller(b, full_profile(N))
    assert lambda_to_witt(lambda_witt_add(f, g)) == want
    assert reciprocal(series(Z, [1, -1, 0, 0])).coeffs == (1, 1, 1, 1)
    assert lambda_to_witt(reciprocal(series(Z, [1, -1, 0, 0]))) == -core.one(Z, full_profile(3))
    assert f * lambda_witt_neg(f) == one_series(Z, N)
    with pytest.raises(PreconditionError):
        reciprocal(series(Z, [2, 1]))


def test_mul_examples():
    f, g = series(Z, [1, -3, 0, 0]), series(Z, [1, -5, 0, 0])
    assert lambda_witt_mul(f, g).coeffs == (1, -15, 0, 0)
    h = witt_to_lambda(core.random_vector(Z, full_profile(3), random.Random(2)))
    assert lambda_witt_mul(h, one_series(Z, 3)) == one_series(Z, 3)


@pytest.mark.parametrize("R", [Z6, F3], ids=str)
def test_cross_check_with_core(R):
    rng = random.Random(3)
    P = full_profile(8)
    for _ in range(100):
        x, y = core.random_vector(R, P, rng), core.random_vector(R, P, rng)
        f, g = witt_to_lambda(x), witt_to_lambda(y)
        assert lambda_to_witt(lambda_witt_add(f, g)) == x + y
        assert lambda_to_witt(lambda_witt_mul(f, g)) == x * y
        assert lambda_to_witt(lambda_witt_neg(f)) == -x


def test_frobenius_verschiebung_examples():
    a = 7
    assert verschiebung_lambda(2, series(Z, [1, -a]), 2).coeffs == (1, 0, -a)
    assert frobenius_lambda(2, series(Z, [1, -a, 0, 0, 0])).coeffs == (1, -(a**2), 0)


def test_frobenius_on_split_products():
    # F_n(prod (1 - a_i t)) = prod (1 - a_i^n t)
    rng = random.Random(4)
    N = 6
    for _ in range(20):
        roots = [rng.randint(-3, 3) for _ in range(3)]
        f, want = one_series(Z, N), None
        for n in (2, 3):
            f = one_series(Z, N)
            want = one_series(Z, N // n)
            for r in roots:
                f = f * series(Z, [1, -r] + [0] * (N - 1))
                want = want * series(Z, [1, -(r**n)] + [0] * (N // n - 1))
            assert frobenius_lambda(n, f) == want


@pytest.mark.parametrize("R", [Z6, F3], ids=str)
def test_frobenius_verschiebung_agree_with_core(R):
    rng = random.Random(5)
    P = full_profile(8)
    for _ in range(30):
        x = core.random_vector(R, P, rng)
        for n in (2, 3):
            assert frobenius_lambda(n, witt_to_lambda(x)) == witt_to_lambda(core.frobenius(n, x))
            y = core.random_vector(R, P.quotient(n), rng)
            assert verschiebung_lambda(n, witt_to_lambda(y), 8) == witt_to_lambda(
                core.verschiebung(n, y, P)
            )


def test_text_forms():
    f = parse_series(Z, "1 - 2*t + t^3")
    assert f.coeffs == (1, -2, 0, 1)
    assert str(f) == "1 - 2*t + t^3"
    assert parse_series(Z, "1 + t", order=3).coeffs == (1, 1, 0, 0)
    assert parse_series(Z, "1,2,3").coeffs == (1, 2, 3)
    assert parse_series(Z6, "1 - t").coeffs == (1, 5)
    g = parse_series(ZU, "1 + [0,1]*t - [1,1]*t^2")
    assert g.coeffs == ((1,), (0, 1), (-1, -1))
    assert parse_series(ZU, str(g)) == g
    assert str(series(Z, [0, 2, 4])) == "2*t + 4*t^2"
    assert str(series(Z, [0, 0])) == "0"
    with pytest.raises(ParseError):
        parse_series(Z, "1 + t^5", order=2)
