from fractions import Fraction

import pytest

from witt import universal
from witt.errors import LevelTooLarge
from witt.rings import Integers
from witt.profiles import divisors, prime_power_exponent
from witt.universal import AtPrime, Kind
from witt.upoly import UPoly, UVar, X, Y


def test_witt_polynomials():
    assert universal.witt_polynomial(1) == X(1)
    assert universal.witt_polynomial(4) == X(1) ** 4 + 2 * X(2) ** 2 + 4 * X(4)
    assert universal.witt_polynomial(6) == X(1) ** 6 + 2 * X(2) ** 3 + 3 * X(3) ** 2 + 6 * X(6)


def test_structural_examples():
    assert universal.structural_poly(Kind.SUM, 1) == X(1) + Y(1)
    assert universal.structural_poly(Kind.SUM, 2) == X(2) + Y(2) - X(1) * Y(1)
    assert universal.structural_poly(Kind.PRODUCT, 2) == (
        X(1) ** 2 * Y(2) + X(2) * Y(1) ** 2 + 2 * X(2) * Y(2)
    )
    assert universal.structural_poly(Kind.NEG, 1) == -X(1)
    assert universal.structural_poly(Kind.NEG, 2) == -(X(1) ** 2) - X(2)
    assert universal.structural_poly("sum", 3) == X(3) + Y(3) - X(1) ** 2 * Y(1) - X(1) * Y(1) ** 2


def test_sum_at_prime_matches_binomial_formula():
    # S_p = X_p + Y_p - sum_{0<k<p} binom(p,k)/p X_1^k Y_1^(p-k)
    from math import comb

    for p in (2, 3, 5, 7):
        want = X(p) + Y(p)
        for k in range(1, p):
            want = want - X(1) ** k * Y(1) ** (p - k) * (comb(p, k) // p)
        assert universal.structural_poly(Kind.SUM, p) == want


@pytest.mark.parametrize("kind", list(Kind))
def test_ghost_identities_symbolic(kind):
    for n in range(1, 25):
        wx, wy = universal.witt_polynomial(n, "X"), universal.witt_polynomial(n, "Y")
        target = {Kind.SUM: wx + wy, Kind.PRODUCT: wx * wy, Kind.NEG: -wx}[kind]
        lhs = UPoly()
        for d in divisors(n):
            lhs = lhs + universal.structural_poly(kind, d) ** (n // d) * d
        assert lhs == target, n


def test_sum_support_divides_n():
    for n in range(1, 25):
        allowed = {UVar(f, d) for d in divisors(n) for f in "XY"}
        assert universal.structural_poly(Kind.SUM, n).variables() <= allowed


def test_frobenius_examples():
    assert universal.frobenius_poly(2, 1) == X(1) ** 2 + 2 * X(2)
    for m in range(1, 8):
        assert universal.frobenius_poly(1, m) == X(m)
    for m in range(1, 13):
        assert universal.frobenius_poly(2, m).reduce_mod(2) == X(m) ** 2


def test_frobenius_composition_symbolic():
    for n in range(1, 13):
        for m in range(1, 12 // n + 1):
            for k in range(1, 12 // (n * m) + 1):
                inner = {UVar("X", j): universal.frobenius_poly(m, j) for j in range(1, n * k + 1)}
                composed = universal.frobenius_poly(n, k).substitute(inner)
                assert composed == universal.frobenius_poly(n * m, k)
                # F_n F_m = F_m F_n
                inner2 = {UVar("X", j): universal.frobenius_poly(n, j) for j in range(1, m * k + 1)}
                assert universal.frobenius_poly(m, k).substitute(inner2) == composed


def test_epsilon_examples():
    eps = universal.epsilon_polys(2, 4)
    assert eps[0] == X(1)
    assert eps[1] == X(2)
    assert eps[2] == X(1) ** 3 * Fraction(-1, 3)
    assert eps[3] == X(4)
    for p in (2, 3, 5):
        for poly in universal.epsilon_polys(p, 16):
            assert universal.assert_integral(poly, AtPrime(p))
            assert all(v.index % p == 0 or v.index == 1 for v in poly.variables())


def test_epsilon_ghost_components():
    for p in (2, 3):
        polys = universal.epsilon_polys(p, 12)
        for n in range(1, 13):
            ghost = UPoly()
            for d in divisors(n):
                ghost = ghost + polys[d - 1] ** (n // d) * d
            is_power = prime_power_exponent(n, p) is not None
            assert ghost == (universal.witt_polynomial(n) if is_power else UPoly())


def test_delta_examples():
    for m in range(1, 4):
        assert universal.delta_poly(1, 3, 1, m) == X(m)
    d21 = universal.delta_poly(2, 2, 2, 1)
    f21 = universal.frobenius_poly(2, 1)
    assert d21 == (f21 - X(1) ** 2).div_int(2)
    assert universal.assert_integral(d21)
    # Teichmueller input: only X1 nonzero, so outer components n >= 2 vanish
    for n in (2, 3):
        for m in (1, 2):
            poly = universal.delta_poly(3, 2, n, m)
            assert poly.evaluate_vars(Integers(), {UVar("X", 1): 7}) == 0


def test_assert_integral_examples():
    assert universal.assert_integral(X(1) + Y(1))
    q = X(1) * Fraction(2, 3)
    assert not universal.assert_integral(q)
    assert universal.assert_integral(q, AtPrime(2))
    assert not universal.assert_integral(X(1) * Fraction(1, 2), AtPrime(2))


def test_cache_transparency():
    first = universal.structural_poly(Kind.PRODUCT, 12)
    assert universal.structural_poly(Kind.PRODUCT, 12) is first
    universal.clear_cache()
    again = universal.structural_poly(Kind.PRODUCT, 12)
    assert again == first and again is not first


def test_level_cap():
    for n in (25, 27, 32):
        universal.frobenius_poly(n, 1)
    with pytest.raises(LevelTooLarge):
        universal.structural_poly(Kind.SUM, 36)
    with pytest.raises(LevelTooLarge):
        universal.frobenius_poly(5, 6)
    old = universal.max_level()
    try:
        universal.set_max_level(36)
        assert universal.assert_integral(universal.frobenius_poly(5, 6))
    finally:
        universal.set_max_level(old)
