import random
from fractions import Fraction

import pytest

from witt import core
from witt.checks import fv_identities, frobenius_congruence, non_congruence_witness
from witt.errors import (
    EmptyOutputProfile,
    NotInGhostImage,
    ProfileMismatch,
    PreconditionError,
    RingMismatch,
    UnsupportedRing,
)
from witt.profiles import full_profile, p_typical_profile, validate_profile
from witt.rings import (
    FiniteField,
    Integers,
    IntegersMod,
    LocalizedRationals,
    PolynomialRing,
    PrimeField,
    Rationals,
    RingElement,
)

Z = Integers()
F4 = FiniteField(2, 2, (1, 1, 1))


def vec(ring, profile, comps):
    return core.witt_vector(ring, profile, comps)


def test_ghost_examples():
    x = vec(Z, full_profile(3), [1, 2, 3])
    assert core.ghost(x).values == (1, 5, 10)
    assert core.ghost(vec(Z, full_profile(4), [3, 0, 0, 0])).values == (3, 9, 27, 81)
    assert core.ghost(core.zero(Z, full_profile(4))).values == (0, 0, 0, 0)


def test_unghost_examples():
    g = core.ghost_vector(Z, full_profile(3), [1, 5, 10])
    assert core.unghost(g).values == (1, 2, 3)
    with pytest.raises(NotInGhostImage):
        core.unghost(core.ghost_vector(Z, full_profile(3), [0, 1, 0]))


def test_unghost_roundtrip_rationals():
    rng = random.Random(0)
    for P in (full_profile(8), validate_profile([1, 2, 3, 6])):
        for _ in range(50):
            x = core.random_vector(Rationals(), P, rng)
            assert core.unghost(core.ghost(x)) == x


def test_arithmetic_examples():
    F2 = PrimeField(2)
    one = vec(F2, p_typical_profile(2, 1), [1, 0])
    assert (one + one).values == (0, 1)
    Z4 = IntegersMod(4)
    assert (vec(Z4, full_profile(2), [1, 1]) + vec(Z4, full_profile(2), [1, 0])).values == (2, 0)
    P = full_profile(5)
    t2, t3 = core.teichmuller(Z(2), P), core.teichmuller(Z(3), P)
    assert t2 * t3 == core.teichmuller(Z(6), P)
    assert (-core.teichmuller(Z(1), full_profile(2))).values == (-1, -1)
    assert core.zero(Z, P).values == (0,) * 5
    assert core.one(Z, P).values == (1, 0, 0, 0, 0)


def test_teichmuller_scaling():
    t = core.teichmuller(Z(2), full_profile(3))
    assert (t * vec(Z, full_profile(3), [1, 1, 1])).values == (2, 4, 8)
    assert core.teichmuller(Z(0), full_profile(3)) == core.zero(Z, full_profile(3))
    rng = random.Random(1)
    Z9 = IntegersMod(9)
    for P in (full_profile(6), p_typical_profile(3, 2)):
        for _ in range(50):
            a = RingElement(Z9, Z9.random(rng))
            x = core.random_vector(Z9, P, rng)
            assert core.teichmuller(a, P) * x == core.teichmuller_scale(a, x)


def test_verschiebung_examples():
    x = vec(Z, full_profile(3), [4, 5, 6])
    assert core.verschiebung(2, x, full_profile(6)).values == (0, 4, 0, 5, 0, 6)
    y = vec(Z, p_typical_profile(3, 1), [7, 8])
    assert core.verschiebung(3, y, p_typical_profile(3, 2)).values == (0, 7, 8)
    g = core.ghost(core.verschiebung(2, x, full_profile(6)))
    gx = core.ghost(x)
    assert g.values == (0, 2 * gx.value(1), 0, 2 * gx.value(2), 0, 2 * gx.value(3))
    with pytest.raises(ProfileMismatch):
        core.verschiebung(2, x, full_profile(8))


def test_frobenius_examples():
    P = full_profile(6)
    for a in (2, -3, 5):
        assert core.frobenius(2, core.teichmuller(Z(a), P)) == core.teichmuller(Z(a * a), full_profile(3))
    v = core.verschiebung(2, core.teichmuller(Z(1), full_profile(3)), P)
    assert core.frobenius(2, v).values == (2, -1, -2)
    rng = random.Random(2)
    for p in (2, 3):
        for _ in range(30):
            x = core.random_vector(Z, full_profile(8), rng)
            fx = core.frobenius(p, x)
            for m, y in fx.items():
                assert (y - x.value(m) ** p) % p == 0
    with pytest.raises(EmptyOutputProfile):
        core.frobenius(9, core.zero(Z, P))


def test_project():
    rng = random.Random(3)
    P = full_profile(8)
    x, y = core.random_vector(Z, P, rng), core.random_vector(Z, P, rng)
    one = full_profile(1)
    assert core.project(x, one).values == (x.value(1),)
    assert core.project(x, P) == x
    for sub in (full_profile(4), p_typical_profile(2, 3), validate_profile([1, 2, 3, 6])):
        if sub.is_subprofile_of(P):
            assert core.project(x + y, sub) == core.project(x, sub) + core.project(y, sub)
            assert core.project(x * y, sub) == core.project(x, sub) * core.project(y, sub)
    with pytest.raises(ProfileMismatch):
        core.project(x, full_profile(9))


def test_decompose():
    P = full_profile(6)
    Z6 = IntegersMod(6)
    assert core.decompose(core.zero(Z6, P)) == []
    assert core.decompose(core.teichmuller(Z6(5), P)) == [(1, Z6(5))]
    rng = random.Random(4)
    for _ in range(100):
        x = core.random_vector(Z6, P, rng)
        assert core.reassemble(core.decompose(x), Z6, P) == x


def test_disjoint_support_addition():
    rng = random.Random(5)
    Z6, P = IntegersMod(6), full_profile(6)
    for _ in range(100):
        mask = [rng.random() < 0.5 for _ in P]
        x = core.random_vector(Z6, P, rng)
        a = vec(Z6, P, [v if m else 0 for v, m in zip(x.values, mask)])
        b = vec(Z6, P, [0 if m else v for v, m in zip(x.values, mask)])
        assert a + b == x


@pytest.mark.parametrize("R", [Z, IntegersMod(6), PrimeField(3), F4], ids=str)
def test_fv_identities(R):
    rng = random.Random(6)
    for n, m in ((2, 3), (3, 2), (2, 2), (3, 3)):
        for _ in range(10):
            fv_identities(R, rng, n, m)


def test_frobenius_congruence_and_failure():
    rng = random.Random(7)
    for p in (2, 3, 5):
        for _ in range(20):
            x = core.random_vector(Z, full_profile(8), rng)
            frobenius_congruence(x, p)
    assert non_congruence_witness(6) is not None
    assert non_congruence_witness(4) is not None


@pytest.mark.parametrize("R", [PrimeField(2), PrimeField(3), F4, FiniteField(3, 2, (2, 2, 1))], ids=str)
def test_p_times_x_in_characteristic_p(R):
    p = R.characteristic
    P = p_typical_profile(p, 3)
    rng = random.Random(8)
    for _ in range(30):
        x = core.random_vector(R, P, rng)
        shifted = (R.zero,) + tuple(R.pow(v, p) for v in x.values[:-1])
        assert (p * x).values == shifted
        assert p * x == core.verschiebung(p, core.frobenius(p, x), P)


@pytest.mark.parametrize("R", [Rationals(), LocalizedRationals(3)], ids=str)
def test_ghost_fast_path_matches_universal(R):
    rng = random.Random(9)
    for P in (full_profile(8), p_typical_profile(3, 2), validate_profile([1, 2, 3, 6])):
        for _ in range(30):
            x, y = core.random_vector(R, P, rng), core.random_vector(R, P, rng)
            assert core.witt_add(x, y, "ghost") == core.witt_add(x, y, "universal")
            assert core.witt_mul(x, y, "ghost") == core.witt_mul(x, y, "universal")
            assert core.witt_neg(x, "ghost") == core.witt_neg(x, "universal")


def test_ghost_fast_path_refused_on_torsion():
    x = core.one(IntegersMod(4), full_profile(2))
    with pytest.raises(UnsupportedRing):
        core.witt_add(x, x, "ghost")
    with pytest.raises(PreconditionError):
        core.witt_add(x, x, "fast")


def test_localized_fast_path_stays_local():
    R = LocalizedRationals(2)
    x = vec(R, full_profile(4), [Fraction(1, 3), 1, 0, Fraction(5, 3)])
    for v in (x * x + x).values:
        assert v.denominator % 2


def test_scalar_mul_and_pow():
    rng = random.Random(10)
    P = full_profile(6)
    for R in (Z, IntegersMod(6)):
        x = core.random_vector(R, P, rng)
        assert 3 * x == x + x + x
        assert -2 * x == -(x + x)
        assert x**3 == x * x * x
        assert x**0 == core.one(R, P)


def test_mismatch_errors():
    x = core.one(Z, full_profile(2))
    with pytest.raises(ProfileMismatch):
        x + core.one(Z, full_profile(3))
    with pytest.raises(RingMismatch):
        x + core.one(Rationals(), full_profile(2))
    with pytest.raises(ProfileMismatch):
        vec(Z, full_profile(3), [1, 2])


def test_ghost_homomorphism_polynomial_ring():
    R = PolynomialRing(Z, "u")
    rng = random.Random(11)
    P = full_profile(6)
    for _ in range(20):
        x, y = core.random_vector(R, P, rng), core.random_vector(R, P, rng)
        assert core.ghost(x * y) == core.ghost(x) * core.ghost(y)
        assert core.ghost(x + y) == core.ghost(x) + core.ghost(y)
