"""Identity suite run by ``witt selfcheck``.

Each check takes a ``random.Random`` and a trial count and raises
``AssertionError`` on the first failure.  :func:`run_all` collects
pass/fail results for every registered check.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable

from . import artin_hasse as ah
from . import canonical, core, lambda_ring, padic, universal
from .errors import NotDivisible, UnsupportedRing
from .profiles import (
    divisors,
    full_profile,
    moebius,
    p_typical_profile,
    validate_profile,
)
from .rings import (
    FiniteField,
    Integers,
    IntegersMod,
    LocalizedRationals,
    PolynomialRing,
    PrimeField,
    Rationals,
    RingElement,
    int_image,
    pth_root,
)
from .upoly import UVar, X


def standard_rings():
    return [
        Integers(),
        Rationals(),
        LocalizedRationals(3),
        IntegersMod(6),
        IntegersMod(9),
        PrimeField(2),
        PrimeField(3),
        FiniteField(2, 2, (1, 1, 1)),
        PolynomialRing(Integers(), "u"),
    ]


def standard_profiles():
    return [full_profile(8), p_typical_profile(2, 3), p_typical_profile(3, 3), p_typical_profile(5, 2)]


_CHECKS: list[tuple[str, Callable]] = []


def check(name: str):
    def register(fn):
        _CHECKS.append((name, fn))
        return fn

    return register


# rings and profiles


@check("rings: axioms and int_image homomorphism")
def check_ring_axioms(rng, trials):
    for R in standard_rings():
        for _ in range(trials):
            a, b, c = (RingElement(R, R.random(rng)) for _ in range(3))
            assert (a + b) + c == a + (b + c) and a + b == b + a, R
            assert (a * b) * c == a * (b * c) and a * b == b * a, R
            assert a * (b + c) == a * b + a * c, R
            assert a + 0 == a and a * 1 == a and a + (-a) == 0, R
            m, n = rng.randint(-50, 50), rng.randint(-50, 50)
            assert int_image(m + n, R) == int_image(m, R) + int_image(n, R), R
            assert int_image(m * n, R) == int_image(m, R) * int_image(n, R), R


@check("rings: p-th roots in finite fields")
def check_pth_root(rng, trials):
    for R in (PrimeField(3), FiniteField(2, 2, (1, 1, 1)), FiniteField(3, 2, (2, 2, 1))):
        p = R.characteristic
        for _ in range(trials):
            a, b = RingElement(R, R.random(rng)), RingElement(R, R.random(rng))
            assert pth_root(a) ** p == a
            assert pth_root(a + b) == pth_root(a) + pth_root(b)


@check("profiles: Moebius sums and profile membership")
def check_profiles(rng, trials):
    for n in range(1, 1001):
        assert sum(moebius(d) for d in divisors(n)) == (1 if n == 1 else 0), n
    P = full_profile(12)
    assert all((k in P) == (1 <= k <= 12) for k in range(-2, 30))
    assert validate_profile(P.indices) == P


# universal polynomials


@check("universal: ghost identities of S, Z, I hold symbolically")
def check_universal_ghost(rng, trials, top=24):
    for n in range(1, top + 1):
        wx, wy = universal.witt_polynomial(n, "X"), universal.witt_polynomial(n, "Y")
        for kind, target in (
            (universal.Kind.SUM, wx + wy),
            (universal.Kind.PRODUCT, wx * wy),
            (universal.Kind.NEG, -wx),
        ):
            comps = {d: universal.structural_poly(kind, d) for d in divisors(n)}
            lhs = sum((comps[d] ** (n // d) * d for d in divisors(n)), start=X(1) * 0)
            assert lhs == target, (kind, n)
            allowed = {UVar(f, d) for d in divisors(n) for f in "XY"}
            assert comps[n].variables() <= allowed
            assert universal.assert_integral(comps[n])


@check("universal: F_n o F_m = F_nm symbolically")
def check_universal_frobenius(rng, trials, top=12):
    for n in range(1, top + 1):
        for m in range(1, top // n + 1):
            for k in range(1, top // (n * m) + 1):
                inner = {UVar("X", j): universal.frobenius_poly(m, j) for j in range(1, n * k + 1)}
                composed = universal.frobenius_poly(n, k).substitute(inner)
                assert composed == universal.frobenius_poly(n * m, k), (n, m, k)


@check("universal: Frobenius components reduce to p-th powers mod p")
def check_frobenius_mod_p(rng, trials):
    for p in (2, 3, 5):
        for m in range(1, 24 // p + 1):
            assert universal.frobenius_poly(p, m).reduce_mod(p) == X(m) ** p, (p, m)


@check("universal: eps_p polynomials are p-integral")
def check_epsilon_integral(rng, trials):
    for p in (2, 3, 5):
        for poly in universal.epsilon_polys(p, 16):
            assert universal.assert_integral(poly, universal.AtPrime(p))


# witt core


def _rand(R, P, rng):
    return core.random_vector(R, P, rng)


@check("witt: ring axioms over every ring and profile")
def check_witt_axioms(rng, trials):
    for R in standard_rings():
        for P in standard_profiles():
            z, o = core.zero(R, P), core.one(R, P)
            for _ in range(trials):
                a, b, c = _rand(R, P, rng), _rand(R, P, rng), _rand(R, P, rng)
                assert a + b == b + a and a * b == b * a, (R, P)
                assert (a + b) + c == a + (b + c), (R, P)
                assert (a * b) * c == a * (b * c), (R, P)
                assert a * (b + c) == a * b + a * c, (R, P)
                assert a + z == a and a * o == a and a + (-a) == z, (R, P)


@check("witt: ghost map is a ring homomorphism over Z and Z[u]")
def check_ghost_hom(rng, trials):
    P = full_profile(8)
    for R in (Integers(), PolynomialRing(Integers(), "u")):
        for _ in range(trials):
            a, b = _rand(R, P, rng), _rand(R, P, rng)
            ga, gb = core.ghost(a), core.ghost(b)
            assert core.ghost(a + b) == ga + gb
            assert core.ghost(a - b) == ga - gb
            assert core.ghost(a * b) == ga * gb
            assert core.unghost(ga) == a


@check("witt: ghost shortcut agrees with universal polynomials over Q and Z_(p)")
def check_fast_path(rng, trials):
    for R in (Rationals(), LocalizedRationals(2)):
        for P in (full_profile(8), p_typical_profile(2, 3)):
            for _ in range(trials):
                a, b = _rand(R, P, rng), _rand(R, P, rng)
                assert core.witt_add(a, b, "ghost") == core.witt_add(a, b, "universal")
                assert core.witt_mul(a, b, "ghost") == core.witt_mul(a, b, "universal")
                assert core.witt_neg(a, "ghost") == core.witt_neg(a, "universal")


def fv_identities(R, rng, n, m, N=12):
    """The F/V identities for one random draw; returns nothing, asserts."""
    P = full_profile(N)
    Pn = P.quotient(n)
    x = _rand(R, Pn, rng)
    # F_n V_n = n
    assert core.frobenius(n, core.verschiebung(n, x, P)) == core.scalar_mul(n, x)
    # F_n F_m = F_nm, V_n V_m = V_nm
    z = _rand(R, P, rng)
    assert core.frobenius(n, core.frobenius(m, z)) == core.frobenius(n * m, z)
    w = _rand(R, P.quotient(n * m), rng)
    assert core.verschiebung(n, core.verschiebung(m, w, Pn), P) == core.verschiebung(n * m, w, P)
    # V_n(F_n(x) y) = x V_n(y)
    y = _rand(R, Pn, rng)
    assert core.verschiebung(n, core.frobenius(n, z) * y, P) == z * core.verschiebung(n, y, P)
    # V_m F_n = F_n V_m for coprime m, n
    if gcd(m, n) == 1:
        Q = full_profile(N)
        u = _rand(R, Q.quotient(m), rng)
        lhs = core.verschiebung(m, core.frobenius(n, u), Q.quotient(n))
        rhs = core.frobenius(n, core.verschiebung(m, u, Q))
        assert lhs == rhs
    # (V_n x)^m = n^(m-1) V_n(x^m)
    assert core.verschiebung(n, x, P) ** m == core.scalar_mul(n ** (m - 1), core.verschiebung(n, x**m, P))


@check("witt: Frobenius/Verschiebung identities")
def check_fv(rng, trials):
    for R in (Integers(), IntegersMod(6), PrimeField(3)):
        for n, m in ((2, 3), (3, 2), (2, 2), (3, 3)):
            for _ in range(trials):
                fv_identities(R, rng, n, m)


def frobenius_congruence(x, p):
    """Return (F_p(x) - x^p)/p in W(Z); raises NotInGhostImage if not divisible."""
    target = x.profile.quotient(p)
    diff = core.frobenius(p, x) - core.project(x**p, target)
    g = core.ghost(diff)
    divided = core.GhostVector(g.profile, g.ring, tuple(g.ring.exact_div_int(v, p) for v in g.values))
    return core.unghost(divided)


@check("witt: F_p lifts Frobenius mod p over Z, and F_6/F_4 do not")
def check_frob_congruence(rng, trials):
    P = full_profile(8)
    for p in (2, 3):
        for _ in range(trials):
            x = _rand(Integers(), P, rng)
            y = frobenius_congruence(x, p)
            assert core.scalar_mul(p, y) == core.frobenius(p, x) - core.project(x**p, y.profile)
    assert non_congruence_witness(6) and non_congruence_witness(4)


def non_congruence_witness(n: int):
    """A vector over Z/n whose F_n first component differs from x_1^n, or None."""
    R = IntegersMod(n)
    P = full_profile(n)
    for x2 in range(n):
        comps = [1, x2] + [0] * (n - 2)
        x = core.witt_vector(R, P, comps)
        if core.frobenius(n, x).value(1) != R.pow(1, n):
            return x
    return None


@check("witt: p x = V_p F_p x = (0, x_1^p, x_p^p, ...) in characteristic p")
def check_char_p(rng, trials):
    for R in (PrimeField(2), PrimeField(3), FiniteField(2, 2, (1, 1, 1))):
        p = R.characteristic
        P = p_typical_profile(p, 3)
        for _ in range(trials):
            x = _rand(R, P, rng)
            shifted = (R.zero,) + tuple(R.pow(v, p) for v in x.values[:-1])
            assert core.scalar_mul(p, x).values == shifted


@check("witt: disjoint supports add componentwise; decompose reassembles")
def check_disjoint(rng, trials):
    R, P = IntegersMod(6), full_profile(6)
    for _ in range(trials):
        x = _rand(R, P, rng)
        mask = [rng.random() < 0.5 for _ in P]
        a = core.WittVector(P, R, tuple(v if m else 0 for v, m in zip(x.values, mask)))
        b = core.WittVector(P, R, tuple(0 if m else v for v, m in zip(x.values, mask)))
        assert a + b == x
        assert core.reassemble(core.decompose(x), R, P) == x
        t = RingElement(R, R.random(rng))
        assert core.teichmuller(t, P) * x == core.teichmuller_scale(t, x)


# Lambda model


@check("lambda: conversions and ring laws agree with witt core")
def check_lambda(rng, trials):
    P = full_profile(8)
    for R in (IntegersMod(6), PrimeField(3)):
        for _ in range(trials):
            x, y = _rand(R, P, rng), _rand(R, P, rng)
            f, g = lambda_ring.witt_to_lambda(x), lambda_ring.witt_to_lambda(y)
            assert lambda_ring.lambda_to_witt(f) == x
            assert lambda_ring.lambda_to_witt(lambda_ring.lambda_witt_add(f, g)) == x + y
            assert lambda_ring.lambda_to_witt(lambda_ring.lambda_witt_neg(f)) == -x
            assert lambda_ring.lambda_to_witt(lambda_ring.lambda_witt_mul(f, g)) == x * y
            df, dg = lambda_ring.d_operator(f), lambda_ring.d_operator(g)
            assert df.coeffs[1:] == core.ghost(x).values
            assert lambda_ring.d_operator(f * g) == df + dg
            for n in (2, 3):
                assert lambda_ring.frobenius_lambda(n, f) == lambda_ring.witt_to_lambda(core.frobenius(n, x))
                small = _rand(R, P.quotient(n), rng)
                assert lambda_ring.verschiebung_lambda(n, lambda_ring.witt_to_lambda(small), 8) == (
                    lambda_ring.witt_to_lambda(core.verschiebung(n, small, P))
                )


# Artin-Hasse


@check("artin-hasse: exponential and Moebius product agree; p-integrality")
def check_hexp(rng, trials):
    for p in (2, 3, 5):
        assert ah.hexp_coeffs(p, 32) == ah.hexp_moebius(p, 32)
    for p in (2, 3, 5, 7):
        assert ah.hexp_coeffs(p, 64).is_p_integral()
    for p in (2, 3, 5):
        for n in range(1, 13):
            if n % p == 0:
                continue
            for m in range(1, 4):
                f = [Fraction(0)] * 25
                f[0], f[m] = Fraction(1), Fraction(-1)
                g = ah.series_nth_root(f, n)
                assert all(c.denominator % p for c in g), (p, n, m)


@check("artin-hasse: eps_p idempotent and additive; iota_p an additive section")
def check_iota(rng, trials):
    for p in (2, 3):
        r = 2
        N = p**r + (p - 1)
        for R in (PrimeField(p), LocalizedRationals(p)):
            Pp = p_typical_profile(p, r)
            for _ in range(trials):
                x, y = _rand(R, Pp, rng), _rand(R, Pp, rng)
                ix, iy = ah.iota_p(p, x, N), ah.iota_p(p, y, N)
                assert core.project(ix, Pp) == x
                assert ah.iota_p(p, x + y, N) == ix + iy
                assert ah.epsilon_p(p, ix) == ix
                z, v = _rand(R, full_profile(N), rng), _rand(R, full_profile(N), rng)
                ez = ah.epsilon_p(p, z)
                assert ah.epsilon_p(p, ez) == ez
                assert ah.epsilon_p(p, z + v) == ez + ah.epsilon_p(p, v)
                if isinstance(R, LocalizedRationals):
                    g = core.ghost(ix)
                    for n, v in g.items():
                        if n in Pp:
                            assert v == core.ghost(x).value(n)
                        else:
                            assert v == 0
                    assert ah.epsilon_product(p, z) == ah.epsilon_p(p, z)


# canonical maps


@check("canonical: phi is a ring map with ghost sigma_n")
def check_phi(rng, trials):
    P = full_profile(6)
    for spec in (canonical.FrobeniusLiftSpec.identity(), canonical.FrobeniusLiftSpec.power()):
        R = spec.ring
        samples = [R.random(rng) for _ in range(trials)]
        assert spec.check_hypotheses(samples, (2, 3, 5))
        for _ in range(trials):
            a, b = RingElement(R, R.random(rng)), RingElement(R, R.random(rng))
            pa, pb = canonical.phi(spec, a, P), canonical.phi(spec, b, P)
            assert canonical.phi(spec, a + b, P) == pa + pb
            assert canonical.phi(spec, a * b, P) == pa * pb
            assert core.ghost(pa).values == tuple(spec.sigma(n, a.value) for n in P)


@check("canonical: Delta identities and the ghost exchange relation")
def check_delta(rng, trials):
    R = Integers()
    for a in (1, 2, 3):
        for b in (1, 2, 3):
            if a * b > 6:
                continue
            for _ in range(trials):
                x = _rand(R, full_profile(a * b), rng)
                d = canonical.delta(x, a, b)
                for n in range(1, a + 1):
                    assert canonical.outer_ghost(d, n) == core.project(core.frobenius(n, x), full_profile(b))
                for n in range(1, b + 1):
                    assert canonical.mapped_ghost(d, n) == core.project(core.frobenius(n, x), full_profile(a))
                y = canonical.random_nested(R, a, b, rng)
                for m in range(1, a + 1):
                    for n in range(1, b + 1):
                        lhs = core.ghost(canonical.mapped_ghost(y, n)).value(m)
                        rhs = core.ghost(canonical.outer_ghost(y, m)).value(n)
                        assert lhs == rhs


# p-adic oracle


@check("padic: W_p(F_p) agrees with Z/p^L")
def check_oracle(rng, trials):
    for p, L in ((2, 3), (3, 2)):
        report = padic.oracle_check(p, L, exhaustive=True)
        assert report.ok, report.counterexample
    for p, L in ((2, 4), (3, 3), (5, 3)):
        report = padic.oracle_check(p, L, trials * 5, seed=rng.randrange(2**32))
        assert report.ok, report.counterexample
    for p, L in ((2, 3), (3, 2), (5, 2)):
        images = set()
        P = p_typical_profile(p, L - 1)
        for _ in range(trials):
            x = _rand(PrimeField(p), P, rng)
            assert padic.padic_to_witt(padic.witt_to_padic(x)) == x
            img = padic.witt_to_padic(core.frobenius(p, x))
            assert img == padic.witt_to_padic(core.project(x, P.quotient(p)))
        for v in range(p**L):
            z = padic.PAdicTrunc(p, L, v)
            images.add(padic.witt_to_padic(padic.padic_to_witt(z)).value)
            t = padic.teichmuller_lift(v % p, L, p)
            assert t**p == t and t.value % p == v % p
        assert len(images) == p**L


@dataclass
class CheckResult:
    name: str
    ok: bool
    seconds: float
    detail: str = ""


def run_all(trials: int = 10, seed: int = 0) -> list[CheckResult]:
    results = []
    for name, fn in _CHECKS:
        rng = random.Random(seed)
        start = time.perf_counter()
        try:
            fn(rng, trials)
            results.append(CheckResult(name, True, time.perf_counter() - start))
        except (AssertionError, NotDivisible, UnsupportedRing, ArithmeticError) as exc:
            results.append(CheckResult(name, False, time.perf_counter() - start, repr(exc)))
    return results


__all__ = ["run_all", "CheckResult", "fv_identities", "frobenius_congruence", "non_congruence_witness"]
