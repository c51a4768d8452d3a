import itertools
import random

import pytest

from witt import core, padic
from witt.errors import UnsupportedRing
from witt.profiles import full_profile, p_typical_profile
from witt.rings import IntegersMod, PrimeField, RingElement


def test_teichmuller_lift_examples():
    F5 = PrimeField(5)
    assert padic.teichmuller_lift(F5(0), 3).value == 0
    assert padic.teichmuller_lift(F5(1), 3).value == 1
    t = padic.teichmuller_lift(F5(2), 3)
    assert t.value == 57 and pow(57, 5, 125) == 57
    with pytest.raises(UnsupportedRing):
        padic.teichmuller_lift(RingElement(IntegersMod(4), 1), 2)


@pytest.mark.parametrize("p,K", [(2, 5), (3, 4), (5, 3), (7, 3)])
def test_teichmuller_properties(p, K):
    rng = random.Random(p)
    for a in range(p):
        t = padic.teichmuller_lift(a, K, p)
        assert t**p == t and t.value % p == a
    for _ in range(50):
        a, b = rng.randrange(p), rng.randrange(p)
        assert padic.teichmuller_lift(a, K, p) * padic.teichmuller_lift(b, K, p) == (
            padic.teichmuller_lift(a * b, K, p)
        )


def test_witt_to_padic_examples():
    F2 = PrimeField(2)
    P = p_typical_profile(2, 2)
    assert padic.witt_to_padic(core.witt_vector(F2, P, [1, 0, 0])).value == 1
    assert padic.witt_to_padic(core.witt_vector(F2, P, [1, 1, 0])).value == 3
    x, y = core.witt_vector(F2, P, [1, 1, 0]), core.witt_vector(F2, P, [1, 0, 1])
    assert (x + y).values == (0, 0, 0)
    assert padic.witt_to_padic(x + core.zero(F2, P)) == padic.witt_to_padic(x)
    with pytest.raises(UnsupportedRing):
        padic.witt_to_padic(core.one(F2, full_profile(3)))


@pytest.mark.parametrize("p,L", [(2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
def test_bijective(p, L):
    P = p_typical_profile(p, L - 1)
    images = set()
    for comps in itertools.product(range(p), repeat=L):
        x = core.witt_vector(PrimeField(p), P, comps)
        z = padic.witt_to_padic(x)
        images.add(z.value)
        assert padic.padic_to_witt(z) == x
    assert len(images) == p**L


def test_oracle_exhaustive():
    for p, L, n in ((2, 3, 64), (3, 2, 81), (2, 2, 16)):
        report = padic.oracle_check(p, L, exhaustive=True)
        assert report.ok and report.checked == n and report.counterexample is None


@pytest.mark.parametrize("p,L", [(2, 4), (3, 3), (5, 3), (5, 4)])
def test_oracle_random(p, L):
    report = padic.oracle_check(p, L, 200, seed=p * L)
    assert report.ok and report.checked == 200
    assert report.to_json()["ok"] is True


@pytest.mark.parametrize("p,L", [(2, 4), (3, 3), (5, 3)])
def test_frobenius_compatibility(p, L):
    rng = random.Random(L)
    P = p_typical_profile(p, L - 1)
    for _ in range(50):
        x = core.random_vector(PrimeField(p), P, rng)
        lhs = padic.witt_to_padic(core.frobenius(p, x))
        rhs = padic.witt_to_padic(core.project(x, P.quotient(p)))
        assert lhs == rhs


def test_oracle_reports_counterexample(monkeypatch):
    # break Witt addition to make sure failures surface with a counterexample
    monkeypatch.setattr(core, "witt_add", lambda x, y, method="auto": x)
    report = padic.oracle_check(2, 2, exhaustive=True)
    assert not report.ok
    assert report.counterexample["op"] == "add"
