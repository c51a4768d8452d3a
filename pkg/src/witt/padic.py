"""An independent model of Z_p mod p^K, used as an oracle for W_p(F_p).

Nothing here touches the universal polynomials: residues are plain
integers, Teichmueller representatives come from p-power iteration, and
the comparison map sends a Witt vector to sum_n tau(x_{p^n}) p^n.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from . import core
from .errors import UnsupportedRing
from .profiles import p_typical_profile, require_prime
from .rings import PrimeField, RingElement


@dataclass(frozen=True)
class PAdicTrunc:
    p: int
    K: int
    value: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.p**self.K)

    @property
    def modulus(self) -> int:
        return self.p**self.K

    def _other(self, other) -> int:
        if isinstance(other, int):
            return other
        if (other.p, other.K) != (self.p, self.K):
            raise ValueError("precision mismatch")
        return other.value

    def __add__(self, other):
        return PAdicTrunc(self.p, self.K, self.value + self._other(other))

    def __mul__(self, other):
        return PAdicTrunc(self.p, self.K, self.value * self._other(other))

    def __pow__(self, e: int):
        return PAdicTrunc(self.p, self.K, pow(self.value, e, self.modulus))

    def digits(self) -> list[int]:
        v, out = self.value, []
        for _ in range(self.K):
            v, r = divmod(v, self.p)
            out.append(r)
        return out


def teichmuller_lift(a: RingElement | int, K: int, p: int | None = None) -> PAdicTrunc:
    """tau(a) mod p^K: iterate x -> x^p from any lift until it stabilizes.

    Lifts that agree mod p^i agree mod p^(i+1) after one more p-th power,
    so K iterations always suffice.
    """
    if isinstance(a, RingElement):
        if not isinstance(a.ring, PrimeField):
            raise UnsupportedRing(f"Teichmueller lifts are computed from F_p, not {a.ring}")
        p, a = a.ring.p, a.value
    require_prime(p)
    mod = p**K
    x = a % mod
    for _ in range(K + 1):
        nxt = pow(x, p, mod)
        if nxt == x:
            break
        x = nxt
    return PAdicTrunc(p, K, x)


def witt_to_padic(x: core.WittVector) -> PAdicTrunc:
    """sum_{n < L} tau(x_{p^n}) p^n mod p^L for x in W_{ptyp:p:L-1}(F_p)."""
    ring = x.ring
    if not isinstance(ring, PrimeField):
        raise UnsupportedRing(f"the p-adic comparison map needs F_p coefficients, not {ring}")
    p = ring.p
    L = len(x.profile)
    if x.profile != p_typical_profile(p, L - 1):
        raise UnsupportedRing(f"expected a {p}-typical profile, got {x.profile}")
    total = 0
    for i, v in enumerate(x.values):
        total += teichmuller_lift(v, L, p).value * p**i
    return PAdicTrunc(p, L, total)


def padic_to_witt(z: PAdicTrunc) -> core.WittVector:
    """Inverse of :func:`witt_to_padic`: peel off Teichmueller digits."""
    p, L = z.p, z.K
    v = z.value
    comps = []
    for i in range(L):
        a = v % p
        comps.append(a)
        v = (v - teichmuller_lift(a, L, p).value) // p
    return core.WittVector(p_typical_profile(p, L - 1), PrimeField(p), tuple(comps))


@dataclass
class OracleReport:
    p: int
    L: int
    checked: int = 0
    ok: bool = True
    counterexample: dict | None = field(default=None)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "len": self.L,
            "checked": self.checked,
            "ok": self.ok,
            "counterexample": self.counterexample,
        }


def _pairs(p: int, L: int, trials: int, exhaustive: bool, rng: random.Random):
    if exhaustive:
        vecs = list(itertools.product(range(p), repeat=L))
        yield from itertools.product(vecs, vecs)
    else:
        for _ in range(trials):
            yield (
                tuple(rng.randrange(p) for _ in range(L)),
                tuple(rng.randrange(p) for _ in range(L)),
            )


def oracle_check(
    p: int, L: int, trials: int = 100, *, exhaustive: bool = False, seed: int = 0
) -> OracleReport:
    """Compare Witt sums and products in W_{ptyp:p:L-1}(F_p) with arithmetic mod p^L."""
    require_prime(p)
    ring = PrimeField(p)
    profile = p_typical_profile(p, L - 1)
    report = OracleReport(p, L)
    rng = random.Random(seed)
    for xs, ys in _pairs(p, L, trials, exhaustive, rng):
        x = core.WittVector(profile, ring, xs)
        y = core.WittVector(profile, ring, ys)
        fx, fy = witt_to_padic(x), witt_to_padic(y)
        for op, witt_op, padic_op in (
            ("add", core.witt_add, PAdicTrunc.__add__),
            ("mul", core.witt_mul, PAdicTrunc.__mul__),
        ):
            got = witt_to_padic(witt_op(x, y))
            want = padic_op(fx, fy)
            if got != want:
                report.ok = False
                report.counterexample = {
                    "op": op,
                    "x": list(xs),
                    "y": list(ys),
                    "witt_image": got.value,
                    "padic": want.value,
                }
                return report
        report.checked += 1
    return report
