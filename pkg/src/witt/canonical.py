"""Canonical maps into Witt rings.

``phi`` lifts a ring with commuting Frobenius lifts into its Witt ring so
that the ghost components of phi(a) are sigma_n(a).  ``delta`` is the
comultiplication W -> W o W characterized by hat-w_n o Delta = F_n.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import core
from .errors import DivisibilityViolation, NotDivisible, PreconditionError, ProfileMismatch
from .profiles import DivisorStableProfile, divisors, factorize, full_profile
from .rings import Integers, PolynomialRing, Ring, RingElement
from .universal import delta_poly


@dataclass(frozen=True)
class FrobeniusLiftSpec:
    """A ring with a commuting family of Frobenius lifts sigma_p.

    ``identity``: sigma_p = id on Z (a lift by Fermat's little theorem).
    ``power``: sigma_p(f)(u) = f(u^p) on Z[u].
    """

    ring: Ring
    family: str

    def __post_init__(self):
        if self.family == "identity" and self.ring != Integers():
            raise PreconditionError("the identity lift is defined on the integers")
        if self.family == "power" and not (
            isinstance(self.ring, PolynomialRing) and self.ring.base == Integers()
        ):
            raise PreconditionError("power substitution is defined on Z[u]")
        if self.family not in ("identity", "power"):
            raise PreconditionError(f"unknown Frobenius lift family {self.family!r}")

    @classmethod
    def identity(cls) -> "FrobeniusLiftSpec":
        return cls(Integers(), "identity")

    @classmethod
    def power(cls, var: str = "u") -> "FrobeniusLiftSpec":
        return cls(PolynomialRing(Integers(), var), "power")

    def sigma(self, n: int, a):
        """sigma_n on payloads; sigma_n is the composite of sigma_p over n's factorization."""
        if self.family == "identity":
            return a
        # f(u) -> f(u^n); the composite of u -> u^p over the factorization
        if not a:
            return a
        out = [0] * ((len(a) - 1) * n + 1)
        for k, c in enumerate(a):
            out[k * n] = c
        return tuple(out)

    def sigma_composed(self, n: int, a):
        """sigma_n built literally as sigma_{p1}^{e1} o ... o sigma_{pr}^{er}."""
        for p, e in factorize(n):
            for _ in range(e):
                a = self.sigma(p, a)
        return a

    def check_hypotheses(self, samples, primes) -> bool:
        """sigma_p(x) = x^p mod p and sigma_p sigma_q = sigma_q sigma_p on the samples."""
        ring = self.ring
        for x in samples:
            for p in primes:
                diff = ring.sub(self.sigma(p, x), ring.pow(x, p))
                try:
                    ring.exact_div_int(diff, p)
                except NotDivisible:
                    return False
                for q in primes:
                    if self.sigma(p, self.sigma(q, x)) != self.sigma(q, self.sigma(p, x)):
                        return False
        return True


def phi(spec: FrobeniusLiftSpec, a: RingElement, profile: DivisorStableProfile) -> core.WittVector:
    """The unique ring map A -> W_P(A) with w_n(phi(a)) = sigma_n(a).

    Components follow the recursion
    y_n = (sigma_n(a) - sum_{d | n, d < n} d y_d^(n/d)) / n,
    whose divisibility is guaranteed by the Frobenius-lift hypotheses.
    """
    ring = spec.ring
    if a.ring != ring:
        raise PreconditionError(f"{a} is not in {ring}")
    y: dict[int, object] = {}
    for n in profile:
        acc = spec.sigma_composed(n, a.value)
        for d in divisors(n)[:-1]:
            acc = ring.sub(acc, ring.mul(ring.from_int(d), ring.pow(y[d], n // d)))
        try:
            y[n] = ring.exact_div_int(acc, n)
        except NotDivisible as exc:
            raise DivisibilityViolation(f"phi component {n} is not integral: {exc}") from None
    return core.WittVector(profile, ring, tuple(y[n] for n in profile))


@dataclass(frozen=True)
class NestedWitt:
    """An element of W_{full:a}(W_{full:b}(A)): one inner Witt vector per outer index."""

    outer: DivisorStableProfile
    inner: tuple[core.WittVector, ...]

    def __post_init__(self):
        if len(self.inner) != len(self.outer):
            raise ProfileMismatch("one inner vector per outer index is required")
        if len({(v.profile, v.ring) for v in self.inner}) > 1:
            raise ProfileMismatch("inner vectors must share profile and ring")

    def __getitem__(self, n: int) -> core.WittVector:
        return self.inner[self.outer.position(n)]

    @property
    def inner_profile(self) -> DivisorStableProfile:
        return self.inner[0].profile

    @property
    def ring(self) -> Ring:
        return self.inner[0].ring

    def __str__(self):
        return "[" + "; ".join(v.format(",") for v in self.inner) + "]"


def delta(x: core.WittVector, a: int, b: int) -> NestedWitt:
    """Delta(x) in W_{full:a}(W_{full:b}(A)) for x on full:(a*b)."""
    if x.profile != full_profile(a * b):
        raise ProfileMismatch(f"delta with a={a}, b={b} needs input on full:{a * b}")
    ring = x.ring
    xs = {2 * (d - 1): v for d, v in x.items()}
    powers: dict = {}
    inner_profile = full_profile(b)
    rows = []
    for n in range(1, a + 1):
        comps = tuple(
            delta_poly(a, b, n, m).evaluate(ring, xs.__getitem__, powers) for m in inner_profile
        )
        rows.append(core.WittVector(inner_profile, ring, comps))
    return NestedWitt(full_profile(a), tuple(rows))


def outer_ghost(y: NestedWitt, n: int) -> core.WittVector:
    """hat-w_n(y) = sum_{d | n} d * y_d^(n/d), computed in the inner Witt ring."""
    acc = core.zero(y.ring, y.inner_profile)
    for d in divisors(n):
        acc = core.witt_add(acc, core.scalar_mul(d, core.witt_pow(y[d], n // d)))
    return acc


def mapped_ghost(y: NestedWitt, n: int) -> core.WittVector:
    """W(w_n)(y) = (w_n(y_m))_m, a Witt vector on the outer profile."""
    if n not in y.inner_profile:
        raise ProfileMismatch(f"w_{n} is not defined on {y.inner_profile}")
    comps = tuple(core.ghost(v).value(n) for v in y.inner)
    return core.WittVector(y.outer, y.ring, comps)


def random_nested(ring: Ring, a: int, b: int, rng) -> NestedWitt:
    inner = full_profile(b)
    return NestedWitt(
        full_profile(a), tuple(core.random_vector(ring, inner, rng) for _ in range(a))
    )
