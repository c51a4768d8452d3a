"""Truncated Witt vectors over an arbitrary coefficient ring.

Ring operations evaluate the universal polynomials from
:mod:`witt.universal`, which is valid over every ring.  Over ``Rationals``
and ``LocalizedRationals`` a ghost-coordinate shortcut (ghost, operate
componentwise, unghost) is used by default; it is invalid over rings with
torsion and is never used there.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from .errors import (
    AmbiguousDivision,
    NotDivisible,
    NotInGhostImage,
    NotUnique,
    PreconditionError,
    ProfileMismatch,
    RingMismatch,
    UnsupportedRing,
)
from .profiles import DivisorStableProfile, divisors
from .rings import LocalizedRationals, Rationals, Ring, RingElement
from .universal import Kind, frobenius_poly, structural_poly


@dataclass(frozen=True)
class _Indexed:
    profile: DivisorStableProfile
    ring: Ring
    values: tuple  # ring payloads, one per profile index, in profile order

    def __post_init__(self):
        if len(self.values) != len(self.profile):
            raise ProfileMismatch(
                f"{len(self.values)} components given for profile {self.profile} "
                f"of length {len(self.profile)}"
            )

    def __getitem__(self, n: int) -> RingElement:
        return RingElement(self.ring, self.values[self.profile.position(n)])

    def value(self, n: int):
        return self.values[self.profile.position(n)]

    @property
    def components(self) -> tuple[RingElement, ...]:
        return tuple(RingElement(self.ring, v) for v in self.values)

    def items(self):
        return zip(self.profile.indices, self.values)

    def as_dict(self) -> dict:
        return dict(self.items())

    def format(self, sep: str = ",") -> str:
        return sep.join(self.ring.format(v) for v in self.values)

    def __str__(self):
        return "(" + self.format(", ") + ")"

    def _check_compatible(self, other: "_Indexed") -> None:
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        if self.profile != other.profile:
            raise ProfileMismatch(f"{self.profile} vs {other.profile}")


class WittVector(_Indexed):
    """Witt vector (x_n) indexed by a divisor-stable profile."""

    def __add__(self, other):
        return witt_add(self, other)

    def __sub__(self, other):
        return witt_sub(self, other)

    def __mul__(self, other):
        if isinstance(other, int):
            return scalar_mul(other, self)
        return witt_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return scalar_mul(other, self)
        return NotImplemented

    def __neg__(self):
        return witt_neg(self)

    def __pow__(self, e: int):
        return witt_pow(self, e)

    def __repr__(self):
        return f"WittVector({self.ring}, {self.profile}, {self})"


class GhostVector(_Indexed):
    """Ghost components (w_n(x)); arithmetic is componentwise."""

    def _zip(self, other, op):
        self._check_compatible(other)
        return GhostVector(self.profile, self.ring, tuple(map(op, self.values, other.values)))

    def __add__(self, other):
        return self._zip(other, self.ring.add)

    def __sub__(self, other):
        return self._zip(other, self.ring.sub)

    def __mul__(self, other):
        return self._zip(other, self.ring.mul)

    def __neg__(self):
        return GhostVector(self.profile, self.ring, tuple(map(self.ring.neg, self.values)))

    def __repr__(self):
        return f"GhostVector({self.ring}, {self.profile}, {self})"


def _payloads(ring: Ring, comps: Iterable[Any]) -> tuple:
    out = []
    for c in comps:
        if isinstance(c, RingElement):
            if c.ring != ring:
                raise RingMismatch(f"component in {c.ring}, expected {ring}")
            out.append(c.value)
        elif isinstance(c, str):
            out.append(ring.parse(c))
        else:
            out.append(ring.normalize(c))
    return tuple(out)


def witt_vector(ring: Ring, profile: DivisorStableProfile, comps: Sequence[Any]) -> WittVector:
    """Build a Witt vector from ints, fractions, strings, payloads or RingElements."""
    return WittVector(profile, ring, _payloads(ring, comps))


def ghost_vector(ring: Ring, profile: DivisorStableProfile, comps: Sequence[Any]) -> GhostVector:
    return GhostVector(profile, ring, _payloads(ring, comps))


def zero(ring: Ring, profile: DivisorStableProfile) -> WittVector:
    return WittVector(profile, ring, (ring.zero,) * len(profile))


def one(ring: Ring, profile: DivisorStableProfile) -> WittVector:
    return teichmuller(RingElement(ring, ring.one), profile)


def teichmuller(a: RingElement, profile: DivisorStableProfile) -> WittVector:
    """[a] = (a, 0, 0, ...)."""
    ring = a.ring
    return WittVector(profile, ring, (a.value,) + (ring.zero,) * (len(profile) - 1))


def random_vector(ring: Ring, profile: DivisorStableProfile, rng) -> WittVector:
    return WittVector(profile, ring, tuple(ring.random(rng) for _ in profile))


# ghost map


def _ghost_values(ring: Ring, profile: DivisorStableProfile, x: dict) -> tuple:
    out = []
    for n in profile:
        acc = ring.zero
        for d in divisors(n):
            acc = ring.add(acc, ring.mul(ring.from_int(d), ring.pow(x[d], n // d)))
        out.append(acc)
    return tuple(out)


def ghost(x: WittVector) -> GhostVector:
    """Ghost components w_n(x) = sum_{d | n} d x_d^(n/d)."""
    return GhostVector(x.profile, x.ring, _ghost_values(x.ring, x.profile, x.as_dict()))


def _unghost_values(ring: Ring, profile: DivisorStableProfile, g: dict) -> tuple:
    y: dict[int, Any] = {}
    for n in profile:
        acc = g[n]
        for d in divisors(n)[:-1]:
            acc = ring.sub(acc, ring.mul(ring.from_int(d), ring.pow(y[d], n // d)))
        try:
            y[n] = ring.exact_div_int(acc, n)
        except NotUnique as exc:
            raise AmbiguousDivision(f"cannot unghost over {ring}: {exc}") from None
        except NotDivisible as exc:
            raise NotInGhostImage(f"not a ghost vector over {ring} at index {n}: {exc}") from None
    return tuple(y[n] for n in profile)


def unghost(g: GhostVector) -> WittVector:
    """The unique Witt vector whose ghost components are ``g``."""
    return WittVector(g.profile, g.ring, _unghost_values(g.ring, g.profile, g.as_dict()))


# ring operations


def _use_ghost(ring: Ring, method: str) -> bool:
    if method == "auto":
        return type(ring) in (Rationals, LocalizedRationals)
    if method == "universal":
        return False
    if method != "ghost":
        raise PreconditionError(f"method must be auto, universal or ghost, got {method!r}")
    if not ring.torsion_free:
        raise UnsupportedRing(f"the ghost shortcut is invalid over {ring}, which has torsion")
    return True


def _check(x: WittVector, y: WittVector) -> None:
    if x.ring != y.ring:
        raise RingMismatch(f"{x.ring} vs {y.ring}")
    if x.profile != y.profile:
        raise ProfileMismatch(f"{x.profile} vs {y.profile}")


def _evaluate_structural(kind: Kind, x: WittVector, y: WittVector | None) -> WittVector:
    ring, profile = x.ring, x.profile
    xs = {2 * (n - 1): v for n, v in x.items()}
    if y is not None:
        xs.update({2 * (n - 1) + 1: v for n, v in y.items()})
    powers: dict = {}
    lookup = xs.__getitem__
    out = tuple(structural_poly(kind, n).evaluate(ring, lookup, powers) for n in profile)
    return WittVector(profile, ring, out)


def _via_ghost(x: WittVector, y: WittVector | None, op) -> WittVector:
    ring, profile = x.ring, x.profile
    gx = _ghost_values(ring, profile, x.as_dict())
    if y is None:
        g = tuple(map(op, gx))
    else:
        gy = _ghost_values(ring, profile, y.as_dict())
        g = tuple(map(op, gx, gy))
    return WittVector(profile, ring, _unghost_values(ring, profile, dict(zip(profile, g))))


def witt_add(x: WittVector, y: WittVector, method: str = "auto") -> WittVector:
    _check(x, y)
    if _use_ghost(x.ring, method):
        return _via_ghost(x, y, x.ring.add)
    return _evaluate_structural(Kind.SUM, x, y)


def witt_mul(x: WittVector, y: WittVector, method: str = "auto") -> WittVector:
    _check(x, y)
    if _use_ghost(x.ring, method):
        return _via_ghost(x, y, x.ring.mul)
    return _evaluate_structural(Kind.PRODUCT, x, y)


def witt_neg(x: WittVector, method: str = "auto") -> WittVector:
    if _use_ghost(x.ring, method):
        return _via_ghost(x, None, x.ring.neg)
    return _evaluate_structural(Kind.NEG, x, None)


def witt_sub(x: WittVector, y: WittVector) -> WittVector:
    return witt_add(x, witt_neg(y))


def scalar_mul(k: int, x: WittVector) -> WittVector:
    """k * x for an integer k (repeated Witt addition)."""
    if k < 0:
        return scalar_mul(-k, witt_neg(x))
    acc = zero(x.ring, x.profile)
    base = x
    while k:
        if k & 1:
            acc = witt_add(acc, base)
        k >>= 1
        if k:
            base = witt_add(base, base)
    return acc


def witt_pow(x: WittVector, e: int) -> WittVector:
    if e < 0:
        raise PreconditionError("negative exponent")
    acc = one(x.ring, x.profile)
    base = x
    while e:
        if e & 1:
            acc = witt_mul(acc, base)
        e >>= 1
        if e:
            base = witt_mul(base, base)
    return acc


# Frobenius, Verschiebung, projections


def verschiebung(n: int, x: WittVector, target: DivisorStableProfile) -> WittVector:
    """V_n: component nm of the result is x_m, other components vanish.

    ``x`` must live on ``target.quotient(n)`` = {m : nm in target}.
    """
    if n < 1:
        raise PreconditionError("n must be >= 1")
    source = target.quotient(n)
    if x.profile != source:
        raise ProfileMismatch(f"V_{n} into {target} needs input on {source}, got {x.profile}")
    ring = x.ring
    xs = x.as_dict()
    out = tuple(xs[k // n] if k % n == 0 else ring.zero for k in target)
    return WittVector(target, ring, out)


def frobenius(n: int, x: WittVector) -> WittVector:
    """F_n: W_P -> W_{P'} with P' = {m : nm in P}, defined by w_m(F_n x) = w_{nm}(x)."""
    if n < 1:
        raise PreconditionError("n must be >= 1")
    target = x.profile.quotient(n)
    ring = x.ring
    xs = {2 * (d - 1): v for d, v in x.items()}
    powers: dict = {}
    out = tuple(frobenius_poly(n, m).evaluate(ring, xs.__getitem__, powers) for m in target)
    return WittVector(target, ring, out)


def project(x: WittVector, sub: DivisorStableProfile) -> WittVector:
    """Restrict to a smaller divisor-stable profile (a ring homomorphism)."""
    if not sub.is_subprofile_of(x.profile):
        raise ProfileMismatch(f"{sub} is not contained in {x.profile}")
    xs = x.as_dict()
    return WittVector(sub, x.ring, tuple(xs[n] for n in sub))


def teichmuller_scale(a: RingElement, x: WittVector) -> WittVector:
    """[a] * x = (a^n x_n), computed directly."""
    ring = x.ring
    return WittVector(
        x.profile, ring, tuple(ring.mul(ring.pow(a.value, n), v) for n, v in x.items())
    )


def decompose(x: WittVector) -> list[tuple[int, RingElement]]:
    """Nonzero components (n, x_n); x is the sum of V_n[x_n] over them."""
    return [(n, RingElement(x.ring, v)) for n, v in x.items() if not x.ring.is_zero(v)]


def reassemble(
    pieces: Iterable[tuple[int, RingElement]], ring: Ring, profile: DivisorStableProfile
) -> WittVector:
    """sum of V_n[a] for (n, a) in ``pieces``, each Teichmueller on profile.quotient(n)."""
    acc = zero(ring, profile)
    for n, a in pieces:
        acc = witt_add(acc, verschiebung(n, teichmuller(a, profile.quotient(n)), profile))
    return acc
