"""The Artin-Hasse exponential and the Cartier idempotent eps_p.

``hexp_coeffs`` expands exp(x + x^p/p + x^(p^2)/p^2 + ...) directly;
``hexp_moebius`` expands the product prod_{p not | n} (1 - x^n)^(-mu(n)/n).
The two agree, and both have p-integral coefficients.

eps_p on Witt vectors keeps the ghost components at powers of p and kills
the others.  It is computed from the universal p-integral polynomials in
:func:`witt.universal.epsilon_poly`.  :func:`epsilon_product` is an
independent route through Lambda(A) built from hexp factors; with the
convention f_x = prod (1 - x_n t^n) used throughout, the matching
product is prod_{r >= 0} hexp(x_{p^r} t^{p^r})^(-1)
(see :data:`HEXP_ORIENTATION`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import core
from .errors import PIntegralityViolation, PreconditionError, UnsupportedRing
from .lambda_ring import TruncatedSeries, lambda_to_witt, one_series, reciprocal
from .profiles import (
    DivisorStableProfile,
    full_profile,
    moebius,
    p_typical_profile,
    prime_power_exponent,
    require_prime,
)
from .rings import FiniteField, IntegersMod, LocalizedRationals, PrimeField, Rationals, Ring
from .universal import epsilon_poly

# (inverse, first r): the product of hexp(x_{p^r} t^{p^r})^(-1) over r >= 0
HEXP_ORIENTATION = ("reciprocal", 0)
ORIENTATIONS = (("direct", 0), ("direct", 1), ("reciprocal", 0), ("reciprocal", 1))


@dataclass(frozen=True)
class AHSeries:
    p: int
    coeffs: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def is_p_integral(self) -> bool:
        return all(c.denominator % self.p for c in self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __str__(self):
        return ", ".join(str(c) for c in self.coeffs)


def _series_mul(a: Sequence[Fraction], b: Sequence[Fraction], N: int) -> list[Fraction]:
    out = [Fraction(0)] * (N + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(N + 1 - i):
                if b[j]:
                    out[i + j] += x * b[j]
    return out


def series_exp(g: Sequence[Fraction], N: int) -> list[Fraction]:
    """exp(g) mod x^(N+1) for g with zero constant term.

    Uses E' = g' E, i.e. n e_n = sum_{k=1}^n k g_k e_{n-k}.
    """
    if g and g[0]:
        raise PreconditionError("series_exp needs zero constant term")
    g = list(g) + [Fraction(0)] * (N + 1 - len(g))
    e = [Fraction(1)]
    for n in range(1, N + 1):
        e.append(sum((k * g[k] * e[n - k] for k in range(1, n + 1) if g[k]), Fraction(0)) / n)
    return e


def series_nth_root(f: Sequence[Fraction], n: int) -> list[Fraction]:
    """g with g^n = f and g_0 = 1, for f_0 = 1 (J. C. P. Miller's recurrence)."""
    if f[0] != 1:
        raise PreconditionError("series_nth_root needs constant term 1")
    alpha = Fraction(1, n)
    N = len(f) - 1
    g = [Fraction(1)]
    for m in range(1, N + 1):
        acc = sum(((alpha + 1) * k - m) * f[k] * g[m - k] for k in range(1, m + 1) if f[k])
        g.append(Fraction(acc) / m)
    return g


def _check_p_integral(p: int, coeffs: Sequence[Fraction], what: str) -> AHSeries:
    s = AHSeries(p, tuple(coeffs))
    if not s.is_p_integral():
        raise PIntegralityViolation(f"{what} is not {p}-integral: {s}")
    return s


def hexp_coeffs(p: int, N: int) -> AHSeries:
    """Coefficients of exp(sum_{p^i <= N} x^(p^i) / p^i) up to x^N."""
    require_prime(p)
    if N < 1:
        raise PreconditionError("N must be >= 1")
    g = [Fraction(0)] * (N + 1)
    q = 1
    while q <= N:
        g[q] = Fraction(1, q)
        q *= p
    return _check_p_integral(p, series_exp(g, N), f"hexp_{p}")


def hexp_moebius(p: int, N: int) -> AHSeries:
    """prod_{n <= N, p not | n} (1 - x^n)^(-mu(n)/n), each factor as exp(-mu(n)/n * log(1 - x^n))."""
    require_prime(p)
    if N < 1:
        raise PreconditionError("N must be >= 1")
    acc = [Fraction(1)] + [Fraction(0)] * N
    for n in range(1, N + 1):
        mu = moebius(n)
        if n % p == 0 or mu == 0:
            continue
        # -mu/n * log(1 - x^n) = mu/n * sum_k x^(nk)/k
        g = [Fraction(0)] * (N + 1)
        for k in range(1, N // n + 1):
            g[n * k] = Fraction(mu, n * k)
        acc = _series_mul(acc, series_exp(g, N), N)
    return AHSeries(p, tuple(acc))


# eps_p and iota_p


def _require_zp_algebra(ring: Ring, p: int) -> None:
    if isinstance(ring, LocalizedRationals):
        ok = ring.p == p
    elif isinstance(ring, Rationals):
        ok = True
    elif isinstance(ring, IntegersMod):
        ok = prime_power_exponent(ring.m, p) is not None
    elif isinstance(ring, (PrimeField, FiniteField)):
        ok = ring.p == p
    else:
        ok = False
    if not ok:
        raise UnsupportedRing(f"{ring} is not a Z_({p})-algebra supported by eps_{p}")


def epsilon_p(p: int, x: core.WittVector) -> core.WittVector:
    """eps_p(x): same p-power ghost components as x, all other ghost components zero.

    Only the components x_{p^r} are read.
    """
    require_prime(p)
    ring = x.ring
    _require_zp_algebra(ring, p)
    if not x.profile.is_full():
        raise PreconditionError(f"eps_p works on full profiles, got {x.profile}")
    xs = {2 * (n - 1): v for n, v in x.items() if prime_power_exponent(n, p) is not None}
    zero = ring.zero
    lookup = lambda slot: xs.get(slot, zero)  # noqa: E731
    powers: dict = {}
    out = tuple(epsilon_poly(p, n).evaluate(ring, lookup, powers) for n in x.profile)
    return core.WittVector(x.profile, ring, out)


def iota_p(p: int, x: core.WittVector, N: int) -> core.WittVector:
    """Cartier's additive section W_p -> W of the projection, on full:N.

    ``x`` lives on ptyp:p:r and N must satisfy p^r <= N < p^(r+1), so that
    every p-power index of full:N is covered by x.
    """
    require_prime(p)
    r = len(x.profile) - 1
    if x.profile != p_typical_profile(p, r):
        raise PreconditionError(f"iota_{p} needs a p-typical input, got {x.profile}")
    if not (p**r <= N < p ** (r + 1)):
        raise PreconditionError(f"iota_{p} on ptyp:{p}:{r} needs {p**r} <= N < {p ** (r + 1)}")
    ring = x.ring
    xs = x.as_dict()
    embedded = tuple(xs.get(n, ring.zero) for n in range(1, N + 1))
    return epsilon_p(p, core.WittVector(full_profile(N), ring, embedded))


def _hexp_factor(ring: Ring, h: AHSeries, c, m: int, N: int) -> TruncatedSeries:
    """hexp(c t^m) over ``ring`` truncated at t^N."""
    out = [ring.zero] * (N + 1)
    out[0] = ring.one
    for k in range(1, N // m + 1):
        out[k * m] = ring.mul(ring.from_fraction(h[k]), ring.pow(c, k))
    return TruncatedSeries(ring, tuple(out))


def epsilon_product(
    p: int, x: core.WittVector, orientation: tuple[str, int] = HEXP_ORIENTATION
) -> core.WittVector:
    """eps_p through Lambda(A) as a product of hexp factors.

    ``orientation`` = (``"direct"`` or ``"reciprocal"``, first r).
    """
    require_prime(p)
    ring = x.ring
    _require_zp_algebra(ring, p)
    N = x.profile.max
    h = hexp_coeffs(p, N)
    acc = one_series(ring, N)
    inverse, r0 = orientation
    q = p**r0
    while q <= N:
        factor = _hexp_factor(ring, h, x.value(q), q, N)
        acc = acc * (reciprocal(factor) if inverse == "reciprocal" else factor)
        q *= p
    return lambda_to_witt(acc)


def matching_orientations(p: int, samples: Sequence[core.WittVector]) -> list[tuple[str, int]]:
    """Which hexp product orientations reproduce the ghost definition of eps_p on ``samples``."""
    return [
        o for o in ORIENTATIONS if all(epsilon_product(p, x, o) == epsilon_p(p, x) for x in samples)
    ]


def project_p_typical(x: core.WittVector, p: int) -> core.WittVector:
    """pi: W_{full:N} -> W_{ptyp:p:r}, the largest p-typical profile inside."""
    r = 0
    while p ** (r + 1) in x.profile:
        r += 1
    return core.project(x, p_typical_profile(p, r))


def p_power_indices(profile: DivisorStableProfile, p: int) -> list[int]:
    return [n for n in profile if prime_power_exponent(n, p) is not None]
