"""Universal polynomials behind every Witt-vector structure map.

Every family here is defined by a ghost-component identity and solved
recursively over Q: at level n the unknown component appears as
``n * P_n`` plus lower-level contributions, so

    P_n = (target_n - sum_{d | n, d < n} d * P_d^(n/d)) / n.

The result is then checked to be integral (or p-integral for the
Artin-Hasse idempotent).  A surviving denominator raises
:class:`IntegralityViolation`; that would mean a bug, never a user error.

Results are cached process-wide.  Cache writes are single dict
assignments of deterministic values, so concurrent callers may at worst
compute the same entry twice.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from typing import NamedTuple

from .errors import IntegralityViolation, LevelTooLarge, PIntegralityViolation, PreconditionError
from .profiles import divisors, prime_power_exponent, require_prime
from .upoly import UPoly, X, Y


class Kind(enum.Enum):
    SUM = "sum"
    PRODUCT = "product"
    NEG = "neg"


class AtPrime(NamedTuple):
    p: int


GLOBAL = None

_MAX_LEVEL = 24
_cache: dict[tuple, UPoly] = {}


@lru_cache(maxsize=None)
def _weight_count(n: int) -> int:
    """Partitions of n into divisors of n; bounds the monomial count at level n."""
    ways = [1] + [0] * n
    for d in divisors(n):
        for i in range(d, n + 1):
            ways[i] += ways[i - d]
    return ways[n]


def set_max_level(n: int) -> None:
    """Raise or lower the size cap for universal polynomials.

    A level L is accepted when it has no more divisor-partitions than the
    cap level does, so prime powers well above the cap (25, 27, 32) stay
    available while highly composite levels (30, 36) are refused.
    """
    global _MAX_LEVEL
    if n < 1:
        raise PreconditionError("max level must be positive")
    _MAX_LEVEL = n


def max_level() -> int:
    return _MAX_LEVEL


def _check_level(n: int) -> None:
    if n < 1:
        raise PreconditionError(f"level must be >= 1, got {n}")
    if _weight_count(n) > _weight_count(_MAX_LEVEL):
        raise LevelTooLarge(
            f"level {n} exceeds the configured cap (level {_MAX_LEVEL}); see set_max_level"
        )


def clear_cache() -> None:
    _cache.clear()


def assert_integral(poly: UPoly, locality: AtPrime | None = GLOBAL) -> bool:
    """True when every coefficient is an integer (GLOBAL) or p-integral (AtPrime(p))."""
    if locality is None:
        return poly.is_integral()
    return poly.is_p_integral(locality.p)


def witt_polynomial(n: int, family: str = "X") -> UPoly:
    """w_n = sum_{d | n} d * X_d^(n/d)."""
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    key = ("w", family, n)
    poly = _cache.get(key)
    if poly is None:
        var = X if family == "X" else Y
        poly = UPoly()
        for d in divisors(n):
            poly = poly + var(d) ** (n // d) * d
        _cache[key] = poly
    return poly


def _ghost_sum(polys: dict[int, UPoly], n: int) -> UPoly:
    """sum_{d | n, d < n} d * polys[d]^(n/d)."""
    acc = UPoly()
    for d in divisors(n)[:-1]:
        acc = acc + polys[d] ** (n // d) * d
    return acc


def _solve_level(target: UPoly, lower: dict[int, UPoly], n: int) -> UPoly:
    return (target - _ghost_sum(lower, n)).div_int(n)


def _require_integral(poly: UPoly, what: str) -> UPoly:
    if not poly.is_integral():
        raise IntegralityViolation(f"{what} has a non-integral coefficient: {poly}")
    return poly


def structural_poly(kind: Kind | str, n: int) -> UPoly:
    """Component n of the universal sum, product or negation.

    Solves w_n(S) = w_n(X) + w_n(Y), w_n(Z) = w_n(X) w_n(Y) or
    w_n(I) = -w_n(X) respectively.
    """
    kind = Kind(kind)
    _check_level(n)
    key = (kind, n)
    poly = _cache.get(key)
    if poly is not None:
        return poly
    lower = {d: structural_poly(kind, d) for d in divisors(n)[:-1]}
    if kind is Kind.SUM:
        target = witt_polynomial(n, "X") + witt_polynomial(n, "Y")
    elif kind is Kind.PRODUCT:
        target = witt_polynomial(n, "X") * witt_polynomial(n, "Y")
    else:
        target = -witt_polynomial(n, "X")
    poly = _require_integral(_solve_level(target, lower, n), f"{kind.value} polynomial {n}")
    _cache[key] = poly
    return poly


def frobenius_poly(n: int, m: int) -> UPoly:
    """Component m of F_n, defined by w_m(F_n x) = w_{nm}(x)."""
    if n < 1 or m < 1:
        raise PreconditionError("frobenius_poly needs n, m >= 1")
    _check_level(n * m)
    key = ("F", n, m)
    poly = _cache.get(key)
    if poly is not None:
        return poly
    lower = {d: frobenius_poly(n, d) for d in divisors(m)[:-1]}
    poly = _solve_level(witt_polynomial(n * m), lower, m)
    poly = _require_integral(poly, f"Frobenius polynomial F_{n}, component {m}")
    _cache[key] = poly
    return poly


def epsilon_poly(p: int, n: int) -> UPoly:
    """Component n of the Artin-Hasse idempotent eps_p.

    eps_p keeps the ghost components at powers of p and kills all others;
    the component polynomials involve only the X_{p^r} and have
    p-integral coefficients.
    """
    require_prime(p)
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    key = ("eps", p, n)
    poly = _cache.get(key)
    if poly is not None:
        return poly
    lower = {d: epsilon_poly(p, d) for d in divisors(n)[:-1]}
    target = witt_polynomial(n) if prime_power_exponent(n, p) is not None else UPoly()
    poly = _solve_level(target, lower, n)
    if not poly.is_p_integral(p):
        raise PIntegralityViolation(f"eps_{p} component {n} is not {p}-integral: {poly}")
    _cache[key] = poly
    return poly


def epsilon_polys(p: int, N: int) -> list[UPoly]:
    """Components 1..N of eps_p; entry i is component i + 1."""
    return [epsilon_poly(p, n) for n in range(1, N + 1)]


def _delta_inner_ghost(n: int, m: int) -> UPoly:
    """w_m of the n-th outer component of Delta(X).

    From hat-w_n(Delta x) = F_n(x), applying w_m on the inner level gives
    sum_{d | n} d * G_{d,m}^(n/d) = w_{nm}(x).
    """
    key = ("dG", n, m)
    poly = _cache.get(key)
    if poly is None:
        lower = {d: _delta_inner_ghost(d, m) for d in divisors(n)[:-1]}
        poly = _solve_level(witt_polynomial(n * m), lower, n)
        _cache[key] = poly
    return poly


def _delta_component(n: int, m: int) -> UPoly:
    key = ("D", n, m)
    poly = _cache.get(key)
    if poly is None:
        lower = {e: _delta_component(n, e) for e in divisors(m)[:-1]}
        poly = _solve_level(_delta_inner_ghost(n, m), lower, m)
        poly = _require_integral(poly, f"Delta component ({n}, {m})")
        _cache[key] = poly
    return poly


def delta_poly(a: int, b: int, n: int, m: int) -> UPoly:
    """Component (n, m) of Delta: W_{full:ab} -> W_{full:a}(W_{full:b}).

    Outer index n <= a, inner index m <= b.  The polynomial depends only on
    (n, m); a and b fix the truncation the caller works in.
    """
    if not (1 <= n <= a and 1 <= m <= b):
        raise PreconditionError(f"need 1 <= n <= a and 1 <= m <= b, got n={n}, m={m}, a={a}, b={b}")
    _check_level(n * m)
    return _delta_component(n, m)
