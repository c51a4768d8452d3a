"""Divisor-stable index sets and the small number theory they need.

A profile is a finite set of positive integers that contains 1 and is
closed under taking divisors.  It fixes the truncation level of a Witt
ring: ``full_profile(N)`` gives the big Witt vectors of length N and
``p_typical_profile(p, k)`` the p-typical ones of length k + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import (
    EmptyOutputProfile,
    NotDivisorStable,
    NotPrime,
    ParseError,
    PreconditionError,
)


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n`` as ((p, e), ...) by trial division."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


def require_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return p


@lru_cache(maxsize=4096)
def divisors(n: int) -> tuple[int, ...]:
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    large = [n // d for d in reversed(small) if d * d != n]
    return tuple(small + large)


def moebius(n: int) -> int:
    """The Moebius function."""
    if n < 1:
        raise PreconditionError("moebius is defined for n >= 1")
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def prime_power_exponent(n: int, p: int) -> int | None:
    """Return r with n == p**r, or None when n is not a power of p."""
    r = 0
    while n % p == 0:
        n //= p
        r += 1
    return r if n == 1 else None


@dataclass(frozen=True)
class DivisorStableProfile:
    indices: tuple[int, ...]

    def __post_init__(self):
        if list(self.indices) != sorted(set(self.indices)):
            raise PreconditionError("profile indices must be strictly increasing")
        _check_divisor_stable(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, n) -> bool:
        return n in self._members

    @property
    def _members(self) -> frozenset:
        # cached on first use; dataclass is frozen so bypass __setattr__
        try:
            return self.__dict__["_member_set"]
        except KeyError:
            s = frozenset(self.indices)
            object.__setattr__(self, "_member_set", s)
            return s

    @property
    def max(self) -> int:
        return self.indices[-1]

    def position(self, n: int) -> int:
        return self.indices.index(n)

    def quotient(self, n: int) -> "DivisorStableProfile":
        """The profile {m : n*m in self}; source of F_n, target-side of V_n."""
        if n not in self:
            raise EmptyOutputProfile(f"{n} is not an index of {self}")
        return DivisorStableProfile(tuple(m for m in self.indices if n * m in self))

    def is_subprofile_of(self, other: "DivisorStableProfile") -> bool:
        return self._members <= other._members

    def is_full(self) -> bool:
        return self.indices == tuple(range(1, len(self.indices) + 1))

    def prime_base(self) -> int | None:
        """p when the profile is {1, p, ..., p^k} with k >= 1, else None."""
        if len(self.indices) < 2:
            return None
        p = self.indices[1]
        if is_prime(p) and all(prime_power_exponent(n, p) is not None for n in self.indices):
            return p
        return None

    def __str__(self) -> str:
        if self.is_full():
            return f"full:{self.max}"
        p = self.prime_base()
        if p is not None and self.indices == tuple(p**i for i in range(len(self.indices))):
            return f"ptyp:{p}:{len(self.indices) - 1}"
        return "set:" + ",".join(map(str, self.indices))


def _check_divisor_stable(indices: Iterable[int]) -> None:
    members = set(indices)
    if not members:
        raise NotDivisorStable(1, 1)
    for n in sorted(members):
        if n < 1:
            raise PreconditionError(f"profile indices must be positive, got {n}")
        for d in divisors(n):
            if d != n and d not in members:
                raise NotDivisorStable(d, n)
    if 1 not in members:
        raise NotDivisorStable(1, min(members))


def full_profile(N: int) -> DivisorStableProfile:
    if N < 1:
        raise PreconditionError(f"full profile needs N >= 1, got {N}")
    return DivisorStableProfile(tuple(range(1, N + 1)))


def p_typical_profile(p: int, k: int) -> DivisorStableProfile:
    require_prime(p)
    if k < 0:
        raise PreconditionError(f"p-typical length exponent must be >= 0, got {k}")
    return DivisorStableProfile(tuple(p**i for i in range(k + 1)))


def validate_profile(indices: Iterable[int]) -> DivisorStableProfile:
    """Sort, deduplicate and check divisor stability."""
    idx = tuple(sorted(set(int(i) for i in indices)))
    return DivisorStableProfile(idx)


def parse_profile(text: str) -> DivisorStableProfile:
    """Parse ``full:<N>``, ``ptyp:<p>:<k>`` or ``set:<comma list>``."""
    kind, _, rest = text.strip().partition(":")
    try:
        if kind == "full":
            args = [int(rest)]
        elif kind == "ptyp":
            args = [int(s) for s in rest.split(":")]
            if len(args) != 2:
                raise ValueError("expected ptyp:<p>:<k>")
        elif kind == "set":
            args = [int(s) for s in rest.split(",")]
        else:
            raise ValueError("unknown profile kind")
    except ValueError as exc:
        raise ParseError(f"cannot parse profile {text!r}: {exc}") from None
    if kind == "full":
        return full_profile(*args)
    if kind == "ptyp":
        return p_typical_profile(*args)
    return validate_profile(args)
