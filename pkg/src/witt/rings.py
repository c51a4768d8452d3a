"""Coefficient rings.

Each ring is a small immutable descriptor object that operates on raw
payloads (``int``, ``Fraction``, tuples).  The Witt-vector code works
directly on payloads for speed; :class:`RingElement` wraps a payload
together with its ring for the public API.

Payload conventions:

* ``Integers``: ``int``
* ``Rationals``, ``LocalizedRationals``: ``Fraction``
* ``IntegersMod``, ``PrimeField``: ``int`` in ``[0, m)``
* ``FiniteField``: tuple of ``k`` ints in ``[0, p)`` (coefficients low to high)
* ``PolynomialRing``: tuple of base payloads, low to high, trailing zeros trimmed
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Any

from .errors import (
    NotDivisible,
    NotUnique,
    ParseError,
    PreconditionError,
    UnsupportedRing,
    WittError,
)
from .profiles import require_prime


class Ring:
    characteristic: int = 0
    torsion_free: bool = False

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)

    def from_int(self, n: int):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def pow(self, a, e: int):
        if e < 0:
            raise PreconditionError("negative exponent")
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def is_zero(self, a) -> bool:
        return a == self.zero

    def exact_div_int(self, a, n: int):
        """Return the unique y with n*y == a.

        Raises NotDivisible when no such y exists and NotUnique when n is a
        zero divisor and the quotient is ambiguous.
        """
        raise NotImplementedError

    def from_fraction(self, q: Fraction):
        """Image of a rational whose denominator is invertible in the ring."""
        q = Fraction(q)
        return self.exact_div_int(self.from_int(q.numerator), q.denominator)

    def normalize(self, raw):
        """Canonical payload for a Python value; rejects values outside the ring."""
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, a) -> str:
        return str(a)

    def random(self, rng):
        raise NotImplementedError

    def __call__(self, raw) -> "RingElement":
        if isinstance(raw, RingElement):
            if raw.ring != self:
                raise UnsupportedRing(f"element of {raw.ring} is not in {self}")
            return raw
        if isinstance(raw, str):
            return RingElement(self, self.parse(raw))
        return RingElement(self, self.normalize(raw))


def _parse_int(text: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise ParseError(f"not an integer: {text!r}") from None


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {text!r}") from None


def _format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def split_top_level(text: str, sep: str = ",") -> list[str]:
    """Split on ``sep`` outside square brackets."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced brackets in {text!r}")
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise ParseError(f"unbalanced brackets in {text!r}")
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def _strip_brackets(text: str) -> str:
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        return text[1:-1]
    return text


@dataclass(frozen=True)
class Integers(Ring):
    characteristic = 0
    torsion_free = True

    def from_int(self, n):
        return int(n)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def pow(self, a, e):
        return a**e

    def exact_div_int(self, a, n):
        if n == 0:
            raise PreconditionError("division by zero")
        q, r = divmod(a, n)
        if r:
            raise NotDivisible(f"{a} is not divisible by {n}")
        return q

    def normalize(self, raw):
        if isinstance(raw, Fraction):
            if raw.denominator != 1:
                raise UnsupportedRing(f"{raw} is not an integer")
            raw = raw.numerator
        if not isinstance(raw, int):
            raise UnsupportedRing(f"{raw!r} is not an integer")
        return int(raw)

    def parse(self, text):
        return _parse_int(text)

    def random(self, rng):
        return rng.randint(-3, 3)

    def __str__(self):
        return "int"


@dataclass(frozen=True)
class Rationals(Ring):
    characteristic = 0
    torsion_free = True

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def pow(self, a, e):
        return a**e

    def exact_div_int(self, a, n):
        if n == 0:
            raise PreconditionError("division by zero")
        return a / n

    def from_fraction(self, q):
        return Fraction(q)

    def normalize(self, raw):
        return Fraction(raw)

    def parse(self, text):
        return _parse_fraction(text)

    def format(self, a):
        return _format_fraction(a)

    def random(self, rng):
        return Fraction(rng.randint(-3, 3), rng.randint(1, 3))

    def __str__(self):
        return "rat"


@dataclass(frozen=True)
class LocalizedRationals(Rationals):
    """Z_(p): rationals whose reduced denominator is prime to p."""

    p: int

    def __post_init__(self):
        require_prime(self.p)

    def exact_div_int(self, a, n):
        if n == 0:
            raise PreconditionError("division by zero")
        return self._check(a / n)

    def from_fraction(self, q):
        return self._check(Fraction(q))

    def _check(self, q: Fraction) -> Fraction:
        if q.denominator % self.p == 0:
            raise NotDivisible(f"{q} is not {self.p}-integral")
        return q

    def normalize(self, raw):
        q = Fraction(raw)
        if q.denominator % self.p == 0:
            raise UnsupportedRing(f"{q} does not lie in Z_({self.p})")
        return q

    def parse(self, text):
        return self.normalize(_parse_fraction(text))

    def random(self, rng):
        den = rng.choice([d for d in range(1, 6) if d % self.p])
        return Fraction(rng.randint(-3, 3), den)

    def __str__(self):
        return f"zloc:{self.p}"


class _Residues(Ring):
    """Shared arithmetic for Z/m and F_p; payloads are ints in [0, m)."""

    modulus: int

    @property
    def characteristic(self):
        return self.modulus

    def from_int(self, n):
        return n % self.modulus

    def add(self, a, b):
        return (a + b) % self.modulus

    def neg(self, a):
        return -a % self.modulus

    def sub(self, a, b):
        return (a - b) % self.modulus

    def mul(self, a, b):
        return a * b % self.modulus

    def pow(self, a, e):
        return pow(a, e, self.modulus)

    def exact_div_int(self, a, n):
        m = self.modulus
        g = gcd(n % m, m)
        if g == 1:
            return a * pow(n, -1, m) % m
        if a % g:
            raise NotDivisible(f"{a} is not divisible by {n} in Z/{m}")
        raise NotUnique(f"{n} is a zero divisor in Z/{m}; {a}/{n} is ambiguous")

    def normalize(self, raw):
        if isinstance(raw, Fraction):
            return self.from_fraction(raw)
        if not isinstance(raw, int):
            raise UnsupportedRing(f"{raw!r} is not a residue")
        return raw % self.modulus

    def parse(self, text):
        text = text.strip()
        if "/" in text:
            return self.from_fraction(_parse_fraction(text))
        return _parse_int(text) % self.modulus

    def random(self, rng):
        return rng.randrange(self.modulus)


@dataclass(frozen=True)
class IntegersMod(_Residues):
    m: int

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 2:
            raise PreconditionError(f"modulus must be >= 2, got {self.m}")

    @property
    def modulus(self):
        return self.m

    def __str__(self):
        return f"zmod:{self.m}"


@dataclass(frozen=True)
class PrimeField(_Residues):
    p: int

    def __post_init__(self):
        require_prime(self.p)

    @property
    def modulus(self):
        return self.p

    def __str__(self):
        return f"gf:{self.p}"


def _poly_divides(d: list[int], f: list[int], p: int) -> bool:
    """True when the monic polynomial d divides f over F_p."""
    r = list(f)
    while len(r) >= len(d):
        c = r[-1]
        if c:
            shift = len(r) - len(d)
            for i, di in enumerate(d):
                r[shift + i] = (r[shift + i] - c * di) % p
        r.pop()
    return not any(r)


def is_irreducible_small(modulus: tuple[int, ...], p: int) -> bool:
    """Irreducibility over F_p by trial division with every monic polynomial of degree <= k/2."""
    k = len(modulus) - 1
    for deg in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            if _poly_divides(list(low) + [1], list(modulus), p):
                return False
    return True


def default_modulus(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically first monic irreducible polynomial of degree k over F_p."""
    for low in itertools.product(range(p), repeat=k):
        cand = tuple(reversed(low)) + (1,)
        if is_irreducible_small(cand, p):
            return cand
    raise PreconditionError(f"no irreducible polynomial of degree {k} over F_{p}")


@dataclass(frozen=True)
class FiniteField(Ring):
    """F_{p^k} = F_p[g]/(modulus(g)), elements as length-k coefficient tuples."""

    p: int
    k: int
    modulus: tuple[int, ...]
    verified: bool = field(default=True, compare=False)

    def __post_init__(self):
        require_prime(self.p)
        mod = tuple(int(c) % self.p for c in self.modulus)
        object.__setattr__(self, "modulus", mod)
        if self.k < 1 or len(mod) != self.k + 1 or mod[-1] != 1:
            raise PreconditionError(f"modulus must be monic of degree {self.k}: {mod}")
        if self.k <= 4:
            if not is_irreducible_small(mod, self.p):
                raise PreconditionError(f"{mod} is reducible over F_{self.p}")
        else:
            object.__setattr__(self, "verified", False)
            warnings.warn(
                f"irreducibility of {mod} over F_{self.p} is not verified for degree {self.k}",
                stacklevel=2,
            )

    @property
    def characteristic(self):
        return self.p

    def from_int(self, n):
        return (n % self.p,) + (0,) * (self.k - 1)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x % self.p for x in a)

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def mul(self, a, b):
        p, k, mod = self.p, self.k, self.modulus
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        for top in range(2 * k - 2, k - 1, -1):
            c = prod[top] % p
            if c:
                shift = top - k
                for i in range(k):
                    prod[shift + i] -= c * mod[i]
        return tuple(c % p for c in prod[:k])

    def exact_div_int(self, a, n):
        if n % self.p:
            inv = pow(n, -1, self.p)
            return tuple(x * inv % self.p for x in a)
        if any(a):
            raise NotDivisible(f"{n} is zero in characteristic {self.p}")
        raise NotUnique(f"{n} is zero in characteristic {self.p}")

    def pth_root(self, a):
        return self.pow(a, self.p ** (self.k - 1))

    def normalize(self, raw):
        if isinstance(raw, int):
            return self.from_int(raw)
        coeffs = [int(c) % self.p for c in raw]
        if len(coeffs) > self.k:
            if any(coeffs[self.k:]):
                raise UnsupportedRing(f"{raw!r} has degree >= {self.k}")
            coeffs = coeffs[: self.k]
        return tuple(coeffs) + (0,) * (self.k - len(coeffs))

    def parse(self, text):
        parts = [s for s in split_top_level(_strip_brackets(text)) if s]
        return self.normalize([_parse_int(s) for s in parts] or [0])

    def format(self, a):
        return "[" + ",".join(map(str, a)) + "]"

    def random(self, rng):
        return tuple(rng.randrange(self.p) for _ in range(self.k))

    def __str__(self):
        if self.k == 1 and self.modulus == (0, 1):
            return f"gf:{self.p}^1:0,1"
        return f"gf:{self.p}^{self.k}:" + ",".join(map(str, self.modulus))


def _depth(ring: Ring) -> int:
    return 1 + _depth(ring.base) if isinstance(ring, PolynomialRing) else 0


@dataclass(frozen=True)
class PolynomialRing(Ring):
    base: Ring
    var: str = "u"

    def __post_init__(self):
        if _depth(self) > 2:
            raise PreconditionError("polynomial rings nest at most two deep")
        if not self.var.isidentifier():
            raise PreconditionError(f"bad variable name {self.var!r}")

    @property
    def characteristic(self):
        return self.base.characteristic

    @property
    def torsion_free(self):
        return self.base.torsion_free

    def _trim(self, coeffs):
        base = self.base
        coeffs = list(coeffs)
        while coeffs and base.is_zero(coeffs[-1]):
            coeffs.pop()
        return tuple(coeffs)

    def from_int(self, n):
        return self._trim([self.base.from_int(n)])

    def gen(self):
        return (self.base.zero, self.base.one)

    def add(self, a, b):
        base = self.base
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] = base.add(out[i], y)
        return self._trim(out) if len(a) == len(b) else tuple(out)

    def neg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def mul(self, a, b):
        if not a or not b:
            return ()
        base = self.base
        if type(base) is Integers:
            out = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] += x * y
            return self._trim(out)
        out = [base.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if base.is_zero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = base.add(out[i + j], base.mul(x, y))
        return self._trim(out)

    def is_zero(self, a):
        return not a

    def exact_div_int(self, a, n):
        base = self.base
        out = [base.exact_div_int(c, n) for c in a]
        # implicit zero coefficients must divide unambiguously too
        base.exact_div_int(base.zero, n)
        return self._trim(out)

    def evaluate_at(self, a, value):
        """Substitute a base payload for the variable."""
        base = self.base
        acc = base.zero
        for c in reversed(a):
            acc = base.add(base.mul(acc, value), c)
        return acc

    def normalize(self, raw):
        if isinstance(raw, (int, Fraction)) or not isinstance(raw, (list, tuple)):
            return self._trim([self.base.normalize(raw)])
        return self._trim([self.base.normalize(c) for c in raw])

    def parse(self, text):
        inner = _strip_brackets(text)
        parts = [s for s in split_top_level(inner) if s]
        return self._trim([self.base.parse(s) for s in parts])

    def format(self, a):
        if not a:
            return "[0]"
        return "[" + ",".join(self.base.format(c) for c in a) + "]"

    def random(self, rng):
        return self._trim([self.base.random(rng) for _ in range(rng.randint(0, 3))])

    def __str__(self):
        return f"poly:{self.base}:{self.var}"


@dataclass(frozen=True)
class RingElement:
    ring: Ring
    value: Any

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise UnsupportedRing(f"cannot combine elements of {self.ring} and {other.ring}")
            return other.value
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return RingElement(self.ring, self.ring.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return RingElement(self.ring, self.ring.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return RingElement(self.ring, self.ring.sub(b, self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return RingElement(self.ring, self.ring.mul(self.value, b))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg(self.value))

    def __pow__(self, e: int):
        return RingElement(self.ring, self.ring.pow(self.value, e))

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, int):
            return self.value == self.ring.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.value))

    def is_zero(self) -> bool:
        return self.ring.is_zero(self.value)

    def __str__(self):
        return self.ring.format(self.value)

    def __repr__(self):
        return f"RingElement({self.ring}, {self.ring.format(self.value)})"


def int_image(n: int, ring: Ring) -> RingElement:
    """Image of ``n`` under the unique ring map Z -> ring."""
    return RingElement(ring, ring.from_int(n))


def exact_div_int(x: RingElement, n: int) -> RingElement:
    if n == 0:
        raise PreconditionError("division by zero")
    return RingElement(x.ring, x.ring.exact_div_int(x.value, n))


def pth_root(x: RingElement) -> RingElement:
    """The unique y with y**p == x in a finite field of characteristic p."""
    ring = x.ring
    if isinstance(ring, PrimeField):
        return x
    if isinstance(ring, FiniteField):
        return RingElement(ring, ring.pth_root(x.value))
    raise UnsupportedRing(f"p-th roots are only available in finite fields, not {ring}")


def parse_ring(text: str) -> Ring:
    """Parse the ring descriptor syntax (``int``, ``zmod:6``, ``gf:2^2:1,1,1``, ``poly:int:u``, ...)."""
    text = text.strip()
    try:
        if text == "int":
            return Integers()
        if text == "rat":
            return Rationals()
        if text.startswith("poly:"):
            base_text, sep, var = text[len("poly:"):].rpartition(":")
            if not sep:
                raise ParseError(f"expected poly:<base>:<var>, got {text!r}")
            return PolynomialRing(parse_ring(base_text), var)
        kind, _, rest = text.partition(":")
        if kind == "zloc":
            return LocalizedRationals(int(rest))
        if kind == "zmod":
            return IntegersMod(int(rest))
        if kind == "gf":
            if "^" not in rest:
                return PrimeField(int(rest))
            pk, _, mod = rest.partition(":")
            p, k = (int(s) for s in pk.split("^"))
            modulus = tuple(int(c) for c in mod.split(",")) if mod else default_modulus(p, k)
            return FiniteField(p, k, modulus)
    except WittError:
        raise
    except ValueError as exc:
        raise ParseError(f"cannot parse ring {text!r}: {exc}") from None
    raise ParseError(f"unknown ring descriptor {text!r}")
