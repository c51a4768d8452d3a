"""The power-series model Lambda(A) = 1 + tA[[t]], truncated at t^N.

A big Witt vector x of length N corresponds to the series
prod_{n <= N} (1 - x_n t^n).  Witt addition becomes series
multiplication, so this module gives a second, independent
implementation of the Witt ring laws that the test suite compares
against :mod:`witt.core`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Any, Sequence

from . import core
from .errors import ParseError, PreconditionError, ProfileMismatch, RingMismatch
from .profiles import full_profile
from .rings import Ring, RingElement, split_top_level


@dataclass(frozen=True)
class TruncatedSeries:
    """a_0 + a_1 t + ... + a_N t^N over ``ring``; coefficients are ring payloads."""

    ring: Ring
    coeffs: tuple

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> RingElement:
        return RingElement(self.ring, self.coeffs[k])

    def is_lambda(self) -> bool:
        return self.coeffs[0] == self.ring.one

    def _check(self, other: "TruncatedSeries") -> None:
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        if self.order != other.order:
            raise PreconditionError(f"series orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(self.ring, tuple(map(self.ring.add, self.coeffs, other.coeffs)))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(self.ring, _mul(self.ring, self.coeffs, other.coeffs, self.order))

    def __pow__(self, e: int) -> "TruncatedSeries":
        acc = one_series(self.ring, self.order)
        for _ in range(e):
            acc = acc * self
        return acc

    def __str__(self) -> str:
        return format_series(self)


def series(ring: Ring, coeffs: Sequence[Any]) -> TruncatedSeries:
    return TruncatedSeries(ring, core._payloads(ring, coeffs))


def one_series(ring: Ring, N: int) -> TruncatedSeries:
    return TruncatedSeries(ring, (ring.one,) + (ring.zero,) * N)


def _mul(ring: Ring, a: tuple, b: tuple, N: int) -> tuple:
    out = [ring.zero] * (N + 1)
    mul, add, is_zero = ring.mul, ring.add, ring.is_zero
    for i, x in enumerate(a):
        if is_zero(x):
            continue
        for j in range(N + 1 - i):
            y = b[j]
            if not is_zero(y):
                out[i + j] = add(out[i + j], mul(x, y))
    return tuple(out)


def reciprocal(f: TruncatedSeries) -> TruncatedSeries:
    """1/f for f with constant term 1."""
    ring = f.ring
    if not f.is_lambda():
        raise PreconditionError("reciprocal needs constant term 1")
    a = f.coeffs
    b = [ring.one]
    for n in range(1, f.order + 1):
        acc = ring.zero
        for k in range(1, n + 1):
            acc = ring.add(acc, ring.mul(a[k], b[n - k]))
        b.append(ring.neg(acc))
    return TruncatedSeries(ring, tuple(b))


def derivative(f: TruncatedSeries) -> TruncatedSeries:
    """f' truncated to order N - 1."""
    ring = f.ring
    return TruncatedSeries(
        ring, tuple(ring.mul(ring.from_int(k), f.coeffs[k]) for k in range(1, f.order + 1))
    )


def d_operator(f: TruncatedSeries) -> TruncatedSeries:
    """D f = -t f'/f, computed with a series reciprocal so it works over any ring."""
    ring = f.ring
    N = f.order
    quotient = _mul(ring, derivative(f).coeffs + (ring.zero,), reciprocal(f).coeffs, N)
    # multiplying by -t shifts up one place; the t^(N+1) term falls off
    return TruncatedSeries(ring, (ring.zero,) + tuple(ring.neg(c) for c in quotient[:N]))


def witt_to_lambda(x: core.WittVector) -> TruncatedSeries:
    """f_x = prod_n (1 - x_n t^n) mod t^(N+1)."""
    if not x.profile.is_full():
        raise ProfileMismatch(f"Lambda conversion needs a full profile, got {x.profile}")
    ring = x.ring
    N = x.profile.max
    acc = list(one_series(ring, N).coeffs)
    for n, v in x.items():
        if ring.is_zero(v):
            continue
        # multiply by (1 - v t^n), from the top down so acc is updated in place
        for k in range(N, n - 1, -1):
            acc[k] = ring.sub(acc[k], ring.mul(v, acc[k - n]))
    return TruncatedSeries(ring, tuple(acc))


def lambda_to_witt(f: TruncatedSeries) -> core.WittVector:
    """The unique x with f = prod (1 - x_n t^n) mod t^(N+1)."""
    ring = f.ring
    if not f.is_lambda():
        raise PreconditionError("Lambda elements have constant term 1")
    N = f.order
    g = list(f.coeffs)
    xs = []
    for n in range(1, N + 1):
        y = ring.neg(g[n])
        xs.append(y)
        if ring.is_zero(y):
            continue
        # divide by (1 - y t^n): g_k += y * g_{k-n}, low to high
        for k in range(n, N + 1):
            g[k] = ring.add(g[k], ring.mul(y, g[k - n]))
    return core.WittVector(full_profile(N), ring, tuple(xs))


def lambda_witt_add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    return f * g


def lambda_witt_neg(f: TruncatedSeries) -> TruncatedSeries:
    return reciprocal(f)


def _one_minus_power(ring: Ring, c, m: int, e: int, N: int) -> tuple:
    """(1 - c t^m)^e mod t^(N+1) for a positive integer e."""
    base = [ring.zero] * (N + 1)
    base[0] = ring.one
    base[m] = ring.neg(c)
    acc = one_series(ring, N).coeffs
    for _ in range(e):
        acc = _mul(ring, acc, tuple(base), N)
    return acc


def lambda_witt_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Witt product in Lambda(A).

    With f = prod (1 - x_d t^d) and g = prod (1 - y_e t^e) the product is
    prod_{d,e} (1 - x_d^(m/d) y_e^(m/e) t^m)^gcd(d,e) with m = lcm(d, e).
    """
    f._check(g)
    ring, N = f.ring, f.order
    x = lambda_to_witt(f).as_dict()
    y = lambda_to_witt(g).as_dict()
    acc = one_series(ring, N).coeffs
    for d in range(1, N + 1):
        if ring.is_zero(x[d]):
            continue
        for e in range(1, N + 1):
            if ring.is_zero(y[e]):
                continue
            k = gcd(d, e)
            m = d * e // k
            if m > N:
                continue
            c = ring.mul(ring.pow(x[d], m // d), ring.pow(y[e], m // e))
            acc = _mul(ring, acc, _one_minus_power(ring, c, m, k, N), N)
    return TruncatedSeries(ring, acc)


def verschiebung_lambda(n: int, f: TruncatedSeries, N: int) -> TruncatedSeries:
    """V_n f = f(t^n), as a series of order N; f must have order N // n."""
    if n < 1 or f.order != N // n:
        raise PreconditionError(f"V_{n} to order {N} needs input of order {N // n}")
    ring = f.ring
    out = [ring.zero] * (N + 1)
    for k, c in enumerate(f.coeffs):
        out[k * n] = c
    return TruncatedSeries(ring, tuple(out))


def frobenius_lambda(n: int, f: TruncatedSeries) -> TruncatedSeries:
    """F_n on Lambda(A), routed through Witt coordinates; output order N // n."""
    return witt_to_lambda(core.frobenius(n, lambda_to_witt(f)))


# text forms

_TERM = re.compile(r"^(?:(?P<coeff>.+?)\s*\*\s*)?t(?:\s*\^\s*(?P<exp>\d+))?$")


def format_series(f: TruncatedSeries) -> str:
    ring = f.ring
    pieces = []
    for k, c in enumerate(f.coeffs):
        if ring.is_zero(c) and (k or any(not ring.is_zero(v) for v in f.coeffs[1:])):
            continue
        text = ring.format(c)
        neg = text.startswith("-")
        mag = text[1:] if neg else text
        if k == 0:
            body = mag
        else:
            power = "t" if k == 1 else f"t^{k}"
            body = power if mag == "1" else f"{mag}*{power}"
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append((" - " if neg else " + ") + body)
    return "".join(pieces)


def _split_signed(text: str) -> list[tuple[int, str]]:
    out, depth, cur, sign = [], 0, [], 1
    prev = ""
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if depth == 0 and ch in "+-" and prev not in ("", "*", "^", "/", "+", "-"):
            out.append((sign, "".join(cur).strip()))
            cur, sign = [], (1 if ch == "+" else -1)
            prev = ch
            continue
        if depth == 0 and ch in "+-" and prev in ("", "+", "-") and not "".join(cur).strip():
            sign *= 1 if ch == "+" else -1
            prev = ch
            continue
        cur.append(ch)
        if not ch.isspace():
            prev = ch
    out.append((sign, "".join(cur).strip()))
    return [(s, t) for s, t in out if t]


def parse_series(ring: Ring, text: str, order: int | None = None) -> TruncatedSeries:
    """Parse ``1 + c1*t + c2*t^2 + ...`` or a plain comma list of coefficients."""
    text = text.strip()
    if "t" not in text:
        coeffs = [ring.parse(s) for s in split_top_level(text)]
        if order is not None:
            if len(coeffs) > order + 1:
                raise ParseError(f"more than {order + 1} coefficients")
            coeffs += [ring.zero] * (order + 1 - len(coeffs))
        return TruncatedSeries(ring, tuple(coeffs))
    terms: dict[int, Any] = {}
    for sign, term in _split_signed(text):
        m = _TERM.match(term)
        if m:
            k = int(m.group("exp") or 1)
            c = ring.parse(m.group("coeff")) if m.group("coeff") else ring.one
        else:
            k, c = 0, ring.parse(term)
        if sign < 0:
            c = ring.neg(c)
        terms[k] = ring.add(terms.get(k, ring.zero), c)
    N = order if order is not None else max(terms)
    if max(terms) > N:
        raise ParseError(f"term of degree {max(terms)} exceeds order {N}")
    return TruncatedSeries(ring, tuple(terms.get(k, ring.zero) for k in range(N + 1)))
