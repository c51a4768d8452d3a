"""Sparse multivariate polynomials over Q in the variables X_d, Y_d.

Monomials are packed into a single Python int: variable X_d owns the bit
field starting at ``SLOT_BITS * (2*(d-1))`` and Y_d the next one.  Monomial
multiplication is then integer addition, which keeps the large universal
polynomial computations fast.  Coefficients are ``int`` when integral and
``Fraction`` otherwise.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping, NamedTuple

SLOT_BITS = 16
_MASK = (1 << SLOT_BITS) - 1
_MAX_DEGREE = _MASK


class UVar(NamedTuple):
    family: str
    index: int

    @property
    def slot(self) -> int:
        return 2 * (self.index - 1) + (0 if self.family == "X" else 1)

    @classmethod
    def from_slot(cls, slot: int) -> "UVar":
        return cls("X" if slot % 2 == 0 else "Y", slot // 2 + 1)

    def __str__(self):
        return f"{self.family}{self.index}"


def X(d: int) -> "UPoly":
    return UPoly.var("X", d)


def Y(d: int) -> "UPoly":
    return UPoly.var("Y", d)


def _unpack(mono: int) -> tuple[tuple[int, int], ...]:
    out = []
    slot = 0
    while mono:
        e = mono & _MASK
        if e:
            out.append((slot, e))
        mono >>= SLOT_BITS
        slot += 1
    return tuple(out)


def _pack(pairs: Iterable[tuple[int, int]]) -> int:
    mono = 0
    for slot, e in pairs:
        if e < 0 or e > _MAX_DEGREE:
            raise OverflowError(f"exponent {e} out of range")
        mono += e << (SLOT_BITS * slot)
    return mono


def _clean_coeff(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _clean(terms: dict) -> dict:
    return {m: _clean_coeff(c) for m, c in terms.items() if c}


class UPoly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("_terms", "_degree", "_compiled", "_ring_cache")

    def __init__(self, terms: Mapping[int, int | Fraction] | None = None, *, _clean_done=False):
        self._terms = dict(terms) if _clean_done else _clean(dict(terms or {}))
        self._degree = None
        self._compiled = None
        self._ring_cache = {}

    # construction

    @classmethod
    def var(cls, family: str, index: int) -> "UPoly":
        if family not in ("X", "Y") or index < 1:
            raise ValueError(f"bad variable {family}{index}")
        return cls({1 << (SLOT_BITS * UVar(family, index).slot): 1}, _clean_done=True)

    @classmethod
    def const(cls, c) -> "UPoly":
        return cls({0: c})

    @classmethod
    def from_terms(cls, items: Iterable[tuple[Mapping[UVar, int], int | Fraction]]) -> "UPoly":
        acc: dict[int, int | Fraction] = {}
        for mono, c in items:
            key = _pack((UVar(*v).slot, e) for v, e in mono.items())
            acc[key] = acc.get(key, 0) + c
        return cls(acc)

    # inspection

    def terms(self) -> list[tuple[dict[UVar, int], int | Fraction]]:
        """Terms as (monomial, coefficient), monomial a dict UVar -> exponent."""
        return [
            ({UVar.from_slot(s): e for s, e in _unpack(m)}, c) for m, c in self._terms.items()
        ]

    def coefficients(self) -> list:
        return list(self._terms.values())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def variables(self) -> set[UVar]:
        slots = set()
        for m in self._terms:
            slots.update(s for s, _ in _unpack(m))
        return {UVar.from_slot(s) for s in slots}

    @property
    def degree(self) -> int:
        if self._degree is None:
            self._degree = max((sum(e for _, e in _unpack(m)) for m in self._terms), default=0)
        return self._degree

    def constant_term(self):
        return self._terms.get(0, 0)

    # arithmetic

    @staticmethod
    def _lift(other) -> "UPoly | None":
        if isinstance(other, UPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UPoly.const(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return UPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UPoly({m: -c for m, c in self._terms.items()}, _clean_done=True)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "UPoly":
        if not c:
            return UPoly()
        return UPoly({m: v * c for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, UPoly):
            return NotImplemented
        if self.degree + other.degree > _MAX_DEGREE:
            raise OverflowError("product degree exceeds the packed exponent range")
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, int | Fraction] = {}
        get = out.get
        b_items = list(b.items())
        for m1, c1 in a.items():
            for m2, c2 in b_items:
                m = m1 + m2
                out[m] = get(m, 0) + c1 * c2
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "UPoly":
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        if self.degree * e > _MAX_DEGREE:
            raise OverflowError("power degree exceeds the packed exponent range")
        if len(self._terms) == 1:
            ((m, c),) = self._terms.items()
            return UPoly({m * e: c**e})
        result = UPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def div_int(self, n: int) -> "UPoly":
        """Exact division by a nonzero integer over Q."""
        out = {}
        for m, c in self._terms.items():
            if type(c) is int and c % n == 0:
                out[m] = c // n
            else:
                out[m] = _clean_coeff(Fraction(c) / n)
        return UPoly(out, _clean_done=True)

    def map_coefficients(self, fn: Callable) -> "UPoly":
        return UPoly({m: fn(c) for m, c in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UPoly.const(other)
        if not isinstance(other, UPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # substitution and evaluation

    def _compile(self):
        if self._compiled is None:
            self._compiled = [(c, _unpack(m)) for m, c in self._terms.items()]
        return self._compiled

    def substitute(self, mapping: Mapping[UVar, "UPoly"]) -> "UPoly":
        """Replace variables by polynomials; unmapped variables are kept."""
        slot_map = {UVar(*v).slot: self._lift(p) for v, p in mapping.items()}
        powers: dict[tuple[int, int], UPoly] = {}

        def power(slot, e):
            key = (slot, e)
            if key not in powers:
                if slot in slot_map:
                    powers[key] = slot_map[slot] ** e
                else:
                    powers[key] = UPoly({e << (SLOT_BITS * slot): 1}, _clean_done=True)
            return powers[key]

        acc: dict[int, int | Fraction] = {}
        for c, vs in self._compile():
            term = UPoly.const(c)
            for slot, e in vs:
                term = term * power(slot, e)
            for m, v in term._terms.items():
                acc[m] = acc.get(m, 0) + v
        return UPoly(acc)

    def evaluate(self, ring, values: Mapping[int, object] | Callable[[int], object], powers=None):
        """Evaluate over ``ring`` with ``values[slot]`` giving ring payloads.

        Integer coefficients map through the canonical map from Z and
        rational ones through ``ring.from_fraction``.  ``powers`` may be a
        dict shared between calls with the same ``values`` to reuse
        variable powers.
        """
        terms = self._ring_cache.get(ring)
        if terms is None:
            terms = []
            for c, vs in self._compile():
                img = ring.from_int(c) if type(c) is int else ring.from_fraction(c)
                if not ring.is_zero(img):
                    terms.append((img, vs))
            self._ring_cache[ring] = terms
        lookup = values if callable(values) else values.__getitem__
        if powers is None:
            powers = {}
        mul, add = ring.mul, ring.add
        acc = ring.zero
        for c, vs in terms:
            t = c
            for key in vs:
                p = powers.get(key)
                if p is None:
                    slot, e = key
                    p = powers[key] = ring.pow(lookup(slot), e)
                t = mul(t, p)
            acc = add(acc, t)
        return acc

    def evaluate_vars(self, ring, assignment: Mapping[UVar, object]):
        """Evaluate with an explicit UVar -> payload assignment; missing variables are zero."""
        by_slot = {UVar(*v).slot: val for v, val in assignment.items()}
        zero = ring.zero
        return self.evaluate(ring, lambda s: by_slot.get(s, zero))

    # integrality

    def is_integral(self) -> bool:
        return all(type(c) is int for c in self._terms.values())

    def is_p_integral(self, p: int) -> bool:
        return all(type(c) is int or c.denominator % p for c in self._terms.values())

    def reduce_mod(self, m: int) -> "UPoly":
        """Integer coefficients reduced into [0, m); requires an integral polynomial."""
        if not self.is_integral():
            raise ValueError("reduce_mod needs integer coefficients")
        return UPoly({k: c % m for k, c in self._terms.items()})

    # text forms

    def _sorted_terms(self):
        # graded lex: higher total degree first, ties broken lexicographically
        # with X1 > Y1 > X2 > Y2 > ...
        unpacked = {m: dict(_unpack(m)) for m in self._terms}
        width = max((max(e, default=-1) + 1 for e in unpacked.values()), default=0)

        def grlex(item):
            exps = unpacked[item[0]]
            vec = [exps.get(s, 0) for s in range(width)]
            return (-sum(vec), [-e for e in vec])

        return sorted(self._terms.items(), key=grlex)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for m, c in self._sorted_terms():
            mono = "*".join(
                str(UVar.from_slot(s)) + (f"^{e}" if e > 1 else "")
                for s, e in sorted(_unpack(m), key=lambda se: (se[0] % 2, se[0]))
            )
            neg = c < 0
            mag = -c if neg else c
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not pieces:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)

    def __repr__(self):
        return f"UPoly({self})"

    def to_json(self) -> list[dict]:
        return [
            {
                "coeff": str(c),
                "monomial": {str(UVar.from_slot(s)): e for s, e in _unpack(m)},
            }
            for m, c in self._sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: list[dict]) -> "UPoly":
        items = []
        for t in data:
            mono = {UVar(name[0], int(name[1:])): e for name, e in t["monomial"].items()}
            items.append((mono, _clean_coeff(Fraction(t["coeff"]))))
        return cls.from_terms(items)
