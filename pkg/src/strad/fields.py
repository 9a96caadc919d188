"""Exact scalar fields.

Rationals are backed by ``gmpy2.mpq``.  Prime fields use a small element
class so that the linear algebra code can stay field-agnostic and rely on
ordinary arithmetic operators.
"""

from __future__ import annotations

from gmpy2 import mpq, is_prime


class RationalField:
    name = "q"

    def __call__(self, x) -> mpq:
        return mpq(x)

    @property
    def zero(self):
        return mpq(0)

    @property
    def one(self):
        return mpq(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("q")

    def __repr__(self):
        return "QQ"


class GFElement:
    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise ValueError("mixing elements of different prime fields")
            return other.v
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return GFElement(-self.v, self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return GFElement(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(o, self.p) / self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return str(self.v)

    __str__ = __repr__


class PrimeField:
    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = int(p)
        self.name = f"fp:{self.p}"

    def __call__(self, x) -> GFElement:
        if isinstance(x, GFElement):
            return x
        if isinstance(x, int):
            return GFElement(x, self.p)
        # rationals (mpq, Fraction) map through numerator/denominator
        num, den = int(x.numerator), int(x.denominator)
        return GFElement(num, self.p) / den

    @property
    def zero(self):
        return GFElement(0, self.p)

    @property
    def one(self):
        return GFElement(1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def parse_field(text: str):
    """Parse a field descriptor: ``q`` for the rationals, ``fp:<p>`` for GF(p)."""
    text = text.strip().lower()
    if text in ("q", "qq", "rational", "rationals"):
        return QQ
    if text.startswith("fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise ValueError(f"bad prime in field descriptor {text!r}") from None
        return PrimeField(p)
    raise ValueError(f"unknown field descriptor {text!r} (expected 'q' or 'fp:<prime>')")
