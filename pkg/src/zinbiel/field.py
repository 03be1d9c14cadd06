"""Exact scalar fields: rationals, prime fields F_p and quadratic extensions F_{p^2}.

Rationals are plain :class:`fractions.Fraction` values.  Finite-field elements
are small immutable objects that refuse to mix moduli.  Every field object
exposes the same tiny surface (``zero``, ``one``, ``__call__`` for coercion,
``parse``/``format`` for the JSON format) so the linear algebra in
:mod:`zinbiel.algebra` is written once.

For the exhaustive searches, :class:`FieldTables` re-encodes a finite field as
integer codes ``0..q-1`` with lookup tables; F_p and F_{p^2} then share a
single search path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator

DEFAULT_PRIMES = (2, 3, 5, 7)


class FieldMismatchError(ValueError):
    """Raised when elements of different fields are combined."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"``, ``"n"`` or an int into a reduced Fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, str):
        return Fraction(text.strip())
    raise TypeError(f"cannot read a rational from {text!r}")


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# --------------------------------------------------------------------------
# Rationals


class RationalField:
    """The field Q, realised with :class:`fractions.Fraction`."""

    name = "Q"
    characteristic = 0

    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, (PrimeFieldElement, QuadExtElement)):
            raise FieldMismatchError("cannot coerce a finite-field element into Q")
        return parse_rational(x) if isinstance(x, str) else Fraction(x)

    def parse(self, obj) -> Fraction:
        return parse_rational(obj)

    def format(self, x: Fraction):
        return format_rational(x)

    def to_json(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


# --------------------------------------------------------------------------
# Prime fields


@dataclass(frozen=True, slots=True)
class PrimeFieldElement:
    residue: int
    p: int

    def _check(self, other) -> int:
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise FieldMismatchError(f"F_{self.p} and F_{other.p} elements cannot be mixed")
            return other.residue
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            return _fraction_mod(other, self.p)
        return NotImplemented

    def __add__(self, other):
        r = self._check(other)
        if r is NotImplemented:
            return r
        return PrimeFieldElement((self.residue + r) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        r = self._check(other)
        if r is NotImplemented:
            return r
        return PrimeFieldElement((self.residue - r) % self.p, self.p)

    def __rsub__(self, other):
        r = self._check(other)
        if r is NotImplemented:
            return r
        return PrimeFieldElement((r - self.residue) % self.p, self.p)

    def __mul__(self, other):
        r = self._check(other)
        if r is NotImplemented:
            return r
        return PrimeFieldElement((self.residue * r) % self.p, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement((-self.residue) % self.p, self.p)

    def inv(self) -> PrimeFieldElement:
        if self.residue == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return PrimeFieldElement(pow(self.residue, -1, self.p), self.p)

    def __truediv__(self, other):
        r = self._check(other)
        if r is NotImplemented:
            return r
        return self * PrimeFieldElement(r, self.p).inv()

    def __rtruediv__(self, other):
        r = self._check(other)
        if r is NotImplemented:
            return r
        return PrimeFieldElement(r, self.p) * self.inv()

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.residue == other.residue
        if isinstance(other, int):
            return self.residue == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.p))

    def __bool__(self):
        return self.residue != 0

    def __repr__(self):
        return f"{self.residue} (mod {self.p})"


def _fraction_mod(q: Fraction, p: int) -> int:
    if q.denominator % p == 0:
        raise ZeroDivisionError(f"denominator of {q} is divisible by {p}")
    return (q.numerator * pow(q.denominator, -1, p)) % p


class PrimeField:
    """F_p for a prime p."""

    characteristic: int

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p
        self.zero = PrimeFieldElement(0, p)
        self.one = PrimeFieldElement(1, p)

    @property
    def name(self) -> str:
        return f"F{self.p}"

    def __call__(self, x) -> PrimeFieldElement:
        if isinstance(x, PrimeFieldElement):
            if x.p != self.p:
                raise FieldMismatchError(f"element of F_{x.p} used in F_{self.p}")
            return x
        if isinstance(x, str):
            x = parse_rational(x)
        if isinstance(x, Fraction):
            return PrimeFieldElement(_fraction_mod(x, self.p), self.p)
        return PrimeFieldElement(int(x) % self.p, self.p)

    def elements(self) -> Iterator[PrimeFieldElement]:
        for r in range(self.p):
            yield PrimeFieldElement(r, self.p)

    def parse(self, obj) -> PrimeFieldElement:
        return self(obj)

    def format(self, x: PrimeFieldElement) -> str:
        return str(x.residue)

    def to_json(self):
        return {"Fp": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


def smallest_nonresidue(p: int) -> int:
    """Smallest d in [1, p) with no square root mod an odd prime p."""
    if p == 2:
        raise ValueError("every element of F_2 is a square")
    squares = {(x * x) % p for x in range(p)}
    for d in range(1, p):
        if d not in squares:
            return d
    raise AssertionError("unreachable for odd p")


# --------------------------------------------------------------------------
# Quadratic extensions


@dataclass(frozen=True, slots=True)
class QuadExtElement:
    """``a + b*t`` in F_p[t]/(t^2 - c1*t - c0).

    For odd p, ``c1 = 0`` and ``c0 = d`` is the smallest non-residue, so
    ``t = sqrt(d)``.  For p = 2 the modulus is ``t^2 + t + 1``.
    """

    a: int
    b: int
    p: int
    c0: int
    c1: int

    def _coerce(self, other):
        if isinstance(other, QuadExtElement):
            if (other.p, other.c0, other.c1) != (self.p, self.c0, self.c1):
                raise FieldMismatchError("elements of different quadratic extensions")
            return other
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise FieldMismatchError(f"F_{other.p} element used in F_{self.p}^2")
            return self._make(other.residue, 0)
        if isinstance(other, int):
            return self._make(other, 0)
        if isinstance(other, Fraction):
            return self._make(_fraction_mod(other, self.p), 0)
        return NotImplemented

    def _make(self, a, b):
        return QuadExtElement(a % self.p, b % self.p, self.p, self.c0, self.c1)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._make(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._make(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return self._make(-self.a, -self.b)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        bb = self.b * o.b
        return self._make(self.a * o.a + bb * self.c0, self.a * o.b + self.b * o.a + bb * self.c1)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = self._make(1, 0)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inv(self) -> QuadExtElement:
        if not self:
            raise ZeroDivisionError("0 has no inverse")
        # multiplicative group has order p^2 - 1
        return self ** (self.p * self.p - 2)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inv()

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except FieldMismatchError:
            return False
        if o is NotImplemented:
            return o
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b, self.p, self.c0, self.c1))

    def __bool__(self):
        return bool(self.a or self.b)

    def __repr__(self):
        return f"{self.a}+{self.b}t (F_{self.p}^2)"


class QuadraticExtension:
    """F_{p^2}, built deterministically from the smallest non-residue."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p * p
        if p == 2:
            self.c0, self.c1 = 1, 1
            self.d = None
        else:
            self.d = smallest_nonresidue(p)
            self.c0, self.c1 = self.d, 0
        self.zero = self.element(0, 0)
        self.one = self.element(1, 0)
        self.t = self.element(0, 1)

    @property
    def name(self) -> str:
        return f"F{self.p}^2"

    def element(self, a: int, b: int) -> QuadExtElement:
        return QuadExtElement(a % self.p, b % self.p, self.p, self.c0, self.c1)

    def __call__(self, x) -> QuadExtElement:
        if isinstance(x, QuadExtElement):
            return self.zero + x
        if isinstance(x, PrimeFieldElement):
            if x.p != self.p:
                raise FieldMismatchError(f"F_{x.p} element used in F_{self.p}^2")
            return self.element(x.residue, 0)
        if isinstance(x, (list, tuple)):
            a, b = x
            return self.element(int(a), int(b))
        if isinstance(x, str):
            x = parse_rational(x)
        if isinstance(x, Fraction):
            return self.element(_fraction_mod(x, self.p), 0)
        return self.element(int(x), 0)

    def elements(self) -> Iterator[QuadExtElement]:
        for b in range(self.p):
            for a in range(self.p):
                yield self.element(a, b)

    def parse(self, obj) -> QuadExtElement:
        if isinstance(obj, str) and obj.strip().startswith("["):
            obj = json.loads(obj)
        return self(obj)

    def format(self, x: QuadExtElement):
        if x.b == 0:
            return str(x.a)
        return [x.a, x.b]

    def to_json(self):
        return {"Fp2": self.p}

    def __eq__(self, other):
        return isinstance(other, QuadraticExtension) and other.p == self.p

    def __hash__(self):
        return hash(("Fp2", self.p))

    def __repr__(self):
        return f"QuadraticExtension({self.p})"


def field_from_json(obj):
    if obj in (None, "Q", "QQ"):
        return QQ
    if isinstance(obj, dict):
        if "Fp" in obj:
            return PrimeField(int(obj["Fp"]))
        if "Fp2" in obj:
            return QuadraticExtension(int(obj["Fp2"]))
    raise ValueError(f"unknown field specification {obj!r}")


def reduces_mod(q: Fraction, p: int) -> bool:
    return Fraction(q).denominator % p != 0


# --------------------------------------------------------------------------
# Table encoding for the exhaustive searches


class FieldTables:
    """A finite field re-encoded as integer codes ``0..q-1``.

    Code 0 is zero and code 1 is one.  For F_{p^2} the element ``a + b*t`` has
    code ``a + b*p``.
    """

    def __init__(self, field):
        if isinstance(field, int):
            field = PrimeField(field)
        self.field = field
        self.p = field.p
        self.q = field.order
        elems = list(field.elements())
        self.elements = elems
        index = {e: i for i, e in enumerate(elems)}
        self._index = index
        q = self.q
        self.add = [[index[elems[a] + elems[b]] for b in range(q)] for a in range(q)]
        self.mul = [[index[elems[a] * elems[b]] for b in range(q)] for a in range(q)]
        self.neg = [index[-e] for e in elems]
        self.inv = [0] + [index[e.inv()] for e in elems[1:]]
        self.sub = [[self.add[a][self.neg[b]] for b in range(q)] for a in range(q)]

    @cached_property
    def is_prime_field(self) -> bool:
        return isinstance(self.field, PrimeField)

    def code(self, x) -> int:
        """Encode an int, Fraction or field element."""
        return self._index[self.field(x)]

    def decode(self, c: int):
        return self.elements[c]

    def lift(self, c: int) -> Fraction:
        """Symmetric integer representative of a prime-field code."""
        if not self.is_prime_field:
            raise ValueError("only prime-field codes lift to integers")
        return Fraction(c if c <= self.p // 2 else c - self.p)
