"""Exact scalar fields: arbitrary-precision rationals and odd prime fields.

Rationals are plain :class:`fractions.Fraction` values.  Prime-field elements
are :class:`Mod` instances holding the least nonnegative residue.  Both support
the ordinary arithmetic operators, so the geometry code never needs to know
which backend it is running on.
"""

from __future__ import annotations

import re
from functools import lru_cache
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from sympy import isprime

from .errors import ScalarParseError, WrongField


class Mod:
    """Element of GF(p) stored as its least nonnegative residue."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise WrongField(f"mixing GF({self.p}) and GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return Mod(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.v == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return Mod(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return Mod(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if n < 0:
            return Mod(pow(pow(self.v, -1, self.p), -n, self.p), self.p)
        return Mod(pow(self.v, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.v == other.v and self.p == other.p
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"Mod({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


Scalar = Union[Fraction, Mod]

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")
_RESIDUE_RE = re.compile(r"^\d+$")


@dataclass(frozen=True)
class FieldSpec:
    """Names the scalar field: ``p is None`` means the rationals."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not isinstance(self.p, int) or not isprime(self.p):
                raise ValueError(f"{self.p!r} is not prime")
            if self.p == 2:
                raise ValueError("characteristic 2 violates Fano's axiom")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``rational`` or ``prime:P``."""
        if text in ("rational", "rationals", "Q"):
            return RATIONALS
        m = re.fullmatch(r"prime:(\d+)", text)
        if not m:
            raise ValueError(f"unknown field {text!r}; use 'rational' or 'prime:P'")
        return cls(int(m.group(1)))

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def name(self) -> str:
        return "rational" if self.p is None else f"prime:{self.p}"

    def __str__(self):
        return self.name

    def __call__(self, value) -> Scalar:
        """Convert an int, Fraction or matching element into this field."""
        if self.p is None:
            if isinstance(value, Mod):
                raise WrongField("prime-field element in a rational context")
            if isinstance(value, float):
                raise TypeError("floating point values are not allowed")
            return Fraction(value)
        if isinstance(value, Mod):
            if value.p != self.p:
                raise WrongField(f"GF({value.p}) element in GF({self.p})")
            return value
        if isinstance(value, Fraction):
            return Mod(value.numerator, self.p) / Mod(value.denominator, self.p)
        if isinstance(value, int):
            return Mod(value, self.p)
        raise TypeError(f"cannot convert {value!r} into GF({self.p})")

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def elements(self) -> Iterator[Mod]:
        if self.p is None:
            raise WrongField("the rationals cannot be enumerated")
        return (Mod(v, self.p) for v in range(self.p))

    def format(self, x: Scalar) -> str:
        """Exact string form: ``a`` or ``a/b`` for rationals, the residue otherwise."""
        return str(self(x))

    def parse_scalar(self, text: str) -> Scalar:
        if not isinstance(text, str):
            raise ScalarParseError(f"scalar must be a string, got {text!r}")
        if self.p is None:
            if not _RATIONAL_RE.match(text):
                raise ScalarParseError(f"bad rational {text!r}")
            num, _, den = text.partition("/")
            if den and int(den) == 0:
                raise ScalarParseError(f"zero denominator in {text!r}")
            value = Fraction(text)
            if str(value) != text:
                raise ScalarParseError(f"rational {text!r} is not in lowest terms")
            return value
        if not _RESIDUE_RE.match(text) or int(text) >= self.p:
            raise ScalarParseError(f"bad residue {text!r} for GF({self.p})")
        return Mod(int(text), self.p)

    def random(self, rng, bound: int) -> Scalar:
        """Draw a scalar: numerator in [-bound, bound] over denominator in
        [1, bound] for rationals; a residue in [0, min(bound, p)) otherwise."""
        if self.p is None:
            return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        return Mod(rng.randrange(min(bound, self.p)), self.p)


RATIONALS = FieldSpec()


@lru_cache(maxsize=None)
def _prime_field(p: int) -> FieldSpec:
    return FieldSpec(p)


def field_of(*values) -> FieldSpec:
    """Infer the field from scalars (ints and Fractions count as rational)."""
    for v in values:
        if isinstance(v, Mod):
            return _prime_field(v.p)
    return RATIONALS
