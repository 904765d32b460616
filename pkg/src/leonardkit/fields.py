"""Exact field arithmetic: the rationals and prime fields GF(p).

Elements are immutable and canonically represented -- reduced fraction
with positive denominator over the rationals, least nonnegative residue
over GF(p) -- so equality is structural.  Arithmetic never leaves the
field of its operands; combining elements of different fields raises
DescriptorMismatch.  All computation is exact; nothing in this package
touches floating point.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from .errors import DescriptorMismatch, InvariantViolation

MAX_MODULUS = 2**31

_RATIONAL_RE = re.compile(r"-?[0-9]+(/[1-9][0-9]*)?")
_RESIDUE_RE = re.compile(r"[0-9]+")

#: Raw machine representation of a field element: Fraction over the
#: rationals, int residue in [0, p) over GF(p).
Raw = Union[Fraction, int]


def _is_prime(n: int) -> bool:
    # trial division; moduli are capped below 2**31 so this is cheap
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Rationals:
    """Descriptor for the field of rational numbers."""

    kind = "rational"
    modulus = None

    __slots__ = ()

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "QQ"

    def coerce(self, value) -> Fraction:
        """Return the canonical raw representation of ``value``."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise DescriptorMismatch(f"expected element of {self}, got {value.field}")
            return value.value
        if isinstance(value, bool):
            raise TypeError("bool is not a field element")
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def parse(self, text: str) -> Fraction:
        if not _RATIONAL_RE.fullmatch(text):
            raise ValueError(f"malformed rational entry {text!r}")
        return Fraction(text)

    def format(self, raw: Fraction) -> str:
        return str(raw)

    def element(self, value) -> "FieldElement":
        return FieldElement(self, self.coerce(value))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, Fraction(0))

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, Fraction(1))

    # raw-value kernels ------------------------------------------------

    def raw_inv(self, a: Fraction) -> Fraction:
        if not a:
            raise ZeroDivisionError("division by zero")
        return 1 / a


class PrimeField:
    """Descriptor for GF(p), p prime, p < 2**31."""

    kind = "gf"

    __slots__ = ("modulus",)

    def __init__(self, modulus: int):
        if not isinstance(modulus, int) or modulus >= MAX_MODULUS:
            raise InvariantViolation(f"modulus must be an integer below 2**31, got {modulus!r}")
        if not _is_prime(modulus):
            raise InvariantViolation(f"modulus {modulus} is not prime")
        object.__setattr__(self, "modulus", modulus)

    def __setattr__(self, name, value):
        raise AttributeError("PrimeField is immutable")

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("gf", self.modulus))

    def __repr__(self):
        return f"GF({self.modulus})"

    def coerce(self, value) -> int:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise DescriptorMismatch(f"expected element of {self}, got {value.field}")
            return value.value
        if isinstance(value, bool):
            raise TypeError("bool is not a field element")
        if isinstance(value, int):
            return value % self.modulus
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def parse(self, text: str) -> int:
        if not _RESIDUE_RE.fullmatch(text):
            raise ValueError(f"malformed residue entry {text!r}")
        return int(text) % self.modulus

    def format(self, raw: int) -> str:
        return str(raw)

    def element(self, value) -> "FieldElement":
        return FieldElement(self, self.coerce(value))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    # raw-value kernels ------------------------------------------------

    def raw_inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("division by zero")
        return pow(a, -1, self.modulus)


Field = Union[Rationals, PrimeField]

#: Shared descriptor for the rationals.
QQ = Rationals()


def GF(p: int) -> PrimeField:
    """Descriptor for the prime field with ``p`` elements."""
    return PrimeField(p)


class FieldElement:
    """An exact element of the rationals or of GF(p).

    Supports the usual arithmetic operators against elements of the same
    field and against plain integers, which are coerced.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: Raw):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _raw_other(self, other) -> Raw:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise DescriptorMismatch(
                    f"cannot combine elements of {self.field} and {other.field}"
                )
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.field.coerce(other)
        if isinstance(other, Fraction) and isinstance(self.field, Rationals):
            return other
        return NotImplemented

    def __add__(self, other):
        raw = self._raw_other(other)
        if raw is NotImplemented:
            return NotImplemented
        field = self.field
        if isinstance(field, PrimeField):
            return FieldElement(field, (self.value + raw) % field.modulus)
        return FieldElement(field, self.value + raw)

    __radd__ = __add__

    def __sub__(self, other):
        raw = self._raw_other(other)
        if raw is NotImplemented:
            return NotImplemented
        field = self.field
        if isinstance(field, PrimeField):
            return FieldElement(field, (self.value - raw) % field.modulus)
        return FieldElement(field, self.value - raw)

    def __rsub__(self, other):
        raw = self._raw_other(other)
        if raw is NotImplemented:
            return NotImplemented
        field = self.field
        if isinstance(field, PrimeField):
            return FieldElement(field, (raw - self.value) % field.modulus)
        return FieldElement(field, raw - self.value)

    def __mul__(self, other):
        raw = self._raw_other(other)
        if raw is NotImplemented:
            return NotImplemented
        field = self.field
        if isinstance(field, PrimeField):
            return FieldElement(field, (self.value * raw) % field.modulus)
        return FieldElement(field, self.value * raw)

    __rmul__ = __mul__

    def __truediv__(self, other):
        raw = self._raw_other(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self._raw_div(self.value, raw))

    def __rtruediv__(self, other):
        raw = self._raw_other(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self._raw_div(raw, self.value))

    def _raw_div(self, a: Raw, b: Raw) -> Raw:
        field = self.field
        if isinstance(field, PrimeField):
            return (a * field.raw_inv(b)) % field.modulus
        if not b:
            raise ZeroDivisionError("division by zero")
        return a / b

    def __neg__(self):
        field = self.field
        if isinstance(field, PrimeField):
            return FieldElement(field, (-self.value) % field.modulus)
        return FieldElement(field, -self.value)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        field = self.field
        if isinstance(field, PrimeField):
            if exponent < 0 and not self.value:
                raise ZeroDivisionError("division by zero")
            return FieldElement(field, pow(self.value, exponent, field.modulus))
        if exponent < 0 and not self.value:
            raise ZeroDivisionError("division by zero")
        return FieldElement(field, self.value**exponent)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return other.field == self.field and other.value == self.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == self.field.coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return bool(self.value)

    def is_zero(self) -> bool:
        return not self.value

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"{self.field.format(self.value)} in {self.field!r}"
