"""Exact scalar fields: the rationals and prime fields GF(p).

Elements are immutable and always stored in canonical form (a reduced
``Fraction`` for the rationals, a residue in ``[0, p)`` for GF(p)), so
equality and hashing are structural.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union


class FieldParseError(ValueError):
    """Malformed scalar text or field header."""


class FieldZeroDivisionError(ZeroDivisionError):
    """Raised when inverting the zero element."""


_INT = r"[+-]?\d+"
_ELEMENT_RE = re.compile(rf"^\s*({_INT})\s*(?:/\s*({_INT}))?\s*$")
_HEADER_RE = re.compile(r"^\s*(?:Q|GF\(\s*(\d+)\s*\))\s*$")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if n % p == 0:
            return n == p
    # Miller-Rabin with these witnesses is deterministic below 3.3e24.
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Field:
    """Descriptor for Q (``modulus == 0``) or GF(p)."""

    modulus: int = 0

    def __post_init__(self) -> None:
        if self.modulus != 0 and not _is_prime(self.modulus):
            raise ValueError(f"GF({self.modulus}): modulus is not prime")

    @classmethod
    def rationals(cls) -> "Field":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(p)

    @property
    def characteristic(self) -> int:
        return self.modulus

    @property
    def is_rational(self) -> bool:
        return self.modulus == 0

    @property
    def zero(self) -> "FieldElement":
        return self(0)

    @property
    def one(self) -> "FieldElement":
        return self(1)

    def __call__(self, value: "Scalar") -> "FieldElement":
        """Coerce an int, Fraction or element of this field into the field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise TypeError(f"cannot coerce element of {value.field} into {self}")
            return value
        if isinstance(value, bool):
            value = int(value)
        if self.modulus == 0:
            if isinstance(value, (int, Fraction)):
                return FieldElement(self, Fraction(value))
        else:
            p = self.modulus
            if isinstance(value, int):
                return FieldElement(self, value % p)
            if isinstance(value, Fraction):
                den = value.denominator % p
                if den == 0:
                    raise FieldZeroDivisionError(f"{value} has no image in {self}")
                return FieldElement(self, value.numerator * pow(den, -1, p) % p)
        raise TypeError(f"cannot coerce {type(value).__name__} into {self}")

    def parse(self, text: str) -> "FieldElement":
        """Parse ``INT`` or ``INT/INT`` (rationals only) into a canonical element."""
        m = _ELEMENT_RE.match(text)
        if not m:
            raise FieldParseError(f"malformed scalar {text!r}")
        num, den = m.group(1), m.group(2)
        if den is None:
            return self(int(num))
        if self.modulus != 0:
            raise FieldParseError(f"fractions are not accepted over {self}: {text!r}")
        if int(den) == 0:
            raise FieldParseError(f"zero denominator in {text!r}")
        return self(Fraction(int(num), int(den)))

    @classmethod
    def parse_header(cls, text: str) -> "Field":
        m = _HEADER_RE.match(text)
        if not m:
            raise FieldParseError(f"unknown field {text.strip()!r}; expected Q or GF(p)")
        if m.group(1) is None:
            return cls(0)
        try:
            return cls(int(m.group(1)))
        except ValueError as exc:
            raise FieldParseError(str(exc)) from None

    def __str__(self) -> str:
        return "Q" if self.modulus == 0 else f"GF({self.modulus})"


class FieldElement:
    __slots__ = ("field", "value")

    field: Field
    value: Union[Fraction, int]

    def __init__(self, field: Field, value: Union[Fraction, int]) -> None:
        # callers go through Field.__call__, which canonicalises
        self.field = field
        self.value = value

    def _coerce(self, other: object) -> "FieldElement | None":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise TypeError(f"mixed fields {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return None

    def _make(self, value: Union[Fraction, int]) -> "FieldElement":
        p = self.field.modulus
        return FieldElement(self.field, value % p if p else value)

    def __add__(self, other: object) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._make(self.value + o.value)

    __radd__ = __add__

    def __sub__(self, other: object) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._make(self.value - o.value)

    def __rsub__(self, other: object) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._make(o.value - self.value)

    def __mul__(self, other: object) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._make(self.value * o.value)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if not self.value:
            raise FieldZeroDivisionError(f"division by zero in {self.field}")
        p = self.field.modulus
        if p:
            return FieldElement(self.field, pow(self.value, -1, p))
        return FieldElement(self.field, 1 / self.value)

    def __truediv__(self, other: object) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self) -> "FieldElement":
        return self._make(-self.value)

    def __pos__(self) -> "FieldElement":
        return self

    def __pow__(self, exponent: int) -> "FieldElement":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        p = self.field.modulus
        if p:
            return FieldElement(self.field, pow(base.value, abs(exponent), p))
        return FieldElement(self.field, base.value ** abs(exponent))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.field(other).value
            except FieldZeroDivisionError:
                return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __bool__(self) -> bool:
        return bool(self.value)

    def is_zero(self) -> bool:
        return not self.value

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"{self.field}({self.value})"


Scalar = Union[int, Fraction, FieldElement]

Q = Field.rationals()


def GF(p: int) -> Field:
    return Field.prime(p)
