"""Exact scalars over the rationals or a prime field GF(p).

Internally every module works on *raw* field values: ``Fraction`` for the
rationals and ``int`` residues in ``[0, p)`` for GF(p).  A
:class:`FieldDescriptor` knows how to combine raw values; :class:`Scalar`
is the public, field-tagged wrapper.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, InvalidField, MixedFields, ParseError

RATIONALS = "Rationals"
PRIME_FIELD = "PrimeField"

_MAX_PRIME = 2**31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldDescriptor:
    kind: str = RATIONALS
    p: int | None = None

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.p is not None:
                raise InvalidField("the rationals take no modulus")
        elif self.kind == PRIME_FIELD:
            if not isinstance(self.p, int) or not (self.p < _MAX_PRIME and is_prime(self.p)):
                raise InvalidField(f"GF(p) needs a prime p < 2^31, got {self.p!r}")
        else:
            raise InvalidField(f"unknown field kind {self.kind!r}")

    @property
    def char(self) -> int:
        return 0 if self.kind == RATIONALS else self.p

    @property
    def modulus(self) -> int:
        """0 for the rationals, p otherwise (the kernels' convention)."""
        return self.char

    @property
    def name(self) -> str:
        return "Q" if self.kind == RATIONALS else f"GF{self.p}"

    def __str__(self):
        return self.name

    # -- raw value arithmetic ------------------------------------------------

    @property
    def zero(self):
        return Fraction(0) if self.p is None else 0

    @property
    def one(self):
        return Fraction(1) if self.p is None else 1

    def coerce(self, value):
        """Turn an int, Fraction, Scalar or numeric string into a raw value."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise MixedFields(f"scalar over {value.field} used in {self}")
            return value.value
        if isinstance(value, str):
            return parse_scalar(self, value).value
        if isinstance(value, bool):
            value = int(value)
        if self.p is None:
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            raise TypeError(f"cannot coerce {value!r} into Q")
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise DivisionByZero(f"denominator of {value} vanishes in {self}")
            return value.numerator * pow(den, -1, self.p) % self.p
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else a * b % self.p

    def inv(self, a):
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in {self}")
        return 1 / a if self.p is None else pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, n: int):
        return a**n if self.p is None else pow(a, n, self.p)

    def from_int(self, n: int):
        return Fraction(n) if self.p is None else n % self.p

    def format(self, a) -> str:
        return str(a)

    def scalar(self, value) -> Scalar:
        return Scalar(self, self.coerce(value))


Q = FieldDescriptor()


def GF(p: int) -> FieldDescriptor:
    return FieldDescriptor(PRIME_FIELD, p)


_FIELD_RE = re.compile(r"^\s*(?:Q|QQ|GF\s*\(?\s*(\d+)\s*\)?)\s*$", re.IGNORECASE)


def parse_field(text: str) -> FieldDescriptor:
    """``Q``, ``GF5`` or ``GF(5)``."""
    m = _FIELD_RE.match(text)
    if not m:
        raise InvalidField(f"unrecognised field {text!r}; use Q or GF<p>")
    return Q if m.group(1) is None else GF(int(m.group(1)))


@dataclass(frozen=True)
class Scalar:
    field: FieldDescriptor
    value: object

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise MixedFields(f"{self.field} vs {other.field}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return Scalar(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Scalar(self.field, self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return Scalar(self.field, self.field.div(self._other(other), self.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        return Scalar(self.field, self.field.power(self.value, n))

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.field.coerce(other)
            except DivisionByZero:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def inv(self) -> Scalar:
        return Scalar(self.field, self.field.inv(self.value))

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"Scalar({self.field.name}, {self})"


def field_char(fd: FieldDescriptor) -> int:
    return fd.char


def scalar_inv(x: Scalar) -> Scalar:
    return x.inv()


_SCALAR_RE = re.compile(r"^\s*([+-]?)\s*(\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_scalar(fd: FieldDescriptor, text: str) -> Scalar:
    """Parse ``-3`` or ``2/5``; over GF(p) the result is reduced mod p."""
    m = _SCALAR_RE.match(text)
    if not m:
        raise ParseError(f"bad scalar {text!r}", text, 0)
    num = int(m.group(2))
    if m.group(1) == "-":
        num = -num
    den = int(m.group(3)) if m.group(3) is not None else 1
    if den == 0:
        raise DivisionByZero(f"zero denominator in {text!r}")
    return Scalar(fd, fd.coerce(Fraction(num, den)))
