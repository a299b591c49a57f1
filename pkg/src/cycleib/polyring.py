"""Dense univariate polynomials over a FieldDescriptor."""

from __future__ import annotations

from . import kernels
from .errors import MixedFields
from .scalars import FieldDescriptor, Scalar


class Polynomial:
    """Coefficient ``coeffs[k]`` multiplies X^k; trailing zeros are trimmed."""

    __slots__ = ("field", "coeffs")

    def __init__(self, fd: FieldDescriptor, coeffs):
        cs = [fd.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = fd
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Scalar:
        v = self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero
        return Scalar(self.field, v)

    def __mul__(self, other):
        return poly_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self.field.name}, {self})"


def format_polynomial(p: Polynomial) -> str:
    if not p.coeffs:
        return "0"
    fd = p.field
    parts = []
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        neg = fd.p is None and c < 0
        mag = -c if neg else c
        mono = "" if k == 0 else ("X" if k == 1 else f"X^{k}")
        if not mono:
            text = fd.format(mag)
        elif mag == 1:
            text = mono
        else:
            text = f"{fd.format(mag)}*{mono}"
        if parts:
            parts.append(("- " if neg else "+ ") + text)
        else:
            parts.append(("-" if neg else "") + text)
    return " ".join(parts)


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.field != q.field:
        raise MixedFields(f"{p.field} vs {q.field}")
    return Polynomial(p.field, kernels.convolve(list(p.coeffs), list(q.coeffs), p.field.modulus))


def poly_unit_constant(p: Polynomial) -> bool:
    return bool(p.coeffs) and p.coeffs[0] == 1
