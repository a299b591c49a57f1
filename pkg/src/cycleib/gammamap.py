"""Shared storage for maps of L determined by the image of a_1."""

from __future__ import annotations

from .algebra import Element
from .errors import MixedFields
from .scalars import FieldDescriptor, Scalar


class GammaMap:
    """A linear map of L stored as gamma = coordinates of f(a_1).

    Trailing zeros are trimmed, so ``degree`` is the largest k with
    gamma_k != 0 (0 for the zero map) and equality is vector equality.
    """

    __slots__ = ("field", "gamma")
    keyword = "map"

    def __init__(self, fd: FieldDescriptor, gammas):
        cs = []
        for g in gammas:
            if isinstance(g, Scalar) and g.field != fd:
                raise MixedFields(f"scalar over {g.field} in a map over {fd}")
            cs.append(fd.coerce(g))
        while cs and not cs[-1]:
            cs.pop()
        self.field = fd
        self.gamma = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.gamma)

    def g(self, k: int):
        """Raw gamma_k (1-based), zero past the degree."""
        return self.gamma[k - 1] if 1 <= k <= len(self.gamma) else self.field.zero

    def coeff(self, k: int) -> Scalar:
        return Scalar(self.field, self.g(k))

    def image_of_a1(self) -> Element:
        return Element(self.field, {k + 1: v for k, v in enumerate(self.gamma)})

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.field == other.field and self.gamma == other.gamma

    def __hash__(self):
        return hash((type(self).__name__, self.field, self.gamma))

    def __str__(self):
        fd = self.field
        body = ", ".join(fd.format(v) for v in self.gamma) if self.gamma else "0"
        return f"{self.keyword} [{body}]"

    def __repr__(self):
        return f"{type(self).__name__}({self.field.name}, {self})"
