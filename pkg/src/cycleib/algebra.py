"""Elements of the cyclic Leibniz algebra L and its bracket.

L has basis a_1, a_2, ... with [a_1, a_n] = a_{n+1} and [a_m, a_k] = 0
for m > 1.  Elements are sparse, eagerly normalised maps from basis index
to raw field value.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import linalg
from .errors import BadIndex, MixedFields
from .scalars import FieldDescriptor, Scalar


class Element:
    __slots__ = ("field", "_c")

    def __init__(self, fd: FieldDescriptor, coeffs=None):
        self.field = fd
        c = {}
        if coeffs:
            for n, v in coeffs.items():
                if v:
                    c[n] = v
        self._c = c

    @classmethod
    def _raw(cls, fd, c):
        # trusted constructor: c already normalised
        e = cls.__new__(cls)
        e.field = fd
        e._c = c
        return e

    @classmethod
    def zero(cls, fd):
        return cls._raw(fd, {})

    @classmethod
    def basis(cls, fd, n: int, coeff=None):
        if n < 1:
            raise BadIndex(f"basis index must be >= 1, got {n}")
        v = fd.one if coeff is None else fd.coerce(coeff)
        return cls._raw(fd, {n: v} if v else {})

    def coeff(self, n: int) -> Scalar:
        return Scalar(self.field, self._c.get(n, self.field.zero))

    def raw(self, n: int):
        return self._c.get(n, self.field.zero)

    def items(self):
        """(index, raw value) pairs in increasing index order."""
        return sorted(self._c.items())

    def terms(self):
        return [(n, Scalar(self.field, v)) for n, v in self.items()]

    def support(self):
        return sorted(self._c)

    def max_support(self) -> int:
        """Largest index with a nonzero coefficient; 0 for the zero element."""
        return max(self._c, default=0)

    def min_support(self) -> int:
        return min(self._c, default=0)

    def is_zero(self) -> bool:
        return not self._c

    def vector(self, n: int):
        """Dense coordinates a_1..a_n; raises if the element does not fit."""
        if self.max_support() > n:
            raise BadIndex(f"element reaches a_{self.max_support()}, window is {n}")
        z = self.field.zero
        return [self._c.get(i, z) for i in range(1, n + 1)]

    @classmethod
    def from_vector(cls, fd, vec, start: int = 1):
        return cls(fd, {start + i: v for i, v in enumerate(vec)})

    def _check(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        if other.field != self.field:
            raise MixedFields(f"{self.field} vs {other.field}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        fd = self.field
        c = dict(self._c)
        for n, v in other._c.items():
            s = fd.add(c.get(n, fd.zero), v)
            if s:
                c[n] = s
            else:
                c.pop(n, None)
        return Element._raw(fd, c)

    def __neg__(self):
        fd = self.field
        return Element._raw(fd, {n: fd.neg(v) for n, v in self._c.items()})

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def scale(self, alpha) -> Element:
        fd = self.field
        a = fd.coerce(alpha)
        if not a:
            return Element.zero(fd)
        return Element._raw(fd, {n: fd.mul(a, v) for n, v in self._c.items()})

    def __rmul__(self, alpha):
        return self.scale(alpha)

    def shift(self, by: int = 1) -> Element:
        """a_n -> a_{n+by}."""
        return Element._raw(self.field, {n + by: v for n, v in self._c.items()})

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.field == other.field and self._c == other._c

    def __hash__(self):
        return hash((self.field, tuple(self.items())))

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"Element({self.field.name}, {self})"


def format_element(x: Element) -> str:
    if x.is_zero():
        return "0"
    fd = x.field
    parts = []
    for n, v in x.items():
        neg = False
        if fd.p is None and v < 0:
            neg, v = True, -v
        text = f"a{n}" if v == 1 else f"{fd.format(v)}*a{n}"
        if not parts:
            parts.append(f"-{text}" if neg else text)
        else:
            parts.append(f"- {text}" if neg else f"+ {text}")
    return " ".join(parts)


def element_make(fd: FieldDescriptor, pairs) -> Element:
    """Build an element from (index, scalar) pairs; duplicates are summed."""
    c = {}
    for n, s in pairs:
        if n < 1:
            raise BadIndex(f"basis index must be >= 1, got {n}")
        if isinstance(s, Scalar) and s.field != fd:
            raise MixedFields(f"scalar over {s.field} in an element over {fd}")
        c[n] = fd.add(c.get(n, fd.zero), fd.coerce(s))
    return Element(fd, c)


def _same_field(*xs):
    fd = xs[0].field
    for x in xs[1:]:
        if x.field != fd:
            raise MixedFields(f"{fd} vs {x.field}")
    return fd


def bracket(x: Element, y: Element) -> Element:
    """[x, y] = lambda_1 * shift(y), lambda_1 the a_1-coordinate of x."""
    _same_field(x, y)
    lam = x.raw(1)
    if not lam:
        return Element.zero(x.field)
    return y.shift(1).scale(lam)


def leibniz_defect(a: Element, b: Element, c: Element) -> Element:
    """[a,[b,c]] - [[a,b],c] - [b,[a,c]]; zero on a left Leibniz algebra."""
    _same_field(a, b, c)
    return bracket(a, bracket(b, c)) - bracket(bracket(a, b), c) - bracket(b, bracket(a, c))


@dataclass(frozen=True, eq=False)
class WindowSubspace:
    """A subspace of span{a_1..a_N}.

    Either ``span{a_start, ..., a_N}`` (``start`` set; ``start == N + 1``
    is the zero subspace) or the span of an explicit ``basis``.
    """

    N: int
    fd: FieldDescriptor
    start: int | None = None
    basis: tuple = dc_field(default=())

    def __post_init__(self):
        for b in self.basis:
            if b.max_support() > self.N:
                raise BadIndex(f"basis element {b} leaves the window 1..{self.N}")

    def elements(self):
        if self.start is not None:
            return [Element.basis(self.fd, n) for n in range(self.start, self.N + 1)]
        return list(self.basis)

    def canonical(self):
        return linalg.canonical_basis([e.vector(self.N) for e in self.elements()], self.N, self.fd)

    @property
    def dim(self) -> int:
        return len(self.canonical())

    def is_zero(self) -> bool:
        return self.dim == 0

    def contains(self, x: Element) -> bool:
        if x.field != self.fd:
            raise MixedFields(f"{x.field} vs {self.fd}")
        if x.max_support() > self.N:
            return False
        if self.start is not None:
            return x.is_zero() or x.min_support() >= self.start
        vecs = [e.vector(self.N) for e in self.elements()]
        return linalg.rank(vecs + [x.vector(self.N)], self.N, self.fd) == linalg.rank(vecs, self.N, self.fd)

    def span_start(self):
        """j when the subspace equals span{a_j..a_N} (N + 1 for zero), else None."""
        if self.start is not None:
            return self.start
        can = self.canonical()
        j = self.N + 1 - len(can)
        expected = [[self.fd.one if i == r else self.fd.zero for i in range(self.N)] for r in range(j - 1, self.N)]
        return j if can == expected else None

    def __eq__(self, other):
        if not isinstance(other, WindowSubspace):
            return NotImplemented
        return self.N == other.N and self.fd == other.fd and self.canonical() == other.canonical()

    def __str__(self):
        j = self.span_start()
        if j is not None:
            if j > self.N:
                return "0"
            if j == self.N:
                return f"span{{a{j}}}"
            return f"span{{a{j}, ..., a{self.N}}}"
        return "span{" + ", ".join(str(Element.from_vector(self.fd, r)) for r in self.canonical()) + "}"


def gamma_window(k: int, N: int, fd: FieldDescriptor | None = None) -> WindowSubspace:
    """The k-th lower central term restricted to the window: span{a_k..a_N}."""
    from .scalars import Q

    if k < 1:
        raise BadIndex(f"k must be >= 1, got {k}")
    return WindowSubspace(N, fd or Q, start=min(k, N + 1))


def _bracket_table(N, fd, left: bool):
    # rows of the linear map x -> ([x, a_j])_j (left) or ([a_j, x])_j (right),
    # each bracket landing in a_1..a_{N+1}
    rows = []
    basis = [Element.basis(fd, i) for i in range(1, N + 1)]
    for j in range(1, N + 1):
        aj = basis[j - 1]
        images = [bracket(ai, aj) if left else bracket(aj, ai) for ai in basis]
        for r in range(1, N + 2):
            rows.append([img.raw(r) for img in images])
    return rows


def centers_window(N: int, fd: FieldDescriptor | None = None):
    """(left, right, center) of L solved as linear systems inside span{a_1..a_N}."""
    from .scalars import Q

    fd = fd or Q
    if N < 2:
        raise BadIndex(f"window must be >= 2, got {N}")
    left_rows = _bracket_table(N, fd, left=True)
    right_rows = _bracket_table(N, fd, left=False)

    def solve(rows):
        vecs = linalg.nullspace(rows, N, fd)
        return WindowSubspace(N, fd, basis=tuple(Element.from_vector(fd, v) for v in vecs))

    return solve(left_rows), solve(right_rows), solve(left_rows + right_rows)
