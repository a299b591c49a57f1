"""Brute-force oracle on N x N truncations of column-finite matrices.

Column s of a window holds the first N coordinates of f(a_s).  Truncation
corrupts the trailing columns of a map that shifts support, so every
window records ``valid_cols``: columns 1..valid_cols are complete and are
the only ones compared or applied.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels, linalg
from .algebra import Element, bracket
from .derivations import Derivation, der_apply
from .endomorphisms import Endo, endo_apply
from .errors import DimensionMismatch, MixedFields, ParseError, WindowTooSmall
from .scalars import FieldDescriptor, Scalar, parse_scalar


@dataclass(frozen=True, eq=False)
class FinMatrixWindow:
    field: FieldDescriptor
    N: int
    entries: tuple  # N rows of N raw values
    valid_cols: int

    @classmethod
    def from_rows(cls, fd, rows, valid_cols=None):
        N = len(rows)
        if any(len(r) != N for r in rows):
            raise DimensionMismatch("window must be square")
        vc = N if valid_cols is None else max(0, min(valid_cols, N))
        return cls(fd, N, tuple(tuple(fd.coerce(x) for x in r) for r in rows), vc)

    def entry(self, r: int, c: int) -> Scalar:
        """1-based (row, column)."""
        return Scalar(self.field, self.entries[r - 1][c - 1])

    def column(self, s: int) -> Element:
        return Element(self.field, {r + 1: self.entries[r][s - 1] for r in range(self.N)})

    def apply(self, x: Element) -> Element:
        """M x for x supported on trusted columns."""
        if x.max_support() > self.valid_cols:
            raise WindowTooSmall(f"{x} reaches past trusted column {self.valid_cols}")
        out = Element.zero(self.field)
        for s, lam in x.items():
            out = out + self.column(s).scale(lam)
        return out

    def is_lower_triangular(self) -> bool:
        return all(not self.entries[r][c] for r in range(self.N) for c in range(r + 1, self.N))

    def is_unit_lower_triangular(self) -> bool:
        return self.is_lower_triangular() and all(self.entries[i][i] == 1 for i in range(self.N))

    def is_strictly_lower_triangular(self) -> bool:
        return self.is_lower_triangular() and all(not self.entries[i][i] for i in range(self.N))

    def agrees(self, other: FinMatrixWindow) -> bool:
        """Equality on the columns trusted by both windows."""
        if self.field != other.field or self.N != other.N:
            return False
        cols = min(self.valid_cols, other.valid_cols)
        return all(self.entries[r][c] == other.entries[r][c] for r in range(self.N) for c in range(cols))

    def with_entry(self, r: int, c: int, value) -> FinMatrixWindow:
        rows = [list(row) for row in self.entries]
        rows[r - 1][c - 1] = self.field.coerce(value)
        return FinMatrixWindow(self.field, self.N, tuple(tuple(x) for x in rows), self.valid_cols)

    def dump(self) -> str:
        return dump_matrix(self)


def _window_from_columns(fd, N, columns, valid_cols):
    rows = [[fd.zero] * N for _ in range(N)]
    for s, col in enumerate(columns):
        for n, v in col.items():
            if n <= N:
                rows[n - 1][s] = v
    return FinMatrixWindow(fd, N, tuple(tuple(r) for r in rows), valid_cols)


def _check_window(f, N):
    if N < max(f.degree, 1):
        raise WindowTooSmall(f"window {N} is smaller than the degree {f.degree} of {f}")


def matrix_of_endo(f: Endo, N: int) -> FinMatrixWindow:
    _check_window(f, N)
    fd = f.field
    cols = [endo_apply(f, Element.basis(fd, s)) for s in range(1, N + 1)]
    return _window_from_columns(fd, N, cols, min(N, N - f.degree + 1))


def matrix_of_der(f: Derivation, N: int) -> FinMatrixWindow:
    _check_window(f, N)
    fd = f.field
    cols = [der_apply(f, Element.basis(fd, s)) for s in range(1, N + 1)]
    return _window_from_columns(fd, N, cols, min(N, N - f.degree + 1))


def _trusted_product_cols(a: FinMatrixWindow, b: FinMatrixWindow) -> int:
    # column j of a.b is complete when column j of b is complete and every
    # row it touches indexes a complete column of a
    vc = 0
    for j in range(b.valid_cols):
        if any(b.entries[r][j] for r in range(a.valid_cols, b.N)):
            break
        vc = j + 1
    return vc


def matmul(a: FinMatrixWindow, b: FinMatrixWindow) -> FinMatrixWindow:
    if a.field != b.field:
        raise MixedFields(f"{a.field} vs {b.field}")
    if a.N != b.N:
        raise DimensionMismatch(f"{a.N} x {a.N} times {b.N} x {b.N}")
    prod = kernels.matmul([list(r) for r in a.entries], [list(r) for r in b.entries], a.field.modulus)
    fd = a.field
    rows = tuple(tuple(fd.coerce(x) for x in r) for r in prod)
    return FinMatrixWindow(fd, a.N, rows, _trusted_product_cols(a, b))


def matsub(a: FinMatrixWindow, b: FinMatrixWindow) -> FinMatrixWindow:
    if a.field != b.field or a.N != b.N:
        raise DimensionMismatch("windows differ in field or size")
    fd = a.field
    rows = tuple(tuple(fd.sub(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a.entries, b.entries))
    return FinMatrixWindow(fd, a.N, rows, min(a.valid_cols, b.valid_cols))


def commutator(a: FinMatrixWindow, b: FinMatrixWindow) -> FinMatrixWindow:
    return matsub(matmul(a, b), matmul(b, a))


def _safe_cols(M: FinMatrixWindow, margin: int) -> int:
    if margin < 1:
        raise WindowTooSmall("margin must be at least 1")
    safe = M.valid_cols - (margin - 1)
    if safe < 2:
        raise WindowTooSmall(f"only {max(safe, 0)} safe columns in a window of {M.N}")
    return safe


def oracle_check_endo(M: FinMatrixWindow, margin: int = 1) -> bool:
    """M[a_i, a_j] == [M a_i, M a_j] for all basis pairs in the safe sub-window."""
    safe = _safe_cols(M, margin)
    fd = M.field
    basis = [Element.basis(fd, n) for n in range(1, safe + 1)]
    images = [M.column(n) for n in range(1, safe + 1)]
    for i in range(safe):
        for j in range(safe - 1):
            lhs = M.apply(bracket(basis[i], basis[j]))
            if lhs != bracket(images[i], images[j]):
                return False
    return True


def oracle_check_der(M: FinMatrixWindow, margin: int = 1) -> bool:
    """M[a_i, a_j] == [M a_i, a_j] + [a_i, M a_j] in the safe sub-window."""
    safe = _safe_cols(M, margin)
    fd = M.field
    basis = [Element.basis(fd, n) for n in range(1, safe + 1)]
    images = [M.column(n) for n in range(1, safe + 1)]
    for i in range(safe):
        for j in range(safe - 1):
            lhs = M.apply(bracket(basis[i], basis[j]))
            if lhs != bracket(images[i], basis[j]) + bracket(basis[i], images[j]):
                return False
    return True


def matches_endo_pattern(M: FinMatrixWindow) -> bool:
    """Trusted columns follow entry(r, s) = c_1^(s-1) c_(r-s+1), c = column 1.

    A trusted column is complete, so the entries the pattern places below
    row N must vanish as well.
    """
    fd = M.field
    c = [row[0] for row in M.entries]
    for s in range(1, M.valid_cols + 1):
        scale = fd.power(c[0], s - 1)
        for r in range(1, M.N + 1):
            t = r - s + 1
            want = fd.mul(scale, c[t - 1]) if t >= 1 else fd.zero
            if M.entries[r - 1][s - 1] != want:
                return False
        for t in range(M.N - s + 2, M.N + 1):
            if fd.mul(scale, c[t - 1]):
                return False
    return True


def matches_der_pattern(M: FinMatrixWindow) -> bool:
    """Trusted columns: diagonal s c_1, constant bands c_t below it."""
    fd = M.field
    c = [row[0] for row in M.entries]
    for s in range(1, M.valid_cols + 1):
        for r in range(1, M.N + 1):
            if r == s:
                want = fd.mul(fd.from_int(s), c[0])
            elif r > s:
                want = c[r - s]
            else:
                want = fd.zero
            if M.entries[r - 1][s - 1] != want:
                return False
        for t in range(max(2, M.N - s + 2), M.N + 1):
            if c[t - 1]:
                return False
    return True


def window_kernel(M: FinMatrixWindow):
    """Basis of the kernel of the N x N window as elements of span{a_1..a_N}."""
    fd = M.field
    return [Element.from_vector(fd, v) for v in linalg.nullspace([list(r) for r in M.entries], M.N, fd)]


def window_preimage(f: Endo, y: Element, N: int):
    """Some x in span{a_1..a_N} with f(x) = y, or None.

    All rows of f(a_1..a_N) are kept (up to index N + deg f - 1), so a
    None result certifies that no x of support <= N maps onto y.
    """
    fd = f.field
    cols = [endo_apply(f, Element.basis(fd, s)) for s in range(1, N + 1)]
    R = max([N, y.max_support()] + [c.max_support() for c in cols])
    rows = [[c.raw(r) for c in cols] for r in range(1, R + 1)]
    sol = linalg.solve(rows, [y.raw(r) for r in range(1, R + 1)], N, fd)
    return None if sol is None else Element.from_vector(fd, sol)


def dump_matrix(M: FinMatrixWindow) -> str:
    """Row-major grid of scalar literals, one row per line."""
    cells = [[M.field.format(x) for x in row] for row in M.entries]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def parse_matrix_dump(fd: FieldDescriptor, text: str, valid_cols=None) -> FinMatrixWindow:
    rows = []
    for lineno, line in enumerate(text.strip().splitlines()):
        if line.lstrip().startswith("#"):
            continue
        try:
            rows.append([parse_scalar(fd, tok).value for tok in line.split()])
        except ParseError as exc:
            raise ParseError(f"bad matrix entry on line {lineno + 1}", text, exc.position) from None
    return FinMatrixWindow.from_rows(fd, rows, valid_cols)
