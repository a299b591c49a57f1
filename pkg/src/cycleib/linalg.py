"""Exact dense linear algebra over a FieldDescriptor, on raw values."""

from . import kernels


def rref(rows, ncols, fd):
    reduced, pivots = kernels.rref(rows, ncols, fd.modulus)
    return [[fd.coerce(x) for x in r] for r in reduced], pivots


def rank(rows, ncols, fd) -> int:
    return len(kernels.rref(rows, ncols, fd.modulus)[1])


def nullspace(rows, ncols, fd):
    """Basis of {x : rows . x = 0}, one vector per free column."""
    reduced, pivots = rref(rows, ncols, fd)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [fd.zero] * ncols
        v[free] = fd.one
        for row, pc in zip(reduced, pivots):
            v[pc] = fd.neg(row[free])
        basis.append(v)
    return basis


def solve(rows, rhs, ncols, fd):
    """One solution of ``rows . x = rhs`` or None when the system is inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = rref(aug, ncols + 1, fd)
    if pivots and pivots[-1] == ncols:
        return None
    x = [fd.zero] * ncols
    for row, pc in zip(reduced, pivots):
        x[pc] = row[ncols]
    return x


def canonical_basis(vectors, ncols, fd):
    """RREF of the span; equal spans give equal results."""
    if not vectors:
        return []
    return rref(vectors, ncols, fd)[0]
