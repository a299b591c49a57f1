"""Pure-Python kernels.

All functions take raw field values and a modulus ``p`` (0 for the
rationals, where the values are ``Fraction`` instances).  Matrices are
lists of rows.  This module is the reference and the fallback for the
compiled kernels, and the only path for the rationals.
"""

from fractions import Fraction


def _inverse(x, p):
    return pow(x, -1, p) if p else 1 / Fraction(x)


def matmul(a, b, p):
    """Exact product of an (n x k) and a (k x m) matrix; zero entries are skipped."""
    n = len(a)
    k = len(b)
    m = len(b[0]) if k else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        row = a[i]
        acc = out[i]
        for r in range(k):
            x = row[r]
            if not x:
                continue
            brow = b[r]
            for j in range(m):
                y = brow[j]
                if y:
                    acc[j] += x * y
        if p:
            for j in range(m):
                acc[j] %= p
    return out


def convolve(a, b, p):
    """Coefficient list of the product of two polynomials (lists, low degree first)."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    if p:
        out = [c % p for c in out]
    return out


def rref(rows, ncols, p):
    """Reduced row echelon form.

    Returns ``(reduced, pivots)`` where ``reduced`` holds only the nonzero
    rows and ``pivots[i]`` is the pivot column of row ``i``.
    """
    m = [list(r) for r in rows]
    pivots = []
    lead = 0
    nrows = len(m)
    for col in range(ncols):
        if lead >= nrows:
            break
        piv = None
        for r in range(lead, nrows):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[lead], m[piv] = m[piv], m[lead]
        inv = _inverse(m[lead][col], p)
        prow = [x * inv % p if p else x * inv for x in m[lead]]
        m[lead] = prow
        for r in range(nrows):
            if r == lead:
                continue
            f = m[r][col]
            if not f:
                continue
            row = m[r]
            if p:
                m[r] = [(row[j] - f * prow[j]) % p for j in range(ncols)]
            else:
                m[r] = [row[j] - f * prow[j] for j in range(ncols)]
        pivots.append(col)
        lead += 1
    return m[:lead], pivots
