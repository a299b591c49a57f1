# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(p) kernels.

Residues live in C ``long long``; p < 2^31 keeps every product below 2^62.
The rationals (p == 0) are delegated to the pure-Python kernels.
"""

from libc.stdlib cimport malloc, free

from . import _kernels_py

ctypedef long long i64


cdef inline i64 _inv_mod(i64 a, i64 p):
    cdef i64 t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


cdef i64* _to_c(rows, Py_ssize_t n, Py_ssize_t m, i64 p) except NULL:
    cdef i64* buf = <i64*> malloc(max(n * m, 1) * sizeof(i64))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    for i in range(n):
        row = rows[i]
        for j in range(m):
            buf[i * m + j] = (<i64> row[j]) % p
    return buf


cdef list _from_c(i64* buf, Py_ssize_t n, Py_ssize_t m):
    cdef Py_ssize_t i, j
    cdef list out = []
    for i in range(n):
        out.append([buf[i * m + j] for j in range(m)])
    return out


def matmul(a, b, p):
    if not p:
        return _kernels_py.matmul(a, b, p)
    cdef i64 mod = p
    cdef Py_ssize_t n = len(a), k = len(b)
    cdef Py_ssize_t m = len(b[0]) if k else 0
    cdef i64* A = _to_c(a, n, k, mod)
    cdef i64* B = _to_c(b, k, m, mod)
    cdef i64* C = <i64*> malloc(max(n * m, 1) * sizeof(i64))
    cdef Py_ssize_t i, j, r
    cdef i64 x
    try:
        for i in range(n * m):
            C[i] = 0
        for i in range(n):
            for r in range(k):
                x = A[i * k + r]
                if x == 0:
                    continue
                for j in range(m):
                    C[i * m + j] = (C[i * m + j] + x * B[r * m + j]) % mod
        return _from_c(C, n, m)
    finally:
        free(A)
        free(B)
        free(C)


def convolve(a, b, p):
    if not p:
        return _kernels_py.convolve(a, b, p)
    if not a or not b:
        return []
    cdef i64 mod = p
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    cdef i64* A = _to_c([a], 1, la, mod)
    cdef i64* B = _to_c([b], 1, lb, mod)
    cdef i64* C = <i64*> malloc((la + lb - 1) * sizeof(i64))
    try:
        for i in range(la + lb - 1):
            C[i] = 0
        for i in range(la):
            if A[i] == 0:
                continue
            for j in range(lb):
                C[i + j] = (C[i + j] + A[i] * B[j]) % mod
        return [C[i] for i in range(la + lb - 1)]
    finally:
        free(A)
        free(B)
        free(C)


def rref(rows, ncols, p):
    if not p:
        return _kernels_py.rref(rows, ncols, p)
    cdef i64 mod = p
    cdef Py_ssize_t n = len(rows), m = ncols
    cdef i64* M = _to_c(rows, n, m, mod)
    cdef Py_ssize_t lead = 0, col, r, piv, j
    cdef i64 inv, f, tmp
    pivots = []
    try:
        for col in range(m):
            if lead >= n:
                break
            piv = -1
            for r in range(lead, n):
                if M[r * m + col] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != lead:
                for j in range(m):
                    tmp = M[lead * m + j]
                    M[lead * m + j] = M[piv * m + j]
                    M[piv * m + j] = tmp
            inv = _inv_mod(M[lead * m + col], mod)
            for j in range(m):
                M[lead * m + j] = M[lead * m + j] * inv % mod
            for r in range(n):
                if r == lead:
                    continue
                f = M[r * m + col]
                if f == 0:
                    continue
                for j in range(m):
                    M[r * m + j] = (M[r * m + j] - f * M[lead * m + j]) % mod
                    if M[r * m + j] < 0:
                        M[r * m + j] += mod
            pivots.append(col)
            lead += 1
        return _from_c(M, lead, m), pivots
    finally:
        free(M)
