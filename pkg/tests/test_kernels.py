import random
from fractions import Fraction

import pytest

from cycleib import kernels
from cycleib.kernels import available_backends

BACKENDS = available_backends()


def naive_matmul(a, b, p):
    n, m = len(a), len(b[0])
    out = [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(m)] for i in range(n)]
    return [[x % p for x in row] for row in out] if p else out


def naive_convolve(a, b, p):
    out = [0] * max(len(a) + len(b) - 1, 0)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return [x % p for x in out] if p else out


def naive_rank(rows, p):
    """Textbook Gauss-Jordan rank, kept separate from the library code."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank, col, ncols = 0, 0, len(rows[0]) if rows else 0
    while rank < len(m) and col < ncols:
        piv = next((i for i in range(rank, len(m)) if (m[i][col] % p if p else m[i][col])), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(int(m[rank][col]), -1, p) if p else 1 / m[rank][col]
        m[rank] = [(x * inv) % p if p else x * inv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [(x - f * y) % p if p else x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


def random_matrix(rng, n, m, p):
    return [[rng.randrange(p) if rng.random() < 0.6 else 0 for _ in range(m)] for _ in range(n)]


def test_selected_backend_is_listed():
    assert kernels.BACKEND in BACKENDS


@pytest.mark.parametrize("name", sorted(BACKENDS))
@pytest.mark.parametrize("p", [2, 5, 7, 2**31 - 1])
def test_matmul_and_convolve(name, p):
    impl = BACKENDS[name]
    rng = random.Random(f"{name}:{p}")
    for n in (1, 3, 8):
        a, b = random_matrix(rng, n, n, p), random_matrix(rng, n, n, p)
        assert impl.matmul(a, b, p) == naive_matmul(a, b, p)
        u = [rng.randrange(p) for _ in range(n)]
        v = [rng.randrange(p) for _ in range(n + 2)]
        assert impl.convolve(u, v, p) == naive_convolve(u, v, p)
    assert impl.convolve([], [1], p) == []


@pytest.mark.parametrize("name", sorted(BACKENDS))
@pytest.mark.parametrize("p", [2, 3, 5, 2**31 - 1])
def test_rref(name, p):
    impl = BACKENDS[name]
    rng = random.Random(f"rref:{name}:{p}")
    for _ in range(30):
        n, m = rng.randint(1, 7), rng.randint(1, 7)
        rows = random_matrix(rng, n, m, p)
        reduced, pivots = impl.rref([list(r) for r in rows], m, p)
        assert len(reduced) == len(pivots) == naive_rank(rows, p)
        assert pivots == sorted(pivots)
        for i, c in enumerate(pivots):
            assert [r[c] for r in reduced] == [int(i == k) for k in range(len(reduced))]
        # same row space: stacking the reduced rows adds no rank
        assert naive_rank(rows + reduced, p) == len(reduced)


def test_rational_path_matches_naive():
    impl = BACKENDS["python"]
    a = [[Fraction(1, 2), 0], [3, Fraction(-1, 3)]]
    assert impl.matmul(a, a, 0) == naive_matmul(a, a, 0)
    assert impl.convolve([Fraction(1, 2), 1], [1, 1], 0) == [Fraction(1, 2), Fraction(3, 2), 1]


def test_backends_agree():
    if len(BACKENDS) < 2:
        pytest.skip("compiled kernels not built")
    rng = random.Random(7)
    c, py = BACKENDS["cython"], BACKENDS["python"]
    for _ in range(20):
        p = rng.choice([2, 3, 5, 101])
        a, b = random_matrix(rng, 6, 6, p), random_matrix(rng, 6, 6, p)
        assert c.matmul(a, b, p) == py.matmul(a, b, p)
        assert c.rref([list(r) for r in a], 6, p) == py.rref([list(r) for r in a], 6, p)
