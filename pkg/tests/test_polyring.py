import pytest
from hypothesis import given, strategies as st

from cycleib import GF, Q, Polynomial, poly_mul
from cycleib.errors import MixedFields
from cycleib.polyring import poly_unit_constant

from .conftest import raw_scalars, with_field


def naive_product(p, q):
    fd = p.field
    out = [fd.zero] * max(len(p.coeffs) + len(q.coeffs) - 1, 0)
    for i, a in enumerate(p.coeffs):
        for j, b in enumerate(q.coeffs):
            out[i + j] = fd.add(out[i + j], fd.mul(a, b))
    return Polynomial(fd, out)


def polys(fd):
    return st.lists(raw_scalars(fd), max_size=7).map(lambda cs: Polynomial(fd, cs))


def test_square_of_one_plus_x():
    p = Polynomial(Q, [1, 1])
    assert p * p == Polynomial(Q, [1, 2, 1])
    assert str(p * p) == "1 + 2*X + X^2"


def test_formatting():
    assert str(Polynomial(Q, [])) == "0"
    assert str(Polynomial(Q, [0, -1, 0, "1/2"])) == "-X + 1/2*X^3"
    assert str(Polynomial(GF(5), [4, 0, 1])) == "4 + X^2"


def test_degree_and_trim():
    assert Polynomial(Q, [1, 0, 0]).degree == 0
    assert Polynomial(Q, [0, 0]).degree == -1
    assert Polynomial(GF(3), [1, 3]).degree == 0


def test_frobenius_in_gf5():
    # (1 + X)^5 = 1 + X^5 in characteristic 5
    one_x = Polynomial(GF(5), [1, 1])
    acc = Polynomial(GF(5), [1])
    for _ in range(5):
        acc = acc * one_x
    assert acc == Polynomial(GF(5), [1, 0, 0, 0, 0, 1])


def test_unit_constant():
    assert poly_unit_constant(Polynomial(Q, [1, 5]))
    assert not poly_unit_constant(Polynomial(Q, [2, 5]))
    assert not poly_unit_constant(Polynomial(Q, []))


def test_mixed_fields():
    with pytest.raises(MixedFields):
        poly_mul(Polynomial(Q, [1]), Polynomial(GF(5), [1]))


@given(with_field(lambda f: st.tuples(polys(f), polys(f), polys(f))))
def test_ring_laws(case):
    fd, (p, q, r) = case
    assert p * q == naive_product(p, q)
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    if p.degree >= 0 and q.degree >= 0:
        assert (p * q).degree == p.degree + q.degree
