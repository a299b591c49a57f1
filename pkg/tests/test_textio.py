import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cycleib import GF, Q, Derivation, Element, Endo, Polynomial
from cycleib.errors import BadIndex, DivisionByZero, ParseError
from cycleib.textio import dumps, from_json, parse_der, parse_element, parse_endo, parse_map, parse_polynomial, to_json

from .conftest import ders, elements, endos, raw_scalars, with_field


class TestParseElement:
    @pytest.mark.parametrize(
        "text, coeffs",
        [
            ("a1", {1: 1}),
            ("2*a1 - 1/2*a4", {1: 2, 4: Fraction(-1, 2)}),
            ("-a3 + a3", {}),
            ("  a2+a2 ", {2: 2}),
            ("0", {}),
        ],
    )
    def test_accepts(self, text, coeffs):
        assert parse_element(text, Q) == Element(Q, {n: Fraction(v) for n, v in coeffs.items()})

    def test_reduces_mod_p(self):
        assert parse_element("6*a1 + 1/2*a2", GF(5)) == Element(GF(5), {1: 1, 2: 3})

    @pytest.mark.parametrize(
        "text, position",
        [("a1 +", 4), ("2 a1", 2), ("a1 a2", 3), ("b1", 0), ("a", 1), ("", 0), ("a1 + 3*", 7)],
    )
    def test_error_positions(self, text, position):
        with pytest.raises(ParseError) as info:
            parse_element(text, Q)
        assert info.value.position == position
        assert f"position {position}" in str(info.value)

    def test_bad_index(self):
        with pytest.raises(BadIndex):
            parse_element("a0", Q)

    def test_zero_denominator(self):
        with pytest.raises(DivisionByZero):
            parse_element("1/0*a1", Q)


class TestParseMaps:
    def test_endo(self):
        assert parse_endo("endo [1, -1/2, 0]", Q) == Endo(Q, [1, Fraction(-1, 2)])
        assert parse_endo("endo []", Q).degree == 0

    def test_der(self):
        assert parse_der("der [0, 1]", GF(5)) == Derivation(GF(5), [0, 1])

    def test_dispatch(self):
        assert isinstance(parse_map("der [1]", Q), Derivation)
        assert isinstance(parse_map("endo [1]", Q), Endo)

    @pytest.mark.parametrize("text", ["endo", "endo [1,", "endo [1] x", "der [1]", "endo (1)"])
    def test_rejects(self, text):
        with pytest.raises(ParseError):
            parse_endo(text, Q)

    def test_polynomial(self):
        assert parse_polynomial("1 + 2*X + X^2", Q) == Polynomial(Q, [1, 2, 1])
        assert parse_polynomial("X^3 - 1/2", Q) == Polynomial(Q, [Fraction(-1, 2), 0, 0, 1])
        assert parse_polynomial("0", Q) == Polynomial(Q, [])
        with pytest.raises(ParseError):
            parse_polynomial("1 + Y", Q)


@given(with_field(elements))
def test_element_round_trip(case):
    fd, x = case
    assert parse_element(str(x), fd) == x
    assert from_json(dumps(x)) == x


@given(with_field(lambda f: st.tuples(endos(f), ders(f))))
def test_map_round_trip(case):
    fd, (f, g) = case
    assert parse_map(str(f), fd) == f and parse_map(str(g), fd) == g
    assert from_json(to_json(f)) == f and from_json(dumps(g)) == g


@given(with_field(lambda f: st.lists(raw_scalars(f), max_size=6)))
def test_polynomial_round_trip(case):
    fd, cs = case
    p = Polynomial(fd, cs)
    assert parse_polynomial(str(p), fd) == p
    assert from_json(dumps(p)) == p


def test_json_shape():
    doc = json.loads(dumps(parse_element("2*a1 - 1/2*a4", Q)))
    assert doc == {"field": "Q", "kind": "element", "coeffs": [[1, "2"], [4, "-1/2"]]}
    assert to_json(Endo(GF(5), [1, 0, 2])) == {"field": "GF5", "kind": "endo", "gamma": [[1, "1"], [3, "2"]]}
    with pytest.raises(ParseError):
        from_json({"field": "Q", "kind": "matrix"})
