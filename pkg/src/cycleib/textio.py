"""Text and JSON forms of elements, maps and polynomials.

Element grammar (whitespace-insensitive)::

    element := '0' | ['+'|'-'] term (('+'|'-') term)*
    term    := [scalar '*'] 'a' index
    scalar  := digits ['/' digits]

Maps are written ``endo [g1, ..., gn]`` / ``der [g1, ..., gn]`` and
polynomials ``1 + 2*X + X^2``.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .algebra import Element, element_make
from .derivations import Derivation
from .endomorphisms import Endo
from .errors import BadIndex, DivisionByZero, ParseError
from .polyring import Polynomial
from .scalars import FieldDescriptor, parse_field, parse_scalar

_TOKEN = re.compile(r"\s*(?:(\d+)|([+\-*/^\[\],])|([A-Za-z]+))")


def _tokens(text):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}", text, pos)
        start = m.start(m.lastindex)
        out.append((m.group(m.lastindex), start))
        pos = m.end()
    out.append(("", len(text)))
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokens(text)
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i][0]

    @property
    def pos(self):
        return self.toks[self.i][1]

    def fail(self, msg):
        raise ParseError(msg, self.text, self.pos)

    def take(self, expected=None):
        t = self.tok
        if expected is not None and t != expected:
            self.fail(f"expected {expected!r}, found {t or 'end of input'!r}")
        self.i += 1
        return t

    def at_end(self):
        return self.tok == ""

    def number(self):
        if not self.tok.isdigit():
            self.fail(f"expected a number, found {self.tok or 'end of input'!r}")
        num = int(self.take())
        if self.tok == "/":
            self.take()
            if not self.tok.isdigit():
                self.fail("expected a denominator")
            pos = self.pos
            den = int(self.take())
            if den == 0:
                raise DivisionByZero(f"zero denominator at position {pos}")
            return Fraction(num, den)
        return Fraction(num)

    def signed_number(self):
        sign = 1
        while self.tok in "+-" and self.tok:
            if self.take() == "-":
                sign = -sign
        return sign * self.number()


def parse_element(text: str, fd: FieldDescriptor) -> Element:
    p = _Parser(text)
    if p.at_end():
        p.fail("empty element")
    pairs = []
    first = True
    while True:
        sign = 1
        if p.tok in ("+", "-"):
            sign = -1 if p.take() == "-" else 1
        elif not first:
            p.fail(f"expected '+' or '-', found {p.tok!r}")
        first = False
        coeff = Fraction(1)
        if p.tok.isdigit():
            coeff = p.number()
            if p.tok != "*":
                if coeff == 0 and not pairs and p.at_end():
                    return Element.zero(fd)
                p.fail("expected '*' after coefficient")
            p.take("*")
        if p.tok != "a":
            p.fail(f"expected a basis symbol a<n>, found {p.tok or 'end of input'!r}")
        p.take()
        if not p.tok.isdigit():
            p.fail("expected a basis index after 'a'")
        idx_pos = p.pos
        n = int(p.take())
        if n < 1:
            raise BadIndex(f"basis index must be >= 1 at position {idx_pos}")
        pairs.append((n, fd.coerce(sign * coeff)))
        if p.at_end():
            break
    return element_make(fd, pairs)


def _parse_gamma_list(text: str, keyword: str, fd: FieldDescriptor):
    p = _Parser(text)
    if p.tok != keyword:
        p.fail(f"expected '{keyword} [...]'")
    p.take()
    p.take("[")
    vals = []
    if p.tok != "]":
        while True:
            vals.append(fd.coerce(p.signed_number()))
            if p.tok == ",":
                p.take()
                continue
            break
    p.take("]")
    if not p.at_end():
        p.fail("trailing input")
    return vals


def parse_endo(text: str, fd: FieldDescriptor) -> Endo:
    return Endo(fd, _parse_gamma_list(text, "endo", fd))


def parse_der(text: str, fd: FieldDescriptor) -> Derivation:
    return Derivation(fd, _parse_gamma_list(text, "der", fd))


def parse_map(text: str, fd: FieldDescriptor):
    """``endo [...]`` or ``der [...]``."""
    head = text.strip().split("[", 1)[0].strip()
    if head == "der":
        return parse_der(text, fd)
    return parse_endo(text, fd)


def parse_polynomial(text: str, fd: FieldDescriptor) -> Polynomial:
    p = _Parser(text)
    coeffs = {}
    first = True
    while not p.at_end() or first:
        sign = 1
        if p.tok in ("+", "-"):
            sign = -1 if p.take() == "-" else 1
        elif not first:
            p.fail(f"expected '+' or '-', found {p.tok!r}")
        first = False
        c = Fraction(1)
        has_coeff = False
        if p.tok.isdigit():
            c = p.number()
            has_coeff = True
            if p.tok == "*":
                p.take()
                if p.tok != "X":
                    p.fail("expected X after '*'")
        deg = 0
        if p.tok == "X":
            p.take()
            deg = 1
            if p.tok == "^":
                p.take()
                if not p.tok.isdigit():
                    p.fail("expected an exponent")
                deg = int(p.take())
        elif not has_coeff:
            p.fail(f"expected a term, found {p.tok or 'end of input'!r}")
        coeffs[deg] = coeffs.get(deg, Fraction(0)) + sign * c
    n = max(coeffs, default=-1) + 1
    return Polynomial(fd, [coeffs.get(k, 0) for k in range(n)])


# -- JSON -------------------------------------------------------------------


def _pairs(items, fd):
    return [[n, fd.format(v)] for n, v in items]


def to_json(value) -> dict:
    if isinstance(value, Element):
        return {"field": value.field.name, "kind": "element", "coeffs": _pairs(value.items(), value.field)}
    if isinstance(value, (Endo, Derivation)):
        kind = "endo" if isinstance(value, Endo) else "der"
        items = [(k, v) for k, v in enumerate(value.gamma, start=1) if v]
        return {"field": value.field.name, "kind": kind, "gamma": _pairs(items, value.field)}
    if isinstance(value, Polynomial):
        items = [(k, v) for k, v in enumerate(value.coeffs) if v]
        return {"field": value.field.name, "kind": "polynomial", "coeffs": _pairs(items, value.field)}
    raise TypeError(f"no JSON form for {type(value).__name__}")


def from_json(doc) -> object:
    if isinstance(doc, str):
        doc = json.loads(doc)
    fd = parse_field(doc["field"])
    kind = doc["kind"]
    if kind == "element":
        return element_make(fd, [(int(n), parse_scalar(fd, s)) for n, s in doc["coeffs"]])
    if kind in ("endo", "der"):
        pairs = {int(n): parse_scalar(fd, s).value for n, s in doc["gamma"]}
        vec = [pairs.get(k, fd.zero) for k in range(1, max(pairs, default=0) + 1)]
        return Endo(fd, vec) if kind == "endo" else Derivation(fd, vec)
    if kind == "polynomial":
        pairs = {int(n): parse_scalar(fd, s).value for n, s in doc["coeffs"]}
        return Polynomial(fd, [pairs.get(k, fd.zero) for k in range(max(pairs, default=-1) + 1)])
    raise ParseError(f"unknown kind {kind!r}")


def dumps(value) -> str:
    return json.dumps(to_json(value), sort_keys=True)
