"""The endomorphism monoid of L.

An endomorphism is fixed by f(a_1) = sum_k gamma_k a_k, and then

    f(a_s) = sum_k gamma_1^(s-1) gamma_k a_(k+s-1).

Maps with gamma_1 = 0 form an ideal S with zero multiplication; the rest
are monomorphisms, each the product u o d of a unipotent map (gamma_1 = 1)
and a diagonal map d = [gamma_1].
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .algebra import Element, _same_field
from .errors import BadConstantTerm, MixedFields, NotInvertible, NotMonomorphism, NotUnipotent, ZeroDiagonal
from .gammamap import GammaMap
from .polyring import Polynomial
from .scalars import FieldDescriptor, Scalar


class Endo(GammaMap):
    __slots__ = ()
    keyword = "endo"

    def __call__(self, x: Element) -> Element:
        return endo_apply(self, x)


class EndoClass(enum.Enum):
    ZeroSquareIdeal = "ZeroSquareIdeal"
    MonomorphismProper = "MonomorphismProper"
    Automorphism = "Automorphism"


@dataclass(frozen=True)
class MonFactorization:
    unipotent: Endo
    diagonal: Scalar

    def recompose(self) -> Endo:
        return endo_compose(self.unipotent, endo_from_gamma(self.diagonal.field, [self.diagonal]))


def endo_from_gamma(fd: FieldDescriptor, gammas) -> Endo:
    return Endo(fd, gammas)


def endo_identity(fd: FieldDescriptor) -> Endo:
    return Endo(fd, [fd.one])


def endo_apply(f: Endo, x: Element) -> Element:
    """f(x); the result reaches at most index max_support(x) + deg(f) - 1."""
    fd = _same_field(f, x)
    g1 = f.g(1)
    out = {}
    for s, lam in x.items():
        c = fd.mul(lam, fd.power(g1, s - 1))
        if not c:
            continue
        for k, gk in enumerate(f.gamma, start=1):
            if gk:
                n = k + s - 1
                out[n] = fd.add(out.get(n, fd.zero), fd.mul(c, gk))
    return Element(fd, out)


def endo_compose(f: Endo, g: Endo) -> Endo:
    """f o g, read off from f(g(a_1))."""
    if f.field != g.field:
        raise MixedFields(f"{f.field} vs {g.field}")
    img = endo_apply(f, g.image_of_a1())
    return Endo(f.field, img.vector(img.max_support()))


def endo_classify(f: Endo) -> EndoClass:
    if not f.g(1):
        return EndoClass.ZeroSquareIdeal
    if f.degree == 1:
        return EndoClass.Automorphism
    return EndoClass.MonomorphismProper


def endo_inverse(f: Endo) -> Endo:
    kind = endo_classify(f)
    if kind is not EndoClass.Automorphism:
        raise NotInvertible(f"{f} is {kind.value}, not an automorphism")
    return Endo(f.field, [f.field.inv(f.g(1))])


def endo_factorize(f: Endo) -> MonFactorization:
    """f = u o [gamma_1] with u unipotent; unique because A meets D only in 1."""
    fd = f.field
    g1 = f.g(1)
    if not g1:
        raise NotMonomorphism(f"{f} has gamma_1 = 0")
    inv = fd.inv(g1)
    u = Endo(fd, [fd.one] + [fd.mul(inv, v) for v in f.gamma[1:]])
    return MonFactorization(u, Scalar(fd, g1))


def _require_unipotent(u: Endo):
    if u.g(1) != 1:
        raise NotUnipotent(f"{u} has gamma_1 = {u.field.format(u.g(1))}, expected 1")


def endo_phi(u: Endo) -> Polynomial:
    """Unipotent map -> polynomial with gamma_k as the coefficient of X^(k-1)."""
    _require_unipotent(u)
    return Polynomial(u.field, u.gamma)


def endo_phi_inverse(p: Polynomial) -> Endo:
    if not p.coeffs or p.coeffs[0] != 1:
        raise BadConstantTerm(f"{p} does not have constant term 1")
    return Endo(p.field, p.coeffs)


def endo_conjugate_diag(u: Endo, mu) -> Endo:
    """d^-1 o u o d for d = [mu]: gamma_k -> mu^(1-k) gamma_k."""
    _require_unipotent(u)
    fd = u.field
    m = fd.coerce(mu)
    if not m:
        raise ZeroDiagonal("conjugation needs mu != 0")
    minv = fd.inv(m)
    return Endo(fd, [fd.mul(fd.power(minv, k - 1), v) for k, v in enumerate(u.gamma, start=1)])
