"""The derivation algebra Der(L).

A derivation is fixed by f(a_1) = sum_k gamma_k a_k:

    f(a_s) = s gamma_1 a_s + sum_{k>=2} gamma_k a_(k+s-1).

Der(L) splits as the abelian ideal A (gamma_1 = 0) plus the abelian
subalgebra D of maps [gamma].
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Element, _same_field
from .errors import MixedFields, NotInIdeal, UnsolvableInCharP, ZeroDiagonal
from .gammamap import GammaMap
from .scalars import FieldDescriptor, Scalar


class Derivation(GammaMap):
    __slots__ = ()
    keyword = "der"

    def __call__(self, x: Element) -> Element:
        return der_apply(self, x)


@dataclass(frozen=True)
class DerDecomposition:
    ideal_part: Derivation
    diagonal_part: Scalar

    def recompose(self) -> Derivation:
        fd = self.ideal_part.field
        diag = Derivation(fd, [self.diagonal_part])
        return der_linear_combine(fd.one, self.ideal_part, fd.one, diag)


def der_from_gamma(fd: FieldDescriptor, gammas) -> Derivation:
    return Derivation(fd, gammas)


def der_apply(f: Derivation, x: Element) -> Element:
    fd = _same_field(f, x)
    g1 = f.g(1)
    out = {}
    for s, lam in x.items():
        if g1:
            out[s] = fd.add(out.get(s, fd.zero), fd.mul(lam, fd.mul(fd.from_int(s), g1)))
        for k in range(2, f.degree + 1):
            gk = f.gamma[k - 1]
            if gk:
                n = k + s - 1
                out[n] = fd.add(out.get(n, fd.zero), fd.mul(lam, gk))
    return Element(fd, out)


def der_linear_combine(alpha, f: Derivation, beta, g: Derivation) -> Derivation:
    """alpha f + beta g."""
    if f.field != g.field:
        raise MixedFields(f"{f.field} vs {g.field}")
    fd = f.field
    a, b = fd.coerce(alpha), fd.coerce(beta)
    n = max(f.degree, g.degree)
    return Derivation(fd, [fd.add(fd.mul(a, f.g(k)), fd.mul(b, g.g(k))) for k in range(1, n + 1)])


def der_bracket(f: Derivation, g: Derivation) -> Derivation:
    """[f, g] = f o g - g o f, read off from its value on a_1."""
    if f.field != g.field:
        raise MixedFields(f"{f.field} vs {g.field}")
    img = der_apply(f, g.image_of_a1()) - der_apply(g, f.image_of_a1())
    return Derivation(f.field, img.vector(img.max_support()))


def der_decompose(f: Derivation) -> DerDecomposition:
    fd = f.field
    return DerDecomposition(Derivation(fd, [fd.zero] + list(f.gamma[1:])), Scalar(fd, f.g(1)))


def der_solve_commutator(mu, target: Derivation) -> Derivation:
    """theta in A with [[mu], theta] = target, i.e. theta_k = target_k / ((k-1) mu).

    Always solvable in characteristic 0.  In characteristic p the
    coordinates with k - 1 divisible by p are obstructed whenever the
    target is nonzero there.
    """
    fd = target.field
    m = fd.coerce(mu)
    if not m:
        raise ZeroDiagonal("[d, theta] needs d = [mu] with mu != 0")
    if target.g(1):
        raise NotInIdeal(f"target {target} is not in the ideal (gamma_1 != 0)")
    blocked = []
    theta = [fd.zero]
    for k in range(2, target.degree + 1):
        tk = target.g(k)
        weight = fd.mul(fd.from_int(k - 1), m)
        if not weight:
            if tk:
                blocked.append(k)
            theta.append(fd.zero)
        else:
            theta.append(fd.div(tk, weight))
    if blocked:
        raise UnsolvableInCharP(fd.char, blocked)
    return Derivation(fd, theta)
