"""Derived eigenfamilies: homogeneous polynomial families and
product-manifold families.

If every member of a family F satisfies tau(phi) = lambda phi and
kappa(phi, psi) = mu phi psi, then any homogeneous degree-d polynomial P in
the members satisfies tau(P) = (d lambda + d(d-1) mu) P and
kappa(P, Q) = d^2 mu P Q.  On a product M1 x M2, the functions
phi1(p1) phi2(p2) form a family with eigenvalues (lambda1 + lambda2,
mu1 + mu2) for the concatenated (disjoint-union) basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, islice
from typing import Callable

import numpy as np

from .jets import Jet2, JetMatrix
from .operators import ScalarField, conformality, field_value, tension

__all__ = [
    "EigenFamily",
    "PolyMember",
    "ProductMember",
    "ConstantMember",
    "base_family",
    "constant_family",
    "polynomial_family",
    "product_family",
    "product_tension",
    "product_conformality",
]

MONOMIAL_CAP = 200


@dataclass(frozen=True, eq=False)
class EigenFamily:
    """Member functions sharing one (lambda, mu) on one space."""

    space: str
    members: tuple
    lam: complex
    mu: complex
    provenance: str = "base"

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def base_family(members, provenance: str = "base") -> EigenFamily:
    members = tuple(members)
    if not members:
        raise ValueError("a family needs at least one member")
    space, lam, mu = members[0].space, members[0].lam, members[0].mu
    for m in members[1:]:
        if m.space != space or m.lam != lam or m.mu != mu:
            raise ValueError("family members must share space and (lambda, mu)")
    return EigenFamily(space, members, lam, mu, provenance)


@dataclass(frozen=True, eq=False)
class ConstantMember:
    """The constant function 1, a (0, 0)-eigenfunction on any space."""

    pair: object
    space: str = "constant"
    name: str = "1"
    lam: complex = 0.0
    mu: complex = 0.0

    def value(self, q) -> complex:
        return 1.0 + 0.0j

    def as_field(self) -> ScalarField:
        return ScalarField(lambda jm: Jet2.constant(1.0),
                           self.pair.group, self.pair.ambient.n,
                           k_invariant=True)


def constant_family(pair) -> EigenFamily:
    return base_family([ConstantMember(pair)])


# ---------------------------------------------------------------------------
# polynomial families

def _monomial_generator(powers) -> Callable:
    def g(vals):
        out = None
        for v, e in zip(vals, powers):
            if e:
                term = v ** e
                out = term if out is None else out * term
        return out

    return g


def _monomial_name(members, powers) -> str:
    parts = []
    for m, e in zip(members, powers):
        if e == 1:
            parts.append(m.name)
        elif e > 1:
            parts.append(f"{m.name}^{e}")
    return "*".join(parts)


def _check_homogeneous(g, nvars: int, d: int, rng: np.random.Generator):
    # P(alpha v) = alpha^d P(v) at random arguments; anything else is not a
    # degree-d homogeneous polynomial in the members.
    for _ in range(3):
        vals = tuple(complex(x, y) for x, y in
                     rng.standard_normal((nvars, 2)))
        alpha = complex(*rng.standard_normal(2))
        lhs = g(tuple(alpha * v for v in vals))
        rhs = alpha ** d * g(vals)
        if abs(lhs - rhs) > 1e-9 * max(1.0, abs(rhs)):
            raise ValueError("generator is not homogeneous of degree "
                             f"{d}: P(a v) != a^{d} P(v)")


@dataclass(frozen=True, eq=False)
class PolyMember:
    """A homogeneous polynomial in the members of a base family."""

    name: str
    space: str
    base: tuple = field(repr=False)
    generator: Callable = field(repr=False)
    degree: int = 1
    lam: complex = 0.0
    mu: complex = 0.0

    @property
    def pair(self):
        return self.base[0].pair

    def value(self, q) -> complex:
        return self.generator(tuple(m.value(q) for m in self.base))

    def as_field(self) -> ScalarField:
        fields = tuple(m.as_field() for m in self.base)
        g = self.generator

        def ev(jm: JetMatrix) -> Jet2:
            return g(tuple(f.evaluator(jm) for f in fields))

        f0 = fields[0]
        return ScalarField(ev, f0.group, f0.n, k_invariant=True)


def polynomial_family(F: EigenFamily, d: int, generators=None) -> EigenFamily:
    """The degree-d polynomial family over F.

    ``generators`` is an optional list of (name, callable) pairs, each
    callable mapping the tuple of member values to the polynomial value
    (it must also accept jets, i.e. use only +, -, *, **).  By default all
    degree-d monomials are enumerated, capped at MONOMIAL_CAP.  Every
    generator is probed for homogeneity and rejected if P(a v) != a^d P(v).
    """
    if not isinstance(d, int) or d < 1:
        raise ValueError("d must be a positive integer")
    k = len(F.members)
    rng = np.random.default_rng(11)
    if generators is None:
        combos = combinations_with_replacement(range(k), d)
        generators = []
        for combo in islice(combos, MONOMIAL_CAP):
            powers = [0] * k
            for i in combo:
                powers[i] += 1
            generators.append((_monomial_name(F.members, powers),
                               _monomial_generator(powers)))
    lam = d * F.lam + d * (d - 1) * F.mu
    mu = d * d * F.mu
    members = []
    for name, g in generators:
        _check_homogeneous(g, k, d, rng)
        members.append(PolyMember(name=name, space=F.space, base=F.members,
                                  generator=g, degree=d, lam=lam, mu=mu))
    return EigenFamily(F.space, tuple(members), lam, mu,
                       provenance=f"polynomial({d})")


# ---------------------------------------------------------------------------
# product families

@dataclass(frozen=True, eq=False)
class ProductMember:
    """phi(p1, p2) = phi1(p1) phi2(p2) on the product of two spaces."""

    f1: object
    f2: object
    name: str
    space: str
    lam: complex
    mu: complex

    def value(self, pq) -> complex:
        p1, p2 = pq
        return self.f1.value(p1) * self.f2.value(p2)


def product_family(F1: EigenFamily, F2: EigenFamily) -> EigenFamily:
    lam = F1.lam + F2.lam
    mu = F1.mu + F2.mu
    space = f"{F1.space} x {F2.space}"
    members = tuple(
        ProductMember(a, b, name=f"{a.name}(x){b.name}", space=space,
                      lam=lam, mu=mu)
        for a in F1.members for b in F2.members)
    return EigenFamily(space, members, lam, mu, provenance="product")


def product_tension(member: ProductMember, p1, p2, basis1, basis2):
    """tau on the product: second derivatives of the full product function
    along every direction of the concatenated basis.  Also returns the
    decomposed value tau1(phi1) phi2 + phi1 tau2(phi2) for the identity
    check."""
    f1 = member.f1.as_field()
    f2 = member.f2.as_field()
    v1 = field_value(f1, p1)
    v2 = field_value(f2, p2)
    direct = 0.0 + 0.0j
    for Z in basis1:
        jet = f1.evaluator(JetMatrix.curve(p1, Z)) * Jet2.constant(v2)
        direct += jet.d2
    for Z in basis2:
        jet = Jet2.constant(v1) * f2.evaluator(JetMatrix.curve(p2, Z))
        direct += jet.d2
    decomposed = tension(f1, p1, basis1) * v2 + v1 * tension(f2, p2, basis2)
    return direct, decomposed


def product_conformality(ma: ProductMember, mb: ProductMember, p1, p2,
                         basis1, basis2):
    """kappa(phi, psi) on the product over the concatenated basis, plus the
    decomposed value kappa1 psi2 phi2 + kappa2 phi1 psi1."""
    a1, a2 = ma.f1.as_field(), ma.f2.as_field()
    b1, b2 = mb.f1.as_field(), mb.f2.as_field()
    va1, va2 = field_value(a1, p1), field_value(a2, p2)
    vb1, vb2 = field_value(b1, p1), field_value(b2, p2)
    direct = 0.0 + 0.0j
    for Z in basis1:
        jm = JetMatrix.curve(p1, Z)
        direct += (a1.evaluator(jm).d1 * va2) * (b1.evaluator(jm).d1 * vb2)
    for Z in basis2:
        jm = JetMatrix.curve(p2, Z)
        direct += (va1 * a2.evaluator(jm).d1) * (vb1 * b2.evaluator(jm).d1)
    decomposed = (conformality(a1, b1, p1, basis1) * va2 * vb2
                  + va1 * vb1 * conformality(a2, b2, p2, basis2))
    return direct, decomposed
