"""Tension (Laplace-Beltrami) and conformality operators on a compact group.

With a bi-invariant metric, tau(phi) = sum_Z Z^2(phi) and
kappa(phi, psi) = sum_Z Z(phi) Z(psi) over an orthonormal algebra basis,
where Z^k(phi)(p) = d^k/ds^k phi(p exp(sZ)) at s = 0.  The covariant
correction terms vanish because nabla_Z Z = [Z, Z]/2 = 0 for left-invariant
fields.  All derivatives are exact order-2 jets; kappa is complex bilinear
(no conjugation).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .jets import Jet2, JetMatrix
from .matrices import mat_exp

__all__ = [
    "ScalarField",
    "field_value",
    "direction_derivs",
    "tension",
    "conformality",
    "quotient_ops",
    "image_tension",
    "image_conformality",
    "finite_difference_derivs",
]


@dataclass(frozen=True, eq=False)
class ScalarField:
    """A complex-valued function on a matrix group, given by a jet evaluator.

    ``evaluator`` maps a JetMatrix (the 2-jet of a curve through the group)
    to the Jet2 of the function along that curve; on a constant jet it must
    return a constant jet.
    """

    evaluator: Callable[[JetMatrix], Jet2]
    group: str
    n: int
    k_invariant: bool | None = None

    def __call__(self, jm: JetMatrix) -> Jet2:
        return self.evaluator(jm)


def field_value(field, p: np.ndarray) -> complex:
    """phi(p), via a constant jet."""
    return field.evaluator(JetMatrix.constant(p)).v


def direction_derivs(field, p: np.ndarray, Z: np.ndarray):
    """(Z(phi)(p), Z^2(phi)(p)): first and second derivative of phi along
    the one-parameter subgroup curve p exp(sZ)."""
    j = field.evaluator(JetMatrix.curve(p, Z))
    return j.d1, j.d2


def tension(field, p: np.ndarray, basis) -> complex:
    """tau(phi)(p) = sum over the basis of second directional derivatives."""
    total = 0.0 + 0.0j
    for Z in basis:
        total += field.evaluator(JetMatrix.curve(p, Z)).d2
    return total


def conformality(field, other, p: np.ndarray, basis) -> complex:
    """kappa(phi, psi)(p) = sum over the basis of Z(phi) Z(psi);
    complex bilinear in both slots."""
    total = 0.0 + 0.0j
    for Z in basis:
        jm = JetMatrix.curve(p, Z)
        total += field.evaluator(jm).d1 * other.evaluator(jm).d1
    return total


def quotient_ops(pair, field, p: np.ndarray):
    """(tau over the horizontal basis, tau over the full basis,
    kappa(field, field) over the horizontal basis).

    For a K-invariant function the vertical derivatives vanish, so the two
    tension values agree and equal the quotient-space operator;
    disagreement beyond ~1e-9 flags a function that does not descend to
    G/K.
    """
    horiz = tension(field, p, pair.p_basis)
    full = tension(field, p, pair.ambient)
    kap = conformality(field, field, p, pair.p_basis)
    return horiz, full, kap


def _image_curve(pair, p: np.ndarray, X: np.ndarray) -> JetMatrix:
    # Curve on the image N through Phi(p) with tangent Ad_{sigma(p)} X.
    from .cartan import cartan_map

    y = cartan_map(pair, p)
    s = pair.sigma(p)
    W = s @ X @ s.conj().T
    return JetMatrix.curve(y, W)


def image_tension(pair, eta, p: np.ndarray) -> complex:
    """tau_N(eta) at Phi(p), for eta a function on the ambient group
    restricted to the Cartan image N: second derivatives along the image
    basis {Ad_{sigma(p)} X | X in the p-basis}."""
    total = 0.0 + 0.0j
    for X in pair.p_basis:
        total += eta.evaluator(_image_curve(pair, p, X)).d2
    return total


def image_conformality(pair, eta, zeta, p: np.ndarray) -> complex:
    """kappa_N(eta, zeta) at Phi(p) along the image basis."""
    total = 0.0 + 0.0j
    for X in pair.p_basis:
        jm = _image_curve(pair, p, X)
        total += eta.evaluator(jm).d1 * zeta.evaluator(jm).d1
    return total


def finite_difference_derivs(field, p: np.ndarray, Z: np.ndarray, h: float = 1e-5):
    """Central finite differences of phi(p exp(sZ)) — the step-size-dependent
    cross-check for the exact jet computation."""
    f = lambda s: field.evaluator(JetMatrix.constant(p @ mat_exp(s * Z))).v
    fp, f0, fm = f(h), f(0.0), f(-h)
    return (fp - fm) / (2.0 * h), (fp - 2.0 * f0 + fm) / (h * h)
