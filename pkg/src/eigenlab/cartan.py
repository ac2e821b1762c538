"""Cartan maps Phi(p) = p sigma(p^{-1}) and their structural properties:
K-invariance, harmonicity, and the conformal metric scaling.

The inverse is computed as the conjugate transpose (all supported groups
are unitary in the chosen representations), guarded by a membership check.
"""

from __future__ import annotations

import numpy as np

from .jets import JetMatrix
from .matrices import membership_residual, metric

__all__ = [
    "involution",
    "cartan_map",
    "cartan_map_jet",
    "cartan_map_closed",
    "harmonic_residual",
    "map_tension_raw",
    "pullback_factor",
]


def involution(pair, q: np.ndarray) -> np.ndarray:
    """sigma(q) for the pair's involution."""
    return pair.sigma(q)


def _check_member(pair, p):
    res = membership_residual(pair.group, p)
    if res > 1e-8:
        raise ValueError(f"point is not in {pair.group} (residual {res:.3e})")


def cartan_map(pair, p: np.ndarray) -> np.ndarray:
    """Phi(p) = p sigma(p^{-1}); constant on right K-cosets."""
    _check_member(pair, p)
    return p @ pair.sigma(p.conj().T)


def cartan_map_jet(pair, jm: JetMatrix) -> JetMatrix:
    """The 2-jet of Phi along a curve jet in G.

    Along curves inside the group, the inverse jet is the entrywise
    conjugate transpose jet, so Phi lifts to jets with no extra machinery.
    """
    return jm @ pair.sigma(jm.conj().T)


def cartan_map_closed(pair, p: np.ndarray) -> np.ndarray:
    """Closed-form Phi for each space, as an independent code path.

    su-so: z z^t.  sp-u: q q^t.  so-u and su-sp: x J x^t J^{-1}.
    Grassmannians: q S conj(q)^t S with the defining signature S.
    """
    _check_member(pair, p)
    M = pair.sigma.conjugator
    if M is None:
        return p @ p.T
    if pair.space == "sp-u":
        return p @ p.T
    if pair.space in ("so-u", "su-sp"):
        return p @ M @ p.T @ M.conj().T
    return p @ M @ p.conj().T @ M


def map_tension_raw(pair, p: np.ndarray) -> np.ndarray:
    """sum_Z d^2/ds^2 Phi(p exp(sZ)) over the full ambient basis: the
    ambient (flat matrix-space) Laplacian of the entries of Phi.

    This contains the second-fundamental-form term of the group inside
    matrix space, so it is NOT the tension of the map; see
    harmonic_residual for the tangential part.
    """
    jm = JetMatrix.curve(p, pair.ambient.elements)
    return cartan_map_jet(pair, jm).d2.sum(axis=0)


def harmonic_residual(pair, p: np.ndarray) -> float:
    """Max entry magnitude of the tension of the map Phi: G -> G at p.

    The tension is the projection of the entrywise second-derivative sum
    onto the tangent space of G at Phi(p); harmonicity of Phi makes it
    vanish, while a generic map (e.g. p -> p^2) leaves residuals of order
    one.
    """
    _check_member(pair, p)
    H = map_tension_raw(pair, p)
    y = p @ pair.sigma(p.conj().T)
    M = y.conj().T @ H
    els = pair.ambient.elements
    coeff = np.einsum("ij,bij->b", M, els.conj()).real
    tangential = y @ np.einsum("b,bij->ij", coeff, els)
    return float(np.abs(tangential).max())


def pullback_factor(pair, p: np.ndarray, X: np.ndarray, Y: np.ndarray):
    """g(dPhi(X), dPhi(Y)) / g(X, Y) at p, from first-order jets of Phi.

    Equals 4 for X, Y horizontal (so the differential scales lengths by 2);
    vanishes identically for X vertical.  When g(X, Y) = 0 the numerator is
    returned instead of the undefined ratio.
    """
    _check_member(pair, p)
    dX = cartan_map_jet(pair, JetMatrix.curve(p, X)).d1
    dY = cartan_map_jet(pair, JetMatrix.curve(p, Y)).d1
    num = metric(dX, dY)
    den = metric(X, Y)
    if abs(den) < 1e-12:
        return num
    return num / den
