"""Sphere and complex-projective eigenfamilies via ambient operators.

Functions on the unit sphere are represented by their degree-0 homogeneous
extensions to R^{2n} \\ {0} (written in complex coordinates C^n).  For such
an extension the radial first and second derivatives vanish, so the ambient
Euclidean Laplacian and gradient pairing at |x| = 1 restrict to the
intrinsic sphere operators.  Projective space is handled through the Hopf
lift: an S^1-invariant function on the sphere descends through the
Riemannian submersion with totally geodesic fibers, and the fiber-direction
contribution (which vanishes for invariant functions) is subtracted
literally.

This route is independent of the Lie-group machinery and serves as its
external cross-check.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .jets import Jet2

__all__ = [
    "AmbientField",
    "sphere_phi",
    "cpn_phi",
    "rotate_field",
    "random_sphere_point",
    "check_homogeneous",
    "check_circle_invariant",
    "sphere_ops",
    "cpn_ops",
]


@dataclass(frozen=True, eq=False)
class AmbientField:
    """A complex function of n complex coordinates, as a jet evaluator.

    ``evaluator`` maps a tuple of n Jet2 entries (the coordinates along a
    curve) to the Jet2 of the function; the function must be homogeneous
    of degree 0.
    """

    evaluator: Callable
    n: int

    def value(self, z) -> complex:
        return self.evaluator(tuple(Jet2.constant(zk) for zk in z)).v


def sphere_phi(n: int, j: int) -> AmbientField:
    """phi_j(z) = z_j / sqrt(|z_1|^2 + ... + |z_n|^2) on S^{2n-1};
    (lambda, mu) = (-(2n-1), -1).  1-based j."""
    if not 1 <= j <= n:
        raise ValueError(f"j must lie in 1..{n}")

    def ev(zs):
        r2 = None
        for zk in zs:
            t = zk * zk.conj()
            r2 = t if r2 is None else r2 + t
        return zs[j - 1] / r2.sqrt()

    return AmbientField(ev, n)


def cpn_phi(n: int, j: int, k: int) -> AmbientField:
    """phi_{jk}(z) = z_j conj(z_k) / (|z_1|^2 + ... + |z_{n+1}|^2) on
    C^{n+1}, the S^1-invariant lift of an eigenfunction on CP^n;
    (lambda, mu) = (-4(n+1), -4).  1-based j, k."""
    if not (1 <= j <= n + 1 and 1 <= k <= n + 1):
        raise ValueError(f"j, k must lie in 1..{n + 1}")

    def ev(zs):
        r2 = None
        for zk_ in zs:
            t = zk_ * zk_.conj()
            r2 = t if r2 is None else r2 + t
        return zs[j - 1] * zs[k - 1].conj() / r2

    return AmbientField(ev, n + 1)


def rotate_field(f: AmbientField, U: np.ndarray) -> AmbientField:
    """g(z) = f(U^H z), so that g(U x) = f(x): the pullback of f under the
    ambient unitary rotation."""
    Uh = np.asarray(U, dtype=complex).conj().T

    def ev(zs):
        ws = []
        for row in Uh:
            acc = None
            for coef, zk in zip(row, zs):
                term = coef * zk
                acc = term if acc is None else acc + term
            ws.append(acc)
        return f.evaluator(tuple(ws))

    return AmbientField(ev, f.n)


def random_sphere_point(n: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return z / np.linalg.norm(z)


def check_homogeneous(f: AmbientField, z, tol: float = 1e-12) -> None:
    """Reject extensions that are not homogeneous of degree 0:
    f(c z) must equal f(z) for c > 0."""
    v = f.value(z)
    scale = max(1.0, abs(v))
    for c in (0.37, 1.0 + np.pi / 7.0, 2.83):
        if abs(f.value(tuple(c * zk for zk in z)) - v) > tol * scale:
            raise ValueError("field is not homogeneous of degree 0")


def check_circle_invariant(f: AmbientField, z, tol: float = 1e-12) -> None:
    """Reject functions that do not descend through the Hopf fibration:
    f(e^{i theta} z) must equal f(z)."""
    v = f.value(z)
    scale = max(1.0, abs(v))
    for theta in (0.7, 2.0, 5.1):
        w = np.exp(1j * theta)
        if abs(f.value(tuple(w * zk for zk in z)) - v) > tol * scale:
            raise ValueError("field is not S^1-invariant; it does not "
                             "descend to projective space")


def _on_sphere(x) -> np.ndarray:
    x = np.asarray(x, dtype=complex)
    r = np.linalg.norm(x)
    if abs(r - 1.0) <= 1e-12:
        return x
    if abs(r - 1.0) <= 1e-6:
        warnings.warn(f"input off the unit sphere by {abs(r - 1.0):.2e}; "
                      "normalizing", stacklevel=3)
        return x / r
    raise ValueError(f"point is off the unit sphere: |x| = {r!r}")


def _axis_jets(x, n):
    """2-jets of the straight-line curves x + s e along all 2n real
    coordinate axes of C^n = R^{2n}."""
    for k in range(n):
        for unit in (1.0, 1.0j):
            yield tuple(Jet2(x[i], unit if i == k else 0.0, 0.0)
                        for i in range(n))


def sphere_ops(f: AmbientField, x, other: AmbientField | None = None):
    """(tau f, kappa(f, g)) on the unit sphere at x, via the ambient
    Euclidean second derivatives of the degree-0 extensions summed over the
    2n coordinate axes.  ``other`` defaults to f."""
    x = _on_sphere(x)
    g = f if other is None else other
    check_homogeneous(f, x)
    if g is not f:
        check_homogeneous(g, x)
    tau = 0.0 + 0.0j
    kap = 0.0 + 0.0j
    for zs in _axis_jets(x, f.n):
        jf = f.evaluator(zs)
        jg = jf if g is f else g.evaluator(zs)
        tau += jf.d2
        kap += jf.d1 * jg.d1
    return tau, kap


def _fiber_jet(x, n):
    # 2-jet of the fiber circle s -> e^{is} x.
    return tuple(Jet2(x[i], 1j * x[i], -x[i]) for i in range(n))


def cpn_ops(f: AmbientField, x, other: AmbientField | None = None):
    """(tau f, kappa(f, g)) on CP^n at the class of x, via the sphere
    operators of the Hopf lift minus the fiber-direction contribution."""
    x = _on_sphere(x)
    g = f if other is None else other
    check_circle_invariant(f, x)
    if g is not f:
        check_circle_invariant(g, x)
    tau, kap = sphere_ops(f, x, other)
    zs = _fiber_jet(x, f.n)
    jf = f.evaluator(zs)
    jg = jf if g is f else g.evaluator(zs)
    return tau - jf.d2, kap - jf.d1 * jg.d1
