"""Deterministic pseudo-random points on the classical compact groups.

Points are mat_exp of a random Lie-algebra element with coefficients drawn
uniformly from [-radius, radius].  Streams are counter-based (Philox keyed
by a hash of the stream label and seed, counter = index * 2^64), so sample
``index`` of a given configuration is O(1) to reach, stateless, and
bitwise-reproducible; parallel generation is safe.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .bases import group_basis
from .matrices import mat_exp, membership_residual

__all__ = ["SampleConfig", "GENERATOR_NAME", "rng_for", "random_algebra_element",
           "random_point", "random_subgroup_point", "random_pair_point"]

GENERATOR_NAME = "philox-4x64"


@dataclass(frozen=True)
class SampleConfig:
    seed: int = 0
    count: int = 100
    radius: float = 1.5

    def __post_init__(self):
        if self.seed < 0:
            raise ValueError("seed must be a non-negative integer")
        if self.count < 1:
            raise ValueError("count must be positive")
        if self.radius < 0:
            raise ValueError("radius must be non-negative")


def rng_for(label: str, seed: int, index: int) -> np.random.Generator:
    """The generator for one sample of one stream."""
    key = int.from_bytes(
        hashlib.sha256(f"{label}:{seed}".encode()).digest()[:16], "little"
    )
    return np.random.Generator(np.random.Philox(key=key, counter=index << 64))


def _combo(basis_els: np.ndarray, label: str, cfg: SampleConfig, index: int):
    rng = rng_for(label, cfg.seed, index)
    coeff = rng.uniform(-cfg.radius, cfg.radius, size=basis_els.shape[0])
    return np.einsum("b,bij->ij", coeff, basis_els)


def random_algebra_element(group: str, n: int, cfg: SampleConfig, index: int) -> np.ndarray:
    return _combo(group_basis(group, n).elements, f"{group}:{n}", cfg, index)


def random_point(group: str, n: int, cfg: SampleConfig, index: int) -> np.ndarray:
    """Sample ``index`` of the (group, n, cfg) stream; identical arguments
    give bitwise-identical matrices."""
    q = mat_exp(random_algebra_element(group, n, cfg, index))
    res = membership_residual(group, q)
    if res > 1e-10:
        raise RuntimeError(f"sampled point failed membership: residual {res:.3e}")
    return q


def random_subgroup_point(pair, cfg: SampleConfig, index: int) -> np.ndarray:
    """A point of the fixed-point subgroup K of a SymmetricPair, obtained by
    exponentiating a random element of k."""
    Z = _combo(pair.k_basis, f"{pair.label()}:k", cfg, index)
    return mat_exp(Z)


def random_pair_point(pair, cfg: SampleConfig, index: int) -> np.ndarray:
    """A point of the ambient group G of a SymmetricPair."""
    Z = _combo(pair.ambient.elements, f"{pair.label()}:g", cfg, index)
    return mat_exp(Z)
