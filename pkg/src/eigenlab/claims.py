"""Claim registry and verification engine.

Every identity the library asserts has a stable claim id (for example
"table1.row10.lambda[m=1,n=1]" or "cartan.harmonic[space=su-so,n=2]") so
that reports diff meaningfully between runs.  The engine samples
deterministic pseudo-random points, evaluates the exact jet-based
operators, and scores each claim by the relative residual
|x - ref| / max(1, |ref|) together with a least-squares fit of the
eigenvalue (the ratio tau(phi)/phi fitted over samples with |phi| >= 1e-3).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import ambient as ambient_mod
from . import catalog
from .cartan import cartan_map_jet
from .families import base_family, polynomial_family, product_family
from .jets import Jet2, JetMatrix
from .matrices import basis_D, basis_X, basis_Y
from .pairs import SPACES, make_pair, space_label
from .sampling import (SampleConfig, random_pair_point,
                       random_subgroup_point, rng_for)

__all__ = [
    "ConfigError",
    "RunConfig",
    "ClaimResult",
    "Job",
    "SELECTORS",
    "DEFAULT_SIZES",
    "ROW_BY_SPACE",
    "validate_config",
    "jobs_for",
    "run_claims",
]

CHUNK = 32

PAIR_SPACE_ORDER = ("su-so", "sp-u", "so-u", "su-sp",
                    "so-grassmannian", "u-grassmannian", "sp-grassmannian")

SELECTORS = ("basis",) + PAIR_SPACE_ORDER + ("polynomial", "product",
                                             "sphere", "cpn")

ROW_BY_SPACE = {"su-so": 4, "sp-u": 5, "so-u": 6, "su-sp": 7,
                "so-grassmannian": 8, "u-grassmannian": 9,
                "sp-grassmannian": 10}

DEFAULT_SIZES = {
    "su-so": ((None, 2), (None, 3)),
    "sp-u": ((None, 1), (None, 2)),
    "so-u": ((None, 2), (None, 3)),
    "su-sp": ((None, 2),),
    "so-grassmannian": ((1, 1), (1, 2), (2, 2)),
    "u-grassmannian": ((1, 1), (1, 2), (2, 2)),
    "sp-grassmannian": ((1, 1), (1, 2), (2, 2)),
}

POLY_SPACES = (("sp-grassmannian", 1, 1), ("u-grassmannian", 1, 1))
POLY_DEGREES = (2, 3)
SPHERE_NS = (2, 3)
CPN_NS = (1, 2)
FORMATS = ("json-lines", "tsv", "human-table")


class ConfigError(ValueError):
    """A configuration problem (reported with its own exit status)."""


@dataclass(frozen=True)
class RunConfig:
    """What to verify and how: spaces, sizes, samples, tolerance, seed,
    output destination and format.  ``tol`` = None keeps each claim's own
    stated tolerance (1e-8 for the generic eigenvalue claims)."""

    spaces: tuple = ("all",)
    m: int | None = None
    n: int | None = None
    samples: int = 100
    tol: float | None = None
    seed: int = 0
    out: str | None = None
    fmt: str = "human-table"


def validate_config(config: RunConfig) -> RunConfig:
    for s in config.spaces:
        if s != "all" and s not in SELECTORS:
            raise ConfigError(f"unknown space {s!r}; choose from "
                              f"{('all',) + SELECTORS}")
    if not config.spaces:
        raise ConfigError("empty space selection")
    if config.samples < 1:
        raise ConfigError("samples must be a positive integer")
    if config.tol is not None and not config.tol > 0:
        raise ConfigError("tolerance must be positive")
    if config.seed < 0:
        raise ConfigError("seed must be non-negative")
    if config.fmt not in FORMATS:
        raise ConfigError(f"unknown format {config.fmt!r}; choose from {FORMATS}")
    if config.m is None and config.n is None:
        return config
    # Size overrides bind to a single explicitly selected suite.
    if len(config.spaces) != 1 or config.spaces[0] == "all":
        raise ConfigError("--m/--n require a single --space selection")
    target = config.spaces[0]
    if target in ("basis", "polynomial", "product"):
        raise ConfigError(f"sizes are fixed for the {target!r} suite")
    for name, v in (("m", config.m), ("n", config.n)):
        if v is not None and not 1 <= v <= 3:
            raise ConfigError(f"{name} must lie in 1..3")
    if target in SPACES and SPACES[target]["params"] == ("m", "n"):
        if config.m is None or config.n is None:
            raise ConfigError(f"space {target!r} needs both --m and --n")
    else:
        if config.m is not None:
            raise ConfigError(f"space {target!r} takes --n only")
        if config.n is None:
            raise ConfigError(f"space {target!r} needs --n")
        if target in SPACES and config.n < SPACES[target]["min_size"]["n"]:
            raise ConfigError(
                f"space {target!r} requires n >= {SPACES[target]['min_size']['n']}")
    return config


@dataclass(frozen=True)
class ClaimResult:
    """One verified claim: its residual statistics and eigenvalue fit."""

    claim_id: str
    space: str
    params: dict
    samples: int
    max_residual: float
    mean_residual: float
    expected: float | None
    measured: complex | None
    tol: float
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class Job:
    """A unit of verification work producing one or more claim results."""

    claim_ids: tuple
    space: str
    run: Callable = field(repr=False)


# ---------------------------------------------------------------------------
# engine primitives

def _rel(x, ref):
    return np.abs(np.asarray(x) - ref) / np.maximum(1.0, np.abs(ref))


def _fit(num, den, floor: float = 1e-3):
    """Least-squares ratio num/den over entries with |den| >= floor."""
    num = np.asarray(num).ravel()
    den = np.asarray(den).ravel()
    mask = np.abs(den) >= floor
    if not mask.any():
        return None
    d = den[mask]
    return complex((num[mask] * d.conj()).sum() / (np.abs(d) ** 2).sum())


def _result(claim_id, space, params, samples, residuals, expected, measured,
            tol, detail=""):
    res = np.asarray(residuals, dtype=float).ravel()
    mx = float(res.max()) if res.size else 0.0
    mean = float(res.mean()) if res.size else 0.0
    return ClaimResult(
        claim_id=claim_id, space=space, params=dict(params), samples=samples,
        max_residual=mx, mean_residual=mean,
        expected=None if expected is None else float(expected),
        measured=None if measured is None else complex(measured),
        tol=float(tol), passed=bool(mx <= tol), detail=detail)


def _suffix(params: dict) -> str:
    inner = ",".join(f"{k}={v}" for k, v in params.items())
    return f"[{inner}]" if inner else ""


def _tol(config: RunConfig, default: float) -> float:
    return default if config.tol is None else config.tol


class _Cache:
    """Per-run cache of pairs and point samples, keyed by (space, m, n)."""

    def __init__(self, config: RunConfig):
        self.config = config
        self.scfg = SampleConfig(seed=config.seed, count=config.samples)
        self._pairs = {}
        self._points = {}

    def pair(self, space, m, n):
        key = (space, m, n)
        if key not in self._pairs:
            self._pairs[key] = (make_pair(space, n=n) if m is None
                                else make_pair(space, m=m, n=n))
        return self._pairs[key]

    def points(self, space, m, n):
        key = (space, m, n)
        if key not in self._points:
            pair = self.pair(space, m, n)
            self._points[key] = np.stack([
                random_pair_point(pair, self.scfg, i)
                for i in range(self.config.samples)])
        return self._points[key]

    def family(self, space, m, n, alpha=1):
        pair = self.pair(space, m, n)
        rng = rng_for(f"{pair.label()}:param", self.config.seed, 0)
        return catalog.family_for_space(space, m=m, n=n, alpha=alpha,
                                        rng=rng, pair=pair)


def _phi_batch(pair, pts):
    ph = np.swapaxes(pts, -1, -2).conj()
    return pts @ pair.sigma(ph)


def _member_stats(pair, members, points):
    """phi values, tau(phi), and the pairwise kappa matrix for trace-form
    members, batched over points and basis directions."""
    Bs = np.stack([mm.B for mm in members])
    cs = np.array([mm.c for mm in members], dtype=complex)
    els = pair.ambient.elements
    vals, taus, d1s = [], [], []
    for lo in range(0, points.shape[0], CHUNK):
        pts = points[lo:lo + CHUNK]
        y = cartan_map_jet(pair, JetMatrix.curve(pts[:, None], els))
        vals.append(np.einsum("pij,kji->pk", y.v[:, 0], Bs) + cs)
        taus.append(np.einsum("pbij,kji->pk", y.d2, Bs))
        d1s.append(np.einsum("pbij,kji->pbk", y.d1, Bs))
    values = np.concatenate(vals)
    tau = np.concatenate(taus)
    D1 = np.concatenate(d1s)
    kappa = np.einsum("pbj,pbk->pjk", D1, D1)
    return values, tau, kappa


def _image_stats(pair, members, points):
    """tau_N and kappa_N of the affine functionals eta(y) = tr(y B) + c
    along the image basis {Ad_sigma(p) X | X in the p-basis} at Phi(p)."""
    Bs = np.stack([mm.B for mm in members])
    P = points.shape[0]
    K = len(members)
    tauN = np.empty((P, K), dtype=complex)
    kapN = np.empty((P, K, K), dtype=complex)
    for i in range(P):
        p = points[i]
        y = p @ pair.sigma(p.conj().T)
        s = pair.sigma(p)
        W = np.einsum("ij,bjk,lk->bil", s, pair.p_basis, s.conj())
        jm = JetMatrix.curve(y, W)
        tauN[i] = np.einsum("bij,kji->k", jm.d2, Bs)
        D1 = np.einsum("bij,kji->bk", jm.d1, Bs)
        kapN[i] = np.einsum("bj,bk->jk", D1, D1)
    return tauN, kapN


# ---------------------------------------------------------------------------
# suites

_FAMILY_COEFF = {
    "Y": lambda n: -(n - 1) / 2.0,
    "X": lambda n: (n - 1) / 2.0,
    "D": lambda n: 1.0,
}


def _family_stack(fam: str, n: int) -> np.ndarray:
    if fam == "Y":
        els = [basis_Y(n, r, s) for r in range(1, n) for s in range(r + 1, n + 1)]
    elif fam == "X":
        els = [basis_X(n, r, s) for r in range(1, n) for s in range(r + 1, n + 1)]
    else:
        els = [basis_D(n, t) for t in range(1, n + 1)]
    return np.array(els).reshape(-1, n, n)


def _basis_claim_ids():
    return tuple(f"basis.square-sum[family={fam},n={n}]"
                 for n in range(2, 9) for fam in ("Y", "X", "D"))


def _run_basis(config: RunConfig, cache: _Cache):
    results = []
    for n in range(2, 9):
        for fam in ("Y", "X", "D"):
            stack = _family_stack(fam, n)
            S = np.einsum("bij,bjk->ik", stack, stack)
            coeff = _FAMILY_COEFF[fam](n)
            residual = float(np.abs(S - coeff * np.eye(n)).max())
            measured = complex(np.trace(S) / n)
            params = {"family": fam, "n": n}
            results.append(_result(
                f"basis.square-sum{_suffix(params)}", "basis", params, 0,
                [residual], coeff, measured, _tol(config, 1e-15)))
    return results


def _table1_claim_ids(space, m, n):
    row = ROW_BY_SPACE[space]
    suffix = _suffix({"m": m, "n": n} if m is not None else {"n": n})
    ids = (f"table1.row{row}.lambda{suffix}", f"table1.row{row}.mu{suffix}")
    if space == "sp-grassmannian":
        ids += (f"catalog.quat.new-range{suffix}",)
    return ids


def _alpha_range(space, m, n):
    # the index-based Grassmannian families exist for every admissible alpha
    if space == "sp-grassmannian":
        return range(1, 2 * (m + n) + 1)
    if space == "u-grassmannian":
        return range(1, m + n + 1)
    return range(1, 2)


def _run_table1(config: RunConfig, cache: _Cache, space, m, n):
    pair = cache.pair(space, m, n)
    pts = cache.points(space, m, n)
    params = {"m": m, "n": n} if m is not None else {"n": n}
    suffix = _suffix(params)
    row = ROW_BY_SPACE[space]
    P = pts.shape[0]

    # kappa couples members only within one fixed-alpha family, so the
    # pairwise block is computed per alpha and the residuals concatenated
    blocks = [(alpha, cache.family(space, m, n, alpha=alpha))
              for alpha in _alpha_range(space, m, n)]
    first = blocks[0][1][0]
    lam_table, mu_table = first.lam, first.mu
    stats = [(alpha, members) + _member_stats(pair, members, pts)
             for alpha, members in blocks]

    all_tau = np.concatenate([s[3] for s in stats], axis=1)
    all_values = np.concatenate([s[2] for s in stats], axis=1)
    lam_fit = _fit(all_tau, all_values)
    lam_used = lam_table
    detail = ""
    if first.sign_pending:
        sign = 1.0 if (lam_fit is not None and lam_fit.real > 0) else -1.0
        lam_used = sign * abs(lam_table)
        source = "table" if sign * lam_table > 0 else "opposite"
        detail = f"resolved_sign={'+1' if sign > 0 else '-1'} ({source} sign)"
    res_l = _rel(all_tau, lam_used * all_values)

    kaps, prods, res_m_parts, res_new_parts = [], [], [], []
    col = 0
    for alpha, members, values, tau, kappa in stats:
        prod = np.einsum("pj,pk->pjk", values, values)
        kaps.append(kappa.ravel())
        prods.append(prod.ravel())
        res_m = _rel(kappa, mu_table * prod)
        res_m_parts.append(res_m.ravel())
        if space == "sp-grassmannian":
            new = np.array([alpha > m + n or mm.params["j"] > m + n
                            for mm in members])
            res_new_parts.append(res_l[:, col:col + len(members)][:, new].ravel())
            res_new_parts.append(res_m[:, new, :].ravel())
        col += len(members)
    mu_fit = _fit(np.concatenate(kaps), np.concatenate(prods))

    out = [
        _result(f"table1.row{row}.lambda{suffix}", space, params, P, res_l,
                lam_used, lam_fit, _tol(config, 1e-8), detail),
        _result(f"table1.row{row}.mu{suffix}", space, params, P,
                np.concatenate(res_m_parts), mu_table, mu_fit,
                _tol(config, 1e-8)),
    ]
    if space == "sp-grassmannian":
        out.append(_result(
            f"catalog.quat.new-range{suffix}", space, params, P,
            np.concatenate(res_new_parts), None, None, _tol(config, 1e-8),
            detail=f"indices j or alpha in {m + n + 1}..{2 * (m + n)}"))
    return out


def _prop71_claim_ids(m, n):
    suffix = _suffix({"m": m, "n": n})
    return (f"prop7.1.tau{suffix}", f"prop7.1.kappa{suffix}")


def _run_prop71(config: RunConfig, cache: _Cache, m, n):
    space = "sp-grassmannian"
    pair = cache.pair(space, m, n)
    pts = cache.points(space, m, n)
    members = cache.family(space, m, n)
    Bs = np.stack([mm.B for mm in members])
    cs = np.array([mm.c for mm in members], dtype=complex)
    yv = _phi_batch(pair, pts)
    values = np.einsum("pij,kji->pk", yv, Bs) + cs
    tauN, kapN = _image_stats(pair, members, pts)
    P = pts.shape[0]
    params = {"m": m, "n": n}
    suffix = _suffix(params)

    coeff = -(m + n) / 2.0
    res_t = _rel(tauN, coeff * values)
    fit_t = _fit(tauN, values)
    prod = np.einsum("pj,pk->pjk", values, values)
    res_k = _rel(kapN, -0.25 * prod)
    fit_k = _fit(kapN, prod)
    return [
        _result(f"prop7.1.tau{suffix}", space, params, P, res_t, coeff,
                fit_t, _tol(config, 1e-8)),
        _result(f"prop7.1.kappa{suffix}", space, params, P, res_k, -0.25,
                fit_k, _tol(config, 1e-8)),
    ]


def _cartan_claim_ids(space, m, n):
    params = {"space": space}
    params.update({"m": m, "n": n} if m is not None else {"n": n})
    suffix = _suffix(params)
    return tuple(f"cartan.{kind}{suffix}" for kind in
                 ("k-invariance", "harmonic", "pullback", "vertical",
                  "factor4.tau", "factor4.kappa"))


def _run_cartan(config: RunConfig, cache: _Cache, space, m, n):
    pair = cache.pair(space, m, n)
    pts = cache.points(space, m, n)
    P = pts.shape[0]
    params = {"space": space}
    params.update({"m": m, "n": n} if m is not None else {"n": n})
    suffix = _suffix(params)
    els = pair.ambient.elements
    results = []

    kpts = np.stack([random_subgroup_point(pair, cache.scfg, i)
                     for i in range(P)])
    res_k = np.abs(_phi_batch(pair, pts @ kpts)
                   - _phi_batch(pair, pts)).reshape(P, -1).max(axis=1)
    results.append(_result(f"cartan.k-invariance{suffix}", space, params, P,
                           res_k, None, None, _tol(config, 1e-12)))

    res_h = []
    for lo in range(0, P, CHUNK):
        chunk = pts[lo:lo + CHUNK]
        y = cartan_map_jet(pair, JetMatrix.curve(chunk[:, None], els))
        H = y.d2.sum(axis=1)
        yv = y.v[:, 0]
        M = np.swapaxes(yv, -1, -2).conj() @ H
        coeff = np.einsum("pij,bij->pb", M, els.conj()).real
        tang = yv @ np.einsum("pb,bij->pij", coeff.astype(complex), els)
        res_h.append(np.abs(tang).reshape(chunk.shape[0], -1).max(axis=1))
    results.append(_result(f"cartan.harmonic{suffix}", space, params, P,
                           np.concatenate(res_h), None, None,
                           _tol(config, 1e-9)))

    yp = cartan_map_jet(pair, JetMatrix.curve(pts[:, None], pair.p_basis))
    ratios = np.einsum("pbij,pbij->pb", yp.d1, yp.d1.conj()).real
    results.append(_result(f"cartan.pullback{suffix}", space, params, P,
                           np.abs(ratios - 4.0), 4.0,
                           complex(ratios.mean()), _tol(config, 1e-8),
                           detail="metric factor 4 = (conformal factor 2)^2"))

    if pair.dim_k:
        yk = cartan_map_jet(pair, JetMatrix.curve(pts[:, None], pair.k_basis))
        vert = np.sqrt(np.einsum("pbij,pbij->pb", yk.d1, yk.d1.conj()).real)
    else:
        vert = np.zeros((P, 1))
    results.append(_result(f"cartan.vertical{suffix}", space, params, P,
                           vert, 0.0, None, _tol(config, 1e-10)))

    members = cache.family(space, m, n)
    etas = members[:2] if len(members) > 1 else [members[0], members[0]]
    valsL, tauL, kapL = _member_stats(pair, etas, pts)
    tauN, kapN = _image_stats(pair, etas, pts)
    results.append(_result(f"cartan.factor4.tau{suffix}", space, params, P,
                           _rel(tauL, 4.0 * tauN), None, None,
                           _tol(config, 1e-8)))
    results.append(_result(f"cartan.factor4.kappa{suffix}", space, params, P,
                           _rel(kapL, 4.0 * kapN), None, None,
                           _tol(config, 1e-8)))
    return results


def _poly_claim_ids(space, m, n, d):
    params = {"space": space, "m": m, "n": n, "d": d}
    suffix = _suffix(params)
    return (f"poly.d{d}.lambda{suffix}", f"poly.d{d}.mu{suffix}")


def _run_poly(config: RunConfig, cache: _Cache, space, m, n, d):
    pair = cache.pair(space, m, n)
    pts = cache.points(space, m, n)
    members = cache.family(space, m, n)
    F = base_family(members)
    PF = polynomial_family(F, d)
    els = pair.ambient.elements
    P, K, B = pts.shape[0], len(PF.members), els.shape[0]
    values = np.empty((P, K), dtype=complex)
    tau = np.zeros((P, K), dtype=complex)
    D1 = np.empty((P, B, K), dtype=complex)
    gens = [pm.generator for pm in PF.members]
    for ip in range(P):
        p = pts[ip]
        yv = p @ pair.sigma(p.conj().T)
        base_vals = tuple(
            Jet2.constant(np.einsum("ij,ji->", yv, mm.B) + mm.c)
            for mm in members)
        for im, g in enumerate(gens):
            values[ip, im] = g(base_vals).v
        for ib in range(B):
            y = cartan_map_jet(pair, JetMatrix.curve(p, els[ib]))
            base_jets = tuple((y @ mm.B).trace() + mm.c for mm in members)
            for im, g in enumerate(gens):
                j = g(base_jets)
                tau[ip, im] += j.d2
                D1[ip, ib, im] = j.d1
    kappa = np.einsum("pbj,pbk->pjk", D1, D1)
    prod = np.einsum("pj,pk->pjk", values, values)
    params = {"space": space, "m": m, "n": n, "d": d}
    suffix = _suffix(params)
    return [
        _result(f"poly.d{d}.lambda{suffix}", space, params, P,
                _rel(tau, PF.lam * values), PF.lam, _fit(tau, values),
                _tol(config, 1e-7),
                detail=f"{len(PF.members)} monomials of degree {d}"),
        _result(f"poly.d{d}.mu{suffix}", space, params, P,
                _rel(kappa, PF.mu * prod), PF.mu, _fit(kappa, prod),
                _tol(config, 1e-7)),
    ]


def _product_claim_ids():
    suffix = _suffix({"m": 1, "n": 1})
    return (f"product.lambda{suffix}", f"product.mu{suffix}")


def _run_product(config: RunConfig, cache: _Cache):
    space, m, n = "sp-grassmannian", 1, 1
    pair = cache.pair(space, m, n)
    members = cache.family(space, m, n)
    F = base_family(members)
    PF = product_family(F, F)
    pts1 = cache.points(space, m, n)
    P = pts1.shape[0]
    pts2 = np.stack([random_pair_point(pair, cache.scfg, P + i)
                     for i in range(P)])
    Bs = np.stack([mm.B for mm in members])
    cs = np.array([mm.c for mm in members], dtype=complex)
    els = pair.ambient.elements
    K = len(members)

    def factor_stats(p):
        y = cartan_map_jet(pair, JetMatrix.curve(p, els))
        V = np.einsum("ij,kji->k", p @ pair.sigma(p.conj().T), Bs) + cs
        T = np.einsum("bij,kji->k", y.d2, Bs)
        D = np.einsum("bij,kji->bk", y.d1, Bs)
        return V, T, np.einsum("bj,bk->jk", D, D)

    KK = K * K
    vals = np.empty((P, KK), dtype=complex)
    tau = np.empty((P, KK), dtype=complex)
    kappa = np.empty((P, KK, KK), dtype=complex)
    for i in range(P):
        V1, T1, G1 = factor_stats(pts1[i])
        V2, T2, G2 = factor_stats(pts2[i])
        vals[i] = np.outer(V1, V2).ravel()
        tau[i] = (np.outer(T1, V2) + np.outer(V1, T2)).ravel()
        kap4 = (np.einsum("ac,b,d->abcd", G1, V2, V2)
                + np.einsum("a,c,bd->abcd", V1, V1, G2))
        kappa[i] = kap4.reshape(KK, KK)

    prod = np.einsum("pj,pk->pjk", vals, vals)
    params = {"m": m, "n": n}
    suffix = _suffix(params)
    detail = f"{space_label(space, m, n)} x {space_label(space, m, n)}"
    return [
        _result(f"product.lambda{suffix}", "product", params, P,
                _rel(tau, PF.lam * vals), PF.lam, _fit(tau, vals),
                _tol(config, 1e-8), detail=detail),
        _result(f"product.mu{suffix}", "product", params, P,
                _rel(kappa, PF.mu * prod), PF.mu, _fit(kappa, prod),
                _tol(config, 1e-8), detail=detail),
    ]


def _ambient_stats(fields, points, n, fiber: bool):
    """Values, tau, and pairwise kappa of ambient fields over the 2n real
    coordinate axes, optionally subtracting the Hopf-fiber contribution."""
    P, K = len(points), len(fields)
    values = np.empty((P, K), dtype=complex)
    tau = np.zeros((P, K), dtype=complex)
    D1 = np.empty((P, 2 * n, K), dtype=complex)
    fib = np.zeros((P, K), dtype=complex)
    for ip, x in enumerate(points):
        for im, f in enumerate(fields):
            values[ip, im] = f.value(x)
        for ib, zs in enumerate(ambient_mod._axis_jets(x, n)):
            for im, f in enumerate(fields):
                j = f.evaluator(zs)
                tau[ip, im] += j.d2
                D1[ip, ib, im] = j.d1
        if fiber:
            zs = ambient_mod._fiber_jet(x, n)
            for im, f in enumerate(fields):
                j = f.evaluator(zs)
                tau[ip, im] -= j.d2
                fib[ip, im] = j.d1
    kappa = (np.einsum("pbj,pbk->pjk", D1, D1)
             - np.einsum("pj,pk->pjk", fib, fib))
    return values, tau, kappa


def _sphere_claim_ids(n):
    suffix = _suffix({"n": n})
    return (f"sphere.lambda{suffix}", f"sphere.mu{suffix}")


def _run_sphere(config: RunConfig, cache: _Cache, n):
    fields = [ambient_mod.sphere_phi(n, j) for j in range(1, n + 1)]
    P = config.samples
    pts = [ambient_mod.random_sphere_point(n, rng_for(f"sphere:{n}", config.seed, i))
           for i in range(P)]
    ambient_mod.check_homogeneous(fields[0], pts[0])
    values, tau, kappa = _ambient_stats(fields, pts, n, fiber=False)
    prod = np.einsum("pj,pk->pjk", values, values)
    lam, mu = -(2.0 * n - 1.0), -1.0
    params = {"n": n}
    suffix = _suffix(params)
    return [
        _result(f"sphere.lambda{suffix}", "sphere", params, P,
                _rel(tau, lam * values), lam, _fit(tau, values),
                _tol(config, 1e-8)),
        _result(f"sphere.mu{suffix}", "sphere", params, P,
                _rel(kappa, mu * prod), mu, _fit(kappa, prod),
                _tol(config, 1e-8)),
    ]


def _cpn_claim_ids(n):
    suffix = _suffix({"n": n})
    return (f"cpn.lambda{suffix}", f"cpn.mu{suffix}")


def _run_cpn(config: RunConfig, cache: _Cache, n, alpha: int = 1):
    # Members phi_{jk} with j <= alpha < k, the fixed-alpha family.
    fields = [ambient_mod.cpn_phi(n, j, k)
              for j in range(1, alpha + 1) for k in range(alpha + 1, n + 2)]
    P = config.samples
    pts = [ambient_mod.random_sphere_point(n + 1, rng_for(f"cpn:{n}", config.seed, i))
           for i in range(P)]
    ambient_mod.check_circle_invariant(fields[0], pts[0])
    values, tau, kappa = _ambient_stats(fields, pts, n + 1, fiber=True)
    prod = np.einsum("pj,pk->pjk", values, values)
    lam, mu = -4.0 * (n + 1), -4.0
    params = {"n": n}
    suffix = _suffix(params)
    return [
        _result(f"cpn.lambda{suffix}", "cpn", params, P,
                _rel(tau, lam * values), lam, _fit(tau, values),
                _tol(config, 1e-8)),
        _result(f"cpn.mu{suffix}", "cpn", params, P,
                _rel(kappa, mu * prod), mu, _fit(kappa, prod),
                _tol(config, 1e-8)),
    ]


# ---------------------------------------------------------------------------
# job assembly

def _selected(config: RunConfig, key: str) -> bool:
    return "all" in config.spaces or key in config.spaces


def _sizes_for(config: RunConfig, space: str):
    if (config.m is not None or config.n is not None) and \
            config.spaces == (space,):
        return ((config.m, config.n),)
    return DEFAULT_SIZES[space]


def jobs_for(config: RunConfig):
    """The ordered list of verification jobs the config selects."""
    config = validate_config(config)
    jobs = []

    if _selected(config, "basis"):
        jobs.append(Job(_basis_claim_ids(), "basis",
                        lambda cache: _run_basis(config, cache)))

    for space in PAIR_SPACE_ORDER:
        if not _selected(config, space):
            continue
        for m, n in _sizes_for(config, space):
            jobs.append(Job(
                _table1_claim_ids(space, m, n), space,
                lambda cache, s=space, m=m, n=n: _run_table1(config, cache, s, m, n)))

    if _selected(config, "sp-grassmannian"):
        sizes = (((config.m, config.n),)
                 if config.spaces == ("sp-grassmannian",) and config.m is not None
                 else ((1, 1),))
        for m, n in sizes:
            jobs.append(Job(_prop71_claim_ids(m, n), "sp-grassmannian",
                            lambda cache, m=m, n=n: _run_prop71(config, cache, m, n)))

    for space in PAIR_SPACE_ORDER:
        if not _selected(config, space):
            continue
        for m, n in _sizes_for(config, space):
            jobs.append(Job(
                _cartan_claim_ids(space, m, n), space,
                lambda cache, s=space, m=m, n=n: _run_cartan(config, cache, s, m, n)))

    if _selected(config, "polynomial"):
        for space, m, n in POLY_SPACES:
            for d in POLY_DEGREES:
                jobs.append(Job(
                    _poly_claim_ids(space, m, n, d), "polynomial",
                    lambda cache, s=space, m=m, n=n, d=d:
                        _run_poly(config, cache, s, m, n, d)))

    if _selected(config, "product"):
        jobs.append(Job(_product_claim_ids(), "product",
                        lambda cache: _run_product(config, cache)))

    if _selected(config, "sphere"):
        ns = ((config.n,) if config.spaces == ("sphere",) and config.n is not None
              else SPHERE_NS)
        for n in ns:
            jobs.append(Job(_sphere_claim_ids(n), "sphere",
                            lambda cache, n=n: _run_sphere(config, cache, n)))

    if _selected(config, "cpn"):
        ns = ((config.n,) if config.spaces == ("cpn",) and config.n is not None
              else CPN_NS)
        for n in ns:
            jobs.append(Job(_cpn_claim_ids(n), "cpn",
                            lambda cache, n=n: _run_cpn(config, cache, n)))

    return jobs


def run_claims(config: RunConfig, prefix: str | None = None):
    """Run every selected job in deterministic order; returns the flat
    list of claim results.  ``prefix`` restricts to jobs owning at least
    one claim id with that prefix (e.g. "table1.")."""
    jobs = jobs_for(config)
    if prefix is not None:
        jobs = [j for j in jobs
                if any(c.startswith(prefix) for c in j.claim_ids)]
    cache = _Cache(config)
    results = []
    for job in jobs:
        results.extend(job.run(cache))
    return results
