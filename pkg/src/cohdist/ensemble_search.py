"""Maximize average coherence over pure-state decompositions of a state.

Every pure decomposition of ``rho = sum_k lam_k |e_k><e_k|`` into ``m`` members
comes from an ``m x rank`` isometry ``U`` via

    sqrt(p_j) |psi_j> = sum_k U[j, k] sqrt(lam_k) |e_k>.

The search draws random isometries and improves them by sweeping over pairs of
rows, applying a 2x2 rotation (angle, phase) to each pair. Left-multiplying by
a unitary keeps ``U`` an isometry exactly, so no re-orthonormalization is
needed. Only the two touched members change, so each pair step is a cheap
2-parameter problem.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from itertools import combinations

import numpy as np

from . import linalg
from .coherence import MeasureKind
from .distribution import ensemble_accessible_coherence
from .errors import RankMismatch, ValidationError
from .states import DensityMatrix, Ensemble, haar_isometry

RANK_TOL = 1e-12
ISOMETRY_TOL = 1e-10
PURE_TOL = 1e-10
ACCEPT_MARGIN = 1e-14


@dataclass(frozen=True, eq=False)
class DecompositionSpec:
    rank: int
    size: int
    mixing: np.ndarray

    def __post_init__(self):
        mixing = np.asarray(self.mixing, dtype=complex)
        if mixing.shape != (self.size, self.rank):
            raise RankMismatch(f"mixing has shape {mixing.shape}, expected {(self.size, self.rank)}")
        if self.size < self.rank:
            raise RankMismatch(f"ensemble size {self.size} below rank {self.rank}")
        err = np.max(np.abs(mixing.conj().T @ mixing - np.eye(self.rank)))
        if err > ISOMETRY_TOL:
            raise ValidationError(f"isometry: columns deviate from orthonormal by {err:.3g}")
        object.__setattr__(self, "mixing", mixing)


@dataclass(frozen=True)
class SearchConfig:
    restarts: int = 32
    max_iters: int = 500
    tol: float = 1e-8
    size_factor: int = 2
    grid: int = 8
    min_step: float = 1e-5
    zoom: float = 2.5


@dataclass(frozen=True, eq=False)
class SearchResult:
    best_value: float
    best_ensemble: Ensemble
    restarts_used: int
    converged: bool
    upper_bound: float
    history: tuple[float, ...] = field(default=())


def _eigen_factor(rho) -> tuple[int, np.ndarray]:
    """Rank and the ``rank x d`` matrix whose rows are sqrt(lam_k) e_k^T."""
    w, v = linalg.eigh(np.asarray(rho))
    keep = w > RANK_TOL
    w, v = w[keep], v[:, keep]
    return int(keep.sum()), (v * np.sqrt(w)).T


def _ensemble_from_rows(rows: np.ndarray) -> Ensemble:
    weights = np.sum(np.abs(rows) ** 2, axis=1)
    keep = weights >= RANK_TOL
    rows, weights = rows[keep], weights[keep]
    probs = weights / weights.sum()
    states = tuple(DensityMatrix(np.outer(r, r.conj()) / w) for r, w in zip(rows, weights))
    return Ensemble(tuple(probs), states)


def decomposition_from_isometry(rho: DensityMatrix, spec: DecompositionSpec) -> Ensemble:
    rank, factor = _eigen_factor(rho)
    if spec.rank != rank:
        raise RankMismatch(f"state has rank {rank}, decomposition expects {spec.rank}")
    return _ensemble_from_rows(spec.mixing @ factor)


def accessible_upper_bound(rho: DensityMatrix, measure: MeasureKind | str) -> float:
    """``S(rho)`` for relative entropy; no certified bound (``inf``) for l1."""
    if MeasureKind.parse(measure) is MeasureKind.RELATIVE_ENTROPY:
        return linalg.von_neumann_entropy(np.asarray(rho))
    return math.inf


# -- objective on unnormalized members ------------------------------------------

def _member_scores(rows: np.ndarray, measure: MeasureKind) -> np.ndarray:
    """``p_j C(psi_j)`` for rows ``sqrt(p_j) psi_j``; works over leading batch axes."""
    mod2 = rows.real ** 2 + rows.imag ** 2
    if measure is MeasureKind.L1:
        return np.sqrt(mod2).sum(axis=-1) ** 2 - mod2.sum(axis=-1)
    # p H(|psi|^2) = -sum m log m + w log w, with m = |row|^2 and w = sum m
    w = mod2.sum(axis=-1)
    mlogm = (mod2 * np.log(np.where(mod2 > 0, mod2, 1.0))).sum(axis=-1)
    wlogw = w * np.log(np.where(w > 0, w, 1.0))
    return (wlogw - mlogm) / math.log(linalg.get_log_base())


def _apply_pair(pair: np.ndarray, theta, phi) -> np.ndarray:
    """Rotate two rows by ``[[c, -conj(e) s], [e s, c]]``, broadcasting over angles."""
    theta, phi = np.asarray(theta)[..., None], np.asarray(phi)[..., None]
    c, s = np.cos(theta), np.sin(theta)
    e = np.exp(1j * phi)
    u, v = pair[0], pair[1]
    return np.stack([c * u - np.conj(e) * s * v, e * s * u + c * v], axis=-2)


def _optimize_pair(pair: np.ndarray, measure: MeasureKind, cfg: SearchConfig) -> tuple[np.ndarray, float]:
    """Best rotation of two member rows; returns new rows and the score gain."""
    base = float(_member_scores(pair, measure).sum())
    n = cfg.grid
    th = np.linspace(-np.pi / 2, np.pi / 2, n, endpoint=False)
    ph = np.linspace(0, 2 * np.pi, n, endpoint=False)
    T, P = np.meshgrid(th, ph, indexing="ij")
    cand = _apply_pair(pair, T, P)
    scores = _member_scores(cand, measure).sum(axis=-1)
    k = np.unravel_index(np.argmax(scores), scores.shape)
    if scores[k] > base:
        theta, phi, best = T[k], P[k], float(scores[k])
    else:
        theta, phi, best = 0.0, 0.0, base
    # zoom: re-grid around the incumbent with a shrinking spacing
    offsets = np.linspace(-1.0, 1.0, 5)
    dt, dp = np.meshgrid(offsets, offsets, indexing="ij")
    step = np.pi / n
    while step > cfg.min_step:
        trial_t, trial_p = theta + step * dt, phi + step * dp
        s = _member_scores(_apply_pair(pair, trial_t, trial_p), measure).sum(axis=-1)
        j = np.unravel_index(np.argmax(s), s.shape)
        # sub-rounding gains would otherwise drift the incumbent along flat ridges
        if s[j] > best + ACCEPT_MARGIN:
            theta, phi, best = trial_t[j], trial_p[j], float(s[j])
        step /= cfg.zoom
    if best <= base + ACCEPT_MARGIN:
        return pair, 0.0
    return _apply_pair(pair, theta, phi), best - base


def _ascend(rows: np.ndarray, measure: MeasureKind, cfg: SearchConfig) -> tuple[np.ndarray, bool]:
    pairs = list(combinations(range(rows.shape[0]), 2))
    for _ in range(cfg.max_iters):
        gain = 0.0
        for a, b in pairs:
            new, g = _optimize_pair(rows[[a, b]], measure, cfg)
            if g > 0:
                rows[[a, b]] = new
                gain += g
        if gain < cfg.tol:
            return rows, True
    return rows, False


def max_accessible_coherence(
    rho: DensityMatrix,
    measure: MeasureKind | str = MeasureKind.RELATIVE_ENTROPY,
    restarts: int = 32,
    max_iters: int = 500,
    seed: int = 0,
    config: SearchConfig | None = None,
) -> SearchResult:
    """Best accessible coherence found over pure-state decompositions.

    This is a lower-bound search: ``upper_bound`` carries ``S(rho)`` for the
    relative-entropy measure. Restart ``r`` uses the ``r``-th child of
    ``SeedSequence(seed)``, so adding restarts never lowers the result.
    """
    measure = MeasureKind.parse(measure)
    if not isinstance(rho, DensityMatrix):
        rho = DensityMatrix(rho)
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    cfg = replace(config or SearchConfig(), restarts=restarts, max_iters=max_iters)
    bound = accessible_upper_bound(rho, measure)
    rank, factor = _eigen_factor(rho)

    if rho.is_pure(PURE_TOL):
        return SearchResult(0.0, Ensemble((1.0,), (rho,)), 0, True, bound)

    size = cfg.size_factor * rank
    best = None
    history = []
    for child in np.random.SeedSequence(seed).spawn(cfg.restarts):
        rng = np.random.default_rng(child)
        rows, conv = _ascend(haar_isometry(size, rank, rng) @ factor, measure, cfg)
        ens = _ensemble_from_rows(rows)
        value = ensemble_accessible_coherence(ens, measure)
        history.append(value)
        if best is None or value > best[0]:
            best = (value, ens, conv)
    value, ens, conv = best
    return SearchResult(value, ens, cfg.restarts, conv, bound, tuple(history))


def eigen_ensemble(rho: DensityMatrix) -> Ensemble:
    _, factor = _eigen_factor(rho)
    return _ensemble_from_rows(factor)
