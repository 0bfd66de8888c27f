"""Dense complex linear algebra used by every other module.

Entropies are reported in bits unless the logarithm base is switched with
:func:`log_base`. Eigenvalues at or below ``EIG_CLAMP`` count as exact zeros.
"""
from __future__ import annotations

import contextlib
import contextvars
import math
from typing import Iterator, NamedTuple

import numpy as np

from .errors import DimensionMismatch, NotHermitian

HERMITIAN_TOL = 1e-9
EIG_CLAMP = 1e-12

_LOG_BASE: contextvars.ContextVar[float] = contextvars.ContextVar("log_base", default=2.0)


def get_log_base() -> float:
    return _LOG_BASE.get()


@contextlib.contextmanager
def log_base(base: float | str) -> Iterator[float]:
    """Temporarily change the logarithm base used by all entropies.

    Accepts a positive number or the strings ``"2"`` and ``"e"``.

    >>> with log_base("e"):
    ...     round(von_neumann_entropy(np.eye(2) / 2), 6)
    0.693147
    """
    if isinstance(base, str):
        base = math.e if base == "e" else float(base)
    if not base > 1.0:
        raise ValueError(f"log base must exceed 1, got {base}")
    token = _LOG_BASE.set(float(base))
    try:
        yield float(base)
    finally:
        _LOG_BASE.reset(token)


class EigenDecomposition(NamedTuple):
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def hermitian_residual(m: np.ndarray) -> float:
    return float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0


def symmetrize(m: np.ndarray, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Check Hermiticity within ``tol`` and return ``(M + M^dagger) / 2``."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise DimensionMismatch(f"expected a non-empty square matrix, got shape {m.shape}")
    res = hermitian_residual(m)
    if res > tol:
        raise NotHermitian(f"max |H_ij - conj(H_ji)| = {res:.3g} exceeds {tol:g}")
    return 0.5 * (m + m.conj().T)


def eigh(h: np.ndarray) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix with ascending eigenvalues."""
    h = symmetrize(h)
    w, v = np.linalg.eigh(h)
    return EigenDecomposition(w, v)


def eigvalsh(h: np.ndarray) -> np.ndarray:
    return np.linalg.eigvalsh(symmetrize(h))


def _as_matrix(x) -> np.ndarray:
    return np.asarray(x, dtype=complex)


def spectrum_entropy(p: np.ndarray) -> float:
    """Shannon entropy of a nonnegative spectrum, clamping tiny entries to zero."""
    p = np.asarray(p, dtype=float)
    p = p[p > EIG_CLAMP]
    if p.size == 0:
        return 0.0
    return float(-np.sum(p * np.log(p)) / math.log(get_log_base()))


def von_neumann_entropy(rho) -> float:
    """``S(rho) = -tr(rho log rho)`` in the current log base."""
    return spectrum_entropy(np.linalg.eigvalsh(symmetrize(_as_matrix(rho))))


def relative_entropy(rho, sigma) -> float:
    """``S(rho||sigma)``, or ``inf`` when the support of rho leaks out of sigma's."""
    r, s = _as_matrix(rho), _as_matrix(sigma)
    if r.shape != s.shape:
        raise DimensionMismatch(f"{r.shape} vs {s.shape}")
    lam = np.linalg.eigvalsh(symmetrize(r))
    mu, f = np.linalg.eigh(symmetrize(s))
    # weights <f_k| rho |f_k>
    weights = np.real(np.einsum("ik,ij,jk->k", f.conj(), r, f))
    support = mu > EIG_CLAMP
    if np.sum(weights[~support]) > EIG_CLAMP:
        return math.inf
    ln_b = math.log(get_log_base())
    lam = lam[lam > EIG_CLAMP]
    neg_s = float(np.sum(lam * np.log(lam))) / ln_b
    cross = float(np.sum(weights[support] * np.log(mu[support]))) / ln_b
    return neg_s - cross


def kron(a, b) -> np.ndarray:
    return np.kron(_as_matrix(a), _as_matrix(b))


def trace_norm(m) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    return float(np.sum(np.abs(eigvalsh(_as_matrix(m)))))


def is_diagonal(m, tol: float = EIG_CLAMP) -> bool:
    m = _as_matrix(m)
    off = m - np.diag(np.diag(m))
    return bool(np.max(np.abs(off)) <= tol) if off.size else True
