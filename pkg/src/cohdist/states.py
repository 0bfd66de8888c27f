"""Validated quantum states, the dephasing channel and the example states.

Bipartite entries follow the convention ``rho[i*dB + k, j*dB + l] = rho_{ik,jl}``
where ``i, j`` index subsystem A and ``k, l`` index subsystem B. The reference
basis is the (product) computational basis throughout.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import linalg
from .errors import (
    InvalidCoefficients,
    InvalidParameter,
    DimensionMismatch,
    ValidationError,
)

STATE_TOL = 1e-9
DROP_PROB = 1e-12

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
ID2 = np.eye(2, dtype=complex)

KET_0 = np.array([1, 0], dtype=complex)
KET_1 = np.array([0, 1], dtype=complex)
KET_PLUS = np.array([1, 1], dtype=complex) / np.sqrt(2)
KET_MINUS = np.array([1, -1], dtype=complex) / np.sqrt(2)


def _check_state(mat: np.ndarray, tol: float = STATE_TOL) -> np.ndarray:
    mat = np.asarray(mat, dtype=complex)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] < 1:
        raise ValidationError(f"square: expected a non-empty square matrix, got shape {mat.shape}")
    if not np.all(np.isfinite(mat)):
        raise ValidationError("finite: matrix contains NaN or Inf")
    herm = linalg.hermitian_residual(mat)
    if herm > tol:
        raise ValidationError(f"hermitian: max |rho_ij - conj(rho_ji)| = {herm:.3g} exceeds {tol:g}")
    mat = 0.5 * (mat + mat.conj().T)
    tr = float(np.real(np.trace(mat)))
    if abs(tr - 1.0) > tol:
        raise ValidationError(f"trace: trace deviates from 1 by {abs(tr - 1.0):.12g} (trace = {tr:.12g})")
    lam_min = float(np.linalg.eigvalsh(mat)[0])
    if lam_min < -tol:
        raise ValidationError(f"positive semidefinite: minimum eigenvalue {lam_min:.3g} below -{tol:g}")
    return mat


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite matrix (stored read-only)."""

    mat: np.ndarray

    def __post_init__(self):
        mat = _check_state(self.mat)
        mat.setflags(write=False)
        object.__setattr__(self, "mat", mat)

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    def __array__(self, dtype=None, copy=None):
        return self.mat if dtype is None else self.mat.astype(dtype)

    @classmethod
    def from_ket(cls, psi: Sequence[complex]) -> "DensityMatrix":
        psi = np.asarray(psi, dtype=complex)
        psi = psi / np.linalg.norm(psi)
        return cls(np.outer(psi, psi.conj()))

    def is_pure(self, tol: float = 1e-10) -> bool:
        return bool(np.linalg.eigvalsh(self.mat)[-1] >= 1 - tol)


@dataclass(frozen=True, eq=False)
class BipartiteState:
    state: DensityMatrix
    dim_a: int
    dim_b: int

    def __post_init__(self):
        if not isinstance(self.state, DensityMatrix):
            object.__setattr__(self, "state", DensityMatrix(self.state))
        if self.dim_a < 1 or self.dim_b < 1:
            raise DimensionMismatch(f"subsystem dimensions must be positive, got {self.dim_a}x{self.dim_b}")
        if self.dim_a * self.dim_b != self.state.dim:
            raise DimensionMismatch(
                f"dims {self.dim_a}x{self.dim_b} do not match matrix dimension {self.state.dim}"
            )

    @property
    def mat(self) -> np.ndarray:
        return self.state.mat

    @property
    def dims(self) -> tuple[int, int]:
        return self.dim_a, self.dim_b

    def tensor(self) -> np.ndarray:
        """View with axes ``[i, k, j, l]`` so that ``t[i, k, j, l] = rho_{ik,jl}``."""
        return self.mat.reshape(self.dim_a, self.dim_b, self.dim_a, self.dim_b)

    def __array__(self, dtype=None, copy=None):
        return self.state.__array__(dtype)


@dataclass(frozen=True, eq=False)
class Ensemble:
    """Probabilities and member states; ``mixture`` is their weighted sum."""

    probs: tuple[float, ...]
    states: tuple[DensityMatrix, ...]
    mixture: DensityMatrix = field(init=False)

    def __post_init__(self):
        probs = tuple(float(p) for p in self.probs)
        states = tuple(s if isinstance(s, DensityMatrix) else DensityMatrix(s) for s in self.states)
        if len(probs) != len(states) or not probs:
            raise ValidationError("ensemble: need one probability per member and at least one member")
        if len({s.dim for s in states}) != 1:
            raise DimensionMismatch("ensemble members differ in dimension")
        if min(probs) < 0:
            raise ValidationError(f"probabilities: negative weight {min(probs):.3g}")
        total = sum(probs)
        if abs(total - 1.0) > STATE_TOL:
            raise ValidationError(f"probabilities: weights sum to {total:.12g}, deviation {abs(total - 1):.3g}")
        mix = sum(p * s.mat for p, s in zip(probs, states))
        object.__setattr__(self, "probs", probs)
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "mixture", DensityMatrix(mix))

    def __len__(self) -> int:
        return len(self.probs)

    def __iter__(self):
        return iter(zip(self.probs, self.states))


def _require_side(side: str, allowed: tuple[str, ...]) -> str:
    s = str(getattr(side, "value", side)).upper()
    if s not in allowed:
        raise ValueError(f"side must be one of {allowed}, got {side!r}")
    return s


# -- channels and reductions -------------------------------------------------

def dephase_matrix(mat: np.ndarray) -> np.ndarray:
    return np.diag(np.diag(mat))


def dephase(rho: DensityMatrix) -> DensityMatrix:
    """Completely dephase in the reference basis (keep only the diagonal)."""
    return DensityMatrix(dephase_matrix(np.asarray(rho)))


def dephase_side_matrix(rho: BipartiteState, side: str) -> np.ndarray:
    side = _require_side(side, ("A", "B", "AB"))
    t = rho.tensor()
    if side in ("A", "AB"):
        t = t * np.eye(rho.dim_a)[:, None, :, None]
    if side in ("B", "AB"):
        t = t * np.eye(rho.dim_b)[None, :, None, :]
    return t.reshape(rho.mat.shape)


def dephase_side(rho: BipartiteState, side: str) -> BipartiteState:
    """Dephase subsystem A, B or both ("A", "B", "AB")."""
    return BipartiteState(DensityMatrix(dephase_side_matrix(rho, side)), rho.dim_a, rho.dim_b)


def partial_trace_matrix(rho: BipartiteState, keep: str) -> np.ndarray:
    keep = _require_side(keep, ("A", "B"))
    t = rho.tensor()
    return np.einsum("ikjk->ij", t) if keep == "A" else np.einsum("ikil->kl", t)


def partial_trace(rho: BipartiteState, keep: str) -> DensityMatrix:
    return DensityMatrix(partial_trace_matrix(rho, keep))


def conditional_ensemble(rho: BipartiteState, measured: str) -> Ensemble:
    """States of the unmeasured side after a reference-basis measurement on ``measured``.

    Outcomes with probability below 1e-12 are dropped and the rest renormalized.
    """
    measured = _require_side(measured, ("A", "B"))
    t = rho.tensor()
    if measured == "B":
        blocks = [t[:, k, :, k] for k in range(rho.dim_b)]
    else:
        blocks = [t[i, :, i, :] for i in range(rho.dim_a)]
    probs = np.array([np.real(np.trace(b)) for b in blocks])
    keep = [n for n, p in enumerate(probs) if p >= DROP_PROB]
    kept = probs[keep]
    norm = kept.sum()
    return Ensemble(
        tuple(kept / norm),
        tuple(DensityMatrix(blocks[n] / probs[n]) for n in keep),
    )


def partial_transpose(rho: BipartiteState, side: str = "B") -> np.ndarray:
    side = _require_side(side, ("A", "B"))
    t = rho.tensor()
    t = t.transpose(0, 3, 2, 1) if side == "B" else t.transpose(2, 1, 0, 3)
    return t.reshape(rho.mat.shape)


def negativity(rho: BipartiteState) -> float:
    """``||rho^{T_B}||_1 - 1`` (not halved)."""
    return linalg.trace_norm(partial_transpose(rho, "B")) - 1.0


# -- generators ---------------------------------------------------------------

def product_state(rho_a, rho_b) -> BipartiteState:
    a, b = np.asarray(rho_a, dtype=complex), np.asarray(rho_b, dtype=complex)
    return BipartiteState(DensityMatrix(linalg.kron(a, b)), a.shape[0], b.shape[0])


def pure_bipartite(psi, dim_a: int, dim_b: int) -> BipartiteState:
    return BipartiteState(DensityMatrix.from_ket(psi), dim_a, dim_b)


def bell_state() -> BipartiteState:
    """(|00> + |11>)/sqrt(2)."""
    return pure_bipartite([1, 0, 0, 1], 2, 2)


def product_plus() -> BipartiteState:
    """|+>|+>."""
    return pure_bipartite(np.kron(KET_PLUS, KET_PLUS), 2, 2)


def intro_example_state() -> BipartiteState:
    """1/2 |+><+| (x) |0><0| + 1/2 |-><-| (x) |1><1|."""
    plus = np.outer(KET_PLUS, KET_PLUS.conj())
    minus = np.outer(KET_MINUS, KET_MINUS.conj())
    p0 = np.outer(KET_0, KET_0)
    p1 = np.outer(KET_1, KET_1)
    mat = 0.5 * np.kron(plus, p0) + 0.5 * np.kron(minus, p1)
    return BipartiteState(DensityMatrix(mat), 2, 2)


def schmidt_correlated(coeffs) -> BipartiteState:
    """State with ``rho_{ii,jj} = coeffs[i, j]`` and zeros elsewhere.

    ``coeffs`` must itself be a density matrix.
    """
    c = np.asarray(coeffs, dtype=complex)
    try:
        c = _check_state(c)
    except ValidationError as exc:
        raise InvalidCoefficients(f"coefficient matrix is not a valid state: {exc}") from None
    d = c.shape[0]
    t = np.zeros((d, d, d, d), dtype=complex)
    idx = np.arange(d)
    t[idx[:, None], idx[:, None], idx[None, :], idx[None, :]] = c
    return BipartiteState(DensityMatrix(t.reshape(d * d, d * d)), d, d)


def ising_hamiltonian(J: float, lam: float, epsilon: float) -> np.ndarray:
    """Two-site Ising Hamiltonian with transverse field and symmetry-breaking z field.

    ``H = lam X1 X2 + J (X1 + X2) + epsilon lam (Z1 + Z2)``.
    """
    xx = np.kron(SIGMA_X, SIGMA_X)
    x_sum = np.kron(SIGMA_X, ID2) + np.kron(ID2, SIGMA_X)
    z_sum = np.kron(SIGMA_Z, ID2) + np.kron(ID2, SIGMA_Z)
    return lam * xx + J * x_sum + epsilon * lam * z_sum


def ising_ground_state(J: float, lam: float = 1.0, epsilon: float = 1e-3) -> BipartiteState:
    if lam == 0:
        raise InvalidParameter("lambda must be nonzero")
    h = ising_hamiltonian(J, lam, epsilon)
    w, v = linalg.eigh(h)
    # eigh sorts ascending; on an exact tie the lower column index wins
    return pure_bipartite(v[:, 0], 2, 2)


# -- random sampling ----------------------------------------------------------

def haar_ket(dim: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return z / np.linalg.norm(z)


def haar_isometry(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random ``rows x cols`` isometry (orthonormal columns)."""
    z = (rng.normal(size=(rows, cols)) + 1j * rng.normal(size=(rows, cols))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_density_matrix(dim: int, rng: np.random.Generator, n_pure: int | None = None) -> DensityMatrix:
    """Mixture of ``n_pure`` (default dim**2) Haar kets with flat-Dirichlet weights."""
    n = dim * dim if n_pure is None else n_pure
    kets = np.array([haar_ket(dim, rng) for _ in range(n)])
    w = rng.dirichlet(np.ones(n))
    mat = np.einsum("n,ni,nj->ij", w, kets, kets.conj())
    return DensityMatrix(mat)


def random_bipartite(dim_a: int, dim_b: int, rng: np.random.Generator) -> BipartiteState:
    return BipartiteState(random_density_matrix(dim_a * dim_b, rng), dim_a, dim_b)


def random_ensemble(size: int, dim: int, rng: np.random.Generator) -> Ensemble:
    probs = rng.dirichlet(np.ones(size))
    return Ensemble(tuple(probs), tuple(random_density_matrix(dim, rng) for _ in range(size)))

