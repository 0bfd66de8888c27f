"""The l1-norm and relative-entropy coherence quantifiers."""
from __future__ import annotations

import enum

import numpy as np

from . import linalg
from .states import BipartiteState, dephase_side_matrix


class MeasureKind(enum.Enum):
    L1 = "l1"
    RELATIVE_ENTROPY = "rel"

    @classmethod
    def parse(cls, value: "MeasureKind | str") -> "MeasureKind":
        if isinstance(value, cls):
            return value
        return cls(str(value).lower())


class MeasurementSide(enum.Enum):
    """Which subsystem is measured: A (->), B (<-) or both (<->)."""

    ON_A = "A"
    ON_B = "B"
    BOTH = "AB"


def l1_coherence(rho) -> float:
    m = np.asarray(rho)
    off = ~np.eye(m.shape[0], dtype=bool)
    return float(np.sum(np.abs(m[off])))


def rel_ent_coherence(rho) -> float:
    """``S(rho_diag) - S(rho)``."""
    m = np.asarray(rho)
    return linalg.spectrum_entropy(np.real(np.diag(m))) - linalg.von_neumann_entropy(m)


def coherence(rho, measure: MeasureKind | str) -> float:
    measure = MeasureKind.parse(measure)
    if measure is MeasureKind.L1:
        return l1_coherence(rho)
    return rel_ent_coherence(rho)


def bipartite_rel_coherence(rho: BipartiteState, side: MeasurementSide) -> float:
    """Entropy gained by dephasing A, B or both in the product reference basis."""
    side = MeasurementSide(side)
    dephased = dephase_side_matrix(rho, side.value)
    return linalg.von_neumann_entropy(dephased) - linalg.von_neumann_entropy(rho.mat)
