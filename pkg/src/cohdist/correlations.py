"""Reference-basis discord, classical correlations and Holevo quantities.

Everything here is assembled from the eight entropies in :class:`EntropyTable`;
a tilde on a subsystem means it was dephased in the reference basis.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from . import linalg
from .coherence import MeasurementSide
from .states import (
    BipartiteState,
    Ensemble,
    conditional_ensemble,
    dephase_matrix,
    dephase_side_matrix,
    partial_trace_matrix,
)


@dataclass(frozen=True)
class EntropyTable:
    ab: float  # S_AB
    a_bt: float  # S_{A B~}
    at_b: float  # S_{A~ B}
    at_bt: float  # S_{A~ B~}
    a: float
    b: float
    at: float  # S_{A~}
    bt: float  # S_{B~}


def entropy_table(rho: BipartiteState) -> EntropyTable:
    S = linalg.von_neumann_entropy
    H = linalg.spectrum_entropy
    rho_a = partial_trace_matrix(rho, "A")
    rho_b = partial_trace_matrix(rho, "B")
    return EntropyTable(
        ab=S(rho.mat),
        a_bt=S(dephase_side_matrix(rho, "B")),
        at_b=S(dephase_side_matrix(rho, "A")),
        at_bt=H(np.real(np.diag(rho.mat))),
        a=S(rho_a),
        b=S(rho_b),
        at=H(np.real(np.diag(rho_a))),
        bt=H(np.real(np.diag(rho_b))),
    )


@dataclass(frozen=True)
class DiscordReport:
    mutual_info: float
    discord_left: float  # D<-: measurement on B
    discord_right: float  # D->: measurement on A
    discord_both: float
    classical_left: float  # I_{A B~}
    classical_both: float  # I_{A~ B~}

    def as_dict(self) -> dict:
        return asdict(self)


def _mutual(t: EntropyTable) -> float:
    return t.a + t.b - t.ab


def _discord(t: EntropyTable, side: MeasurementSide) -> float:
    if side is MeasurementSide.ON_B:
        return t.b - t.ab - t.bt + t.a_bt
    if side is MeasurementSide.ON_A:
        return t.a - t.ab - t.at + t.at_b
    return _mutual(t) - (t.at + t.bt - t.at_bt)


def mutual_information(rho: BipartiteState) -> float:
    return _mutual(entropy_table(rho))


def discord(rho: BipartiteState, side: MeasurementSide) -> float:
    """Mutual information lost to a reference-basis measurement on A, B or both.

    No optimization over measurement bases is done.
    """
    return _discord(entropy_table(rho), MeasurementSide(side))


def discord_report(rho: BipartiteState) -> DiscordReport:
    t = entropy_table(rho)
    return DiscordReport(
        mutual_info=_mutual(t),
        discord_left=_discord(t, MeasurementSide.ON_B),
        discord_right=_discord(t, MeasurementSide.ON_A),
        discord_both=_discord(t, MeasurementSide.BOTH),
        classical_left=t.a + t.bt - t.a_bt,
        classical_both=t.at + t.bt - t.at_bt,
    )


def classical_correlation(rho: BipartiteState, side: str = "left") -> float:
    """Holevo quantity of A's conditional ensemble after measuring B.

    ``side="left"`` gives ``I_{A B~}``; ``side="both"`` also dephases A and its
    conditional states, giving ``I_{A~ B~}``.
    """
    ens = conditional_ensemble(rho, measured="B")
    rho_a = partial_trace_matrix(rho, "A")
    side = side.lower()
    if side == "left":
        return linalg.von_neumann_entropy(rho_a) - sum(
            p * linalg.von_neumann_entropy(s.mat) for p, s in ens
        )
    if side == "both":
        H = linalg.spectrum_entropy
        return H(np.real(np.diag(rho_a))) - sum(p * H(np.real(np.diag(s.mat))) for p, s in ens)
    raise ValueError(f"side must be 'left' or 'both', got {side!r}")


def holevo(ens: Ensemble) -> float:
    S = linalg.von_neumann_entropy
    return S(ens.mixture.mat) - sum(p * S(s.mat) for p, s in ens)


def dephased_holevo(ens: Ensemble) -> float:
    """Holevo quantity after each member passes through the dephasing channel."""
    S = linalg.von_neumann_entropy
    return S(dephase_matrix(ens.mixture.mat)) - sum(p * S(dephase_matrix(s.mat)) for p, s in ens)
