"""Split bipartite coherence into local, locally accessible and remaining parts.

For either measure the ledger reads

    C_AB = C_A + C^acc_A + C_B + C^acc_B + C^rem

where C^acc_A is the extra coherence A gains on average when B is measured in
the reference basis and the outcome is sent to A, and C^rem is whatever neither
side can reach that way.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .coherence import MeasureKind, coherence, l1_coherence
from .correlations import EntropyTable, entropy_table
from .errors import PartitionViolation
from .states import BipartiteState, Ensemble, partial_trace_matrix

PARTITION_FAULT_TOL = 1e-7


@dataclass(frozen=True)
class DistributionReport:
    measure: MeasureKind
    c_total: float
    c_a: float
    c_b: float
    acc_a: float
    acc_b: float
    remaining: float
    residual: float

    def parts(self) -> tuple[float, float, float, float, float, float]:
        """``(c_total, c_a, acc_a, c_b, acc_b, remaining)``."""
        return (self.c_total, self.c_a, self.acc_a, self.c_b, self.acc_b, self.remaining)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["measure"] = self.measure.value
        return d


def ensemble_accessible_coherence(ens: Ensemble, measure: MeasureKind | str) -> float:
    """Average member coherence minus the coherence of the mixture."""
    measure = MeasureKind.parse(measure)
    avg = sum(p * coherence(s.mat, measure) for p, s in ens)
    return avg - coherence(ens.mixture.mat, measure)


# -- l1 closed forms -----------------------------------------------------------

def _l1_parts(rho: BipartiteState) -> dict[str, float]:
    t = np.abs(rho.tensor())
    off_a = 1.0 - np.eye(rho.dim_a)
    off_b = 1.0 - np.eye(rho.dim_b)
    # |rho_{ik,jk}| summed over k, for i != j (and the B analogue)
    a_blocks = np.einsum("ikjk->ij", t) * off_a
    b_blocks = np.einsum("ikil->kl", t) * off_b
    c_a = l1_coherence(partial_trace_matrix(rho, "A"))
    c_b = l1_coherence(partial_trace_matrix(rho, "B"))
    return {
        "c_total": l1_coherence(rho.mat),
        "c_a": c_a,
        "c_b": c_b,
        "acc_a": float(a_blocks.sum()) - c_a,
        "acc_b": float(b_blocks.sum()) - c_b,
        "remaining": float(np.einsum("ikjl,ij,kl->", t, off_a, off_b)),
    }


# -- relative-entropy closed forms ---------------------------------------------

def _rel_acc_a(t: EntropyTable) -> float:
    return t.at_bt - t.a_bt + t.a - t.at


def _rel_acc_b(t: EntropyTable) -> float:
    return t.at_bt - t.at_b + t.b - t.bt


def _rel_remaining(t: EntropyTable) -> float:
    return t.a_bt + t.at_b - t.ab - t.at_bt


def _rel_parts(rho: BipartiteState) -> dict[str, float]:
    t = entropy_table(rho)
    return {
        "c_total": t.at_bt - t.ab,
        "c_a": t.at - t.a,
        "c_b": t.bt - t.b,
        "acc_a": _rel_acc_a(t),
        "acc_b": _rel_acc_b(t),
        "remaining": _rel_remaining(t),
    }


def _parts(rho: BipartiteState, measure: MeasureKind) -> dict[str, float]:
    return _l1_parts(rho) if measure is MeasureKind.L1 else _rel_parts(rho)


def local_accessible_coherence(rho: BipartiteState, side: str, measure: MeasureKind | str) -> float:
    """Accessible coherence of ``side`` when the other subsystem is measured."""
    side = str(side).upper()
    if side not in ("A", "B"):
        raise ValueError(f"side must be 'A' or 'B', got {side!r}")
    return _parts(rho, MeasureKind.parse(measure))["acc_" + side.lower()]


def remaining_coherence(rho: BipartiteState, measure: MeasureKind | str) -> float:
    measure = MeasureKind.parse(measure)
    if measure is MeasureKind.L1:
        return _l1_parts(rho)["remaining"]
    return _rel_remaining(entropy_table(rho))


def distribution_report(rho: BipartiteState, measure: MeasureKind | str) -> DistributionReport:
    """Full coherence ledger for one measure.

    Raises :class:`PartitionViolation` if the parts miss the total by more
    than 1e-7.
    """
    measure = MeasureKind.parse(measure)
    p = _parts(rho, measure)
    residual = p["c_total"] - (p["c_a"] + p["acc_a"] + p["c_b"] + p["acc_b"] + p["remaining"])
    if not abs(residual) <= PARTITION_FAULT_TOL:
        raise PartitionViolation(f"{measure.value} partition residual {residual:.3g} exceeds {PARTITION_FAULT_TOL:g}")
    return DistributionReport(measure=measure, residual=residual, **p)
