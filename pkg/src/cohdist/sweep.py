"""Coherence distribution of the two-site Ising ground state across J/lambda."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .coherence import MeasureKind
from .distribution import distribution_report
from .errors import InvalidRange
from .states import ising_ground_state


@dataclass(frozen=True)
class SweepConfig:
    jmin: float = 0.0
    jmax: float = 10.0
    steps: int = 101
    epsilon: float = 1e-3
    lam: float = 1.0
    workers: int = 1

    def grid(self) -> np.ndarray:
        if not self.jmin <= self.jmax:
            raise InvalidRange(f"jmin {self.jmin} exceeds jmax {self.jmax}")
        if self.steps < 2:
            raise InvalidRange(f"steps must be >= 2, got {self.steps}")
        return np.linspace(self.jmin, self.jmax, self.steps)


def _ledger_row(ratio: float, cfg: SweepConfig) -> tuple[float, ...]:
    state = ising_ground_state(ratio * cfg.lam, cfg.lam, cfg.epsilon)
    row = [float(ratio)]
    for measure in (MeasureKind.L1, MeasureKind.RELATIVE_ENTROPY):
        r = distribution_report(state, measure)
        row += [r.c_total, r.c_a, r.c_b, r.acc_a, r.acc_b, r.remaining, r.residual]
    return tuple(row)


def ising_sweep(cfg: SweepConfig = SweepConfig()) -> list[tuple[float, ...]]:
    """One ledger row per grid point, in grid order (columns as ``io.SWEEP_COLUMNS``)."""
    grid = cfg.grid()
    if cfg.workers > 1:
        with ThreadPoolExecutor(cfg.workers) as pool:
            return list(pool.map(lambda x: _ledger_row(x, cfg), grid))
    return [_ledger_row(x, cfg) for x in grid]
