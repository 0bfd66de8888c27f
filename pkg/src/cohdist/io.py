"""JSON state files and CSV sweep output.

State file layout::

    {"dims": [dA, dB], "matrix": [[[re, im], ...], ...]}

``dims`` may also be ``[d]`` for a single system.
"""
from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import ParseError, ValidationError
from .states import BipartiteState, DensityMatrix, Ensemble

SWEEP_COLUMNS = (
    "j_over_lambda",
    "l1_total", "l1_a", "l1_b", "l1_acc_a", "l1_acc_b", "l1_rem", "l1_residual",
    "rel_total", "rel_a", "rel_b", "rel_acc_a", "rel_acc_b", "rel_rem", "rel_residual",
)


def matrix_to_pairs(mat: np.ndarray) -> list:
    mat = np.asarray(mat, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in row] for row in mat]


def state_to_dict(state: BipartiteState | DensityMatrix) -> dict:
    if isinstance(state, BipartiteState):
        dims = [state.dim_a, state.dim_b]
    else:
        dims = [state.dim]
    return {"dims": dims, "matrix": matrix_to_pairs(state.mat)}


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def write_state(state: BipartiteState | DensityMatrix, path: str | Path) -> None:
    Path(path).write_text(dumps(state_to_dict(state)))


def _pairs_to_matrix(raw) -> np.ndarray:
    try:
        arr = np.asarray(raw, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"matrix is not a numeric grid of [re, im] pairs: {exc}") from None
    if arr.ndim != 3 or arr.shape[2] != 2 or arr.shape[0] != arr.shape[1]:
        raise ParseError(f"matrix must be an n x n grid of [re, im] pairs, got array shape {arr.shape}")
    return arr[..., 0] + 1j * arr[..., 1]


def state_from_dict(data: dict) -> BipartiteState | DensityMatrix:
    if not isinstance(data, dict) or "dims" not in data or "matrix" not in data:
        raise ParseError("state file needs 'dims' and 'matrix' keys")
    dims = data["dims"]
    if (
        not isinstance(dims, list)
        or len(dims) not in (1, 2)
        or not all(isinstance(d, int) and not isinstance(d, bool) and d >= 1 for d in dims)
    ):
        raise ParseError(f"dims must be [d] or [dA, dB] with positive integers, got {dims!r}")
    mat = _pairs_to_matrix(data["matrix"])
    if int(np.prod(dims)) != mat.shape[0]:
        raise ValidationError(f"dims: product of {dims} does not match matrix dimension {mat.shape[0]}")
    rho = DensityMatrix(mat)
    if len(dims) == 2:
        return BipartiteState(rho, dims[0], dims[1])
    return rho


def parse_state(path: str | Path) -> BipartiteState | DensityMatrix:
    """Load and validate a state file."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: malformed JSON: {exc}") from None
    return state_from_dict(data)


def ensemble_to_dict(ens: Ensemble) -> dict:
    return {
        "members": [
            {"p": float(p), "state": state_to_dict(s)} for p, s in ens
        ]
    }


def format_value(x: float) -> str:
    return f"{x:.12g}"


def write_sweep_csv(rows: Iterable[Sequence[float]], path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(SWEEP_COLUMNS)
        for row in rows:
            if len(row) != len(SWEEP_COLUMNS):
                raise ValueError(f"sweep row has {len(row)} values, expected {len(SWEEP_COLUMNS)}")
            writer.writerow([format_value(v) for v in row])


def read_sweep_csv(path: str | Path) -> tuple[list[str], np.ndarray]:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        data = np.array([[float(v) for v in row] for row in reader])
    return header, data
