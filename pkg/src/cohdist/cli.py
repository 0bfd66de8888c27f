"""Command-line interface: ``cohdist {analyze,sweep-ising,assist,gen}``.

Exit codes: 0 success, 1 parse/validation error, 2 invalid arguments,
3 internal numerical fault (partition residual above 1e-7).
"""
from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from . import io
from .coherence import MeasureKind
from .correlations import discord_report, mutual_information
from .distribution import distribution_report
from .ensemble_search import max_accessible_coherence
from .errors import (
    InvalidParameter,
    InvalidRange,
    ParseError,
    PartitionViolation,
    UnknownGenerator,
    ValidationError,
)
from .linalg import log_base
from .states import (
    BipartiteState,
    bell_state,
    intro_example_state,
    ising_ground_state,
    negativity,
    product_plus,
    schmidt_correlated,
)
from .sweep import SweepConfig, ising_sweep

EXIT_OK, EXIT_INPUT, EXIT_ARGS, EXIT_NUMERIC = 0, 1, 2, 3

GENERATORS = ("intro-example", "bell", "schmidt", "ising-ground", "product-plus")
PART_NAMES = ("c_total", "c_a", "acc_a", "c_b", "acc_b", "remaining")


def _measures(flag: str) -> list[MeasureKind]:
    if flag == "both":
        return [MeasureKind.L1, MeasureKind.RELATIVE_ENTROPY]
    return [MeasureKind.parse(flag)]


def _write_json(obj, path: str | None) -> None:
    if path:
        Path(path).write_text(io.dumps(obj))


def cmd_analyze(args) -> int:
    state = io.parse_state(args.state)
    if not isinstance(state, BipartiteState):
        raise ValidationError("dims: analyze needs a bipartite state file (dims [dA, dB])")
    reports = [distribution_report(state, m) for m in _measures(args.measure)]
    disc = discord_report(state)
    neg = negativity(state)

    print(f"state {args.state}  dims {state.dim_a}x{state.dim_b}")
    print(f"{'measure':<8}" + "".join(f" {n:>12}" for n in PART_NAMES + ("residual",)))
    for r in reports:
        vals = r.parts() + (r.residual,)
        print(f"{r.measure.value:<8}" + "".join(f" {v:>12.6g}" for v in vals))
    print("discord  " + "  ".join(f"{k}={v:.6g}" for k, v in disc.as_dict().items()))
    print(f"negativity {neg:.6g}")

    _write_json(
        {
            "dims": [state.dim_a, state.dim_b],
            "distribution": {r.measure.value: r.as_dict() for r in reports},
            "discord": disc.as_dict(),
            "extras": {"negativity": neg, "mutual_information": mutual_information(state)},
        },
        args.json,
    )
    return EXIT_OK


def cmd_sweep_ising(args) -> int:
    cfg = SweepConfig(args.jmin, args.jmax, args.steps, args.epsilon, args.lam, args.workers)
    rows = ising_sweep(cfg)
    io.write_sweep_csv(rows, args.out)
    print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_OK


def cmd_assist(args) -> int:
    state = io.parse_state(args.state)
    rho = state.state if isinstance(state, BipartiteState) else state
    res = max_accessible_coherence(rho, args.measure, args.restarts, args.max_iters, args.seed)
    summary = {
        "measure": MeasureKind.parse(args.measure).value,
        "best_value": res.best_value,
        "upper_bound": None if math.isinf(res.upper_bound) else res.upper_bound,
        "converged": res.converged,
        "restarts_used": res.restarts_used,
        "seed": args.seed,
    }
    sys.stdout.write(io.dumps(summary))
    _write_json(summary, args.json)
    if args.out:
        Path(args.out).write_text(io.dumps(io.ensemble_to_dict(res.best_ensemble)))
    return EXIT_OK


def _generate(args) -> BipartiteState:
    name = args.generator
    if name == "intro-example":
        return intro_example_state()
    if name == "bell":
        return bell_state()
    if name == "product-plus":
        return product_plus()
    if name == "ising-ground":
        return ising_ground_state(args.J, args.lam, args.epsilon)
    if name == "schmidt":
        if not args.coeffs:
            raise InvalidParameter("schmidt needs --coeffs <state file with the coefficient matrix>")
        coeffs = io.parse_state(args.coeffs)
        return schmidt_correlated(np.asarray(coeffs))
    raise UnknownGenerator(f"unknown generator {name!r}; choose from {', '.join(GENERATORS)}")


def cmd_gen(args) -> int:
    state = _generate(args)
    io.write_state(state, args.out)
    print(f"wrote {args.generator} ({state.dim_a}x{state.dim_b}) to {args.out}")
    return EXIT_OK


def _global_flags(default) -> argparse.ArgumentParser:
    # shared so the flags work before or after the subcommand
    p = argparse.ArgumentParser(add_help=False, argument_default=default)
    p.add_argument("--log-base", choices=("2", "e"), help="entropy log base (default 2)")
    p.add_argument("--json", metavar="PATH", help="also write results as JSON")
    p.add_argument("--seed", type=int, help="master seed (default 0)")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cohdist",
        description="Coherence distribution of bipartite states.",
        parents=[_global_flags(None)],
    )
    parser.set_defaults(log_base="2", json=None, seed=0)
    shared = _global_flags(argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[shared], help="coherence ledger, discord and negativity of a state file")
    p.add_argument("state")
    p.add_argument("--measure", choices=("l1", "rel", "both"), default="both")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep-ising", parents=[shared], help="ledger across J/lambda for the two-site Ising ground state")
    p.add_argument("--jmin", type=float, default=0.0)
    p.add_argument("--jmax", type=float, default=10.0)
    p.add_argument("--steps", type=int, default=101)
    p.add_argument("--epsilon", type=float, default=1e-3)
    p.add_argument("--lambda", dest="lam", type=float, default=1.0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", required=True, metavar="CSV")
    p.set_defaults(func=cmd_sweep_ising)

    p = sub.add_parser("assist", parents=[shared], help="search pure-state decompositions for maximal accessible coherence")
    p.add_argument("state")
    p.add_argument("--measure", choices=("l1", "rel"), default="rel")
    p.add_argument("--restarts", type=int, default=32)
    p.add_argument("--max-iters", type=int, default=500)
    p.add_argument("--out", metavar="PATH", help="write the best ensemble as JSON")
    p.set_defaults(func=cmd_assist)

    p = sub.add_parser("gen", parents=[shared], help="write a generator state to a state file")
    p.add_argument("generator", metavar="GENERATOR", help=" | ".join(GENERATORS))
    p.add_argument("--J", type=float, default=0.0)
    p.add_argument("--lambda", dest="lam", type=float, default=1.0)
    p.add_argument("--epsilon", type=float, default=1e-3)
    p.add_argument("--coeffs", metavar="PATH", help="coefficient matrix for schmidt (state file, dims [d])")
    p.add_argument("--out", required=True, metavar="PATH")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "assist" and args.restarts < 1:
        print("error: --restarts must be >= 1", file=sys.stderr)
        return EXIT_ARGS
    try:
        with log_base(args.log_base):
            return args.func(args)
    except (ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InvalidRange, InvalidParameter, UnknownGenerator) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_ARGS
    except PartitionViolation as exc:
        print(f"numerical fault: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
