"""Accessible coherence of assistance for a few random qubit and qutrit states.

Compares the optimized value with the eigen-ensemble value and, for the
relative entropy, the S(rho) upper bound.
"""
import argparse

import numpy as np

from cohdist.distribution import ensemble_accessible_coherence
from cohdist.ensemble_search import eigen_ensemble, max_accessible_coherence
from cohdist.states import random_density_matrix


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--states", type=int, default=4)
    ap.add_argument("--restarts", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    print(f"{'dim':>3} {'measure':>7} {'eigen':>9} {'best':>9} {'bound':>9}")
    for i in range(args.states):
        rho = random_density_matrix(2 + i % 2, rng)
        for measure in ("l1", "rel"):
            res = max_accessible_coherence(rho, measure, restarts=args.restarts, seed=args.seed + i)
            eig = ensemble_accessible_coherence(eigen_ensemble(rho), measure)
            print(f"{rho.dim:>3} {measure:>7} {eig:9.5f} {res.best_value:9.5f} {res.upper_bound:9.5f}")


if __name__ == "__main__":
    main()
