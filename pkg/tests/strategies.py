"""Shared hypothesis strategies: seeds mapped to random states."""
import numpy as np
from hypothesis import strategies as st

from cohdist.states import random_bipartite, random_density_matrix, random_ensemble

seeds = st.integers(min_value=0, max_value=2**32 - 1)
bipartite_dims = st.sampled_from([(2, 2), (2, 3), (3, 2), (3, 3)])


@st.composite
def bipartite_states(draw, dims=bipartite_dims):
    da, db = draw(dims)
    return random_bipartite(da, db, np.random.default_rng(draw(seeds)))


@st.composite
def density_matrices(draw, dims=st.integers(2, 4)):
    return random_density_matrix(draw(dims), np.random.default_rng(draw(seeds)))


@st.composite
def ensembles(draw, sizes=st.integers(2, 5), dims=st.integers(2, 4)):
    return random_ensemble(draw(sizes), draw(dims), np.random.default_rng(draw(seeds)))
