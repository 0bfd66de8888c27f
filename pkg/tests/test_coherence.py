import numpy as np
import pytest
from hypothesis import given

from cohdist.coherence import (
    MeasureKind,
    MeasurementSide,
    bipartite_rel_coherence,
    coherence,
    l1_coherence,
    rel_ent_coherence,
)
from cohdist.states import (
    KET_PLUS,
    BipartiteState,
    DensityMatrix,
    bell_state,
    dephase,
    intro_example_state,
    partial_trace,
    product_state,
    random_density_matrix,
)
from cohdist.correlations import discord
from cohdist import linalg
from tests.strategies import bipartite_states, density_matrices, ensembles

PLUS = np.outer(KET_PLUS, KET_PLUS)


def quantum_incoherent(rng, dim_a=2, dim_b=3):
    p = rng.dirichlet(np.ones(dim_b))
    mat = sum(
        p[i] * np.kron(random_density_matrix(dim_a, rng).mat, np.diag(np.eye(dim_b)[i]))
        for i in range(dim_b)
    )
    return BipartiteState(DensityMatrix(mat), dim_a, dim_b)


def test_l1_values():
    assert abs(l1_coherence(PLUS) - 1) < 1e-15
    assert l1_coherence(np.diag([0.3, 0.7])) == 0
    # four off-diagonal entries of modulus 1/4
    assert abs(l1_coherence(intro_example_state().mat) - 1) < 1e-15


def test_l1_uses_complex_modulus():
    psi = np.array([1, 1j]) / np.sqrt(2)
    assert abs(l1_coherence(np.outer(psi, psi.conj())) - 1) < 1e-15


@given(density_matrices())
def test_l1_zero_iff_diagonal(rho):
    assert l1_coherence(rho) > 0
    assert l1_coherence(dephase(rho)) == 0


def test_rel_ent_values():
    assert abs(rel_ent_coherence(PLUS) - 1) < 1e-12
    assert abs(rel_ent_coherence(bell_state().mat) - 1) < 1e-12
    assert abs(rel_ent_coherence(np.diag([0.1, 0.2, 0.7]))) < 1e-15


@given(density_matrices())
def test_rel_ent_matches_relative_entropy_to_dephased(rho):
    c = rel_ent_coherence(rho)
    assert c >= -1e-9
    assert abs(c - linalg.relative_entropy(rho, dephase(rho))) < 1e-9


@pytest.mark.parametrize("measure", list(MeasureKind))
@given(ens=ensembles())
def test_coherence_nonincreasing_under_mixing(measure, ens):
    avg = sum(p * coherence(s, measure) for p, s in ens)
    assert coherence(ens.mixture, measure) <= avg + 1e-9


@given(bipartite_states())
def test_bilateral_equals_joint_coherence(rho):
    assert abs(bipartite_rel_coherence(rho, MeasurementSide.BOTH) - rel_ent_coherence(rho.mat)) < 1e-9
    for side in MeasurementSide:
        assert bipartite_rel_coherence(rho, side) >= -1e-9


def test_quantum_incoherent_has_no_b_side_coherence(rng):
    for _ in range(20):
        s = quantum_incoherent(rng)
        assert abs(bipartite_rel_coherence(s, MeasurementSide.ON_B)) < 1e-9


def test_incoherent_product_all_sides_zero(rng):
    s = product_state(np.diag([0.3, 0.7]), np.diag([0.2, 0.5, 0.3]))
    for side in MeasurementSide:
        assert abs(bipartite_rel_coherence(s, side)) < 1e-12


@given(bipartite_states())
def test_unilateral_coherence_splits_into_local_plus_discord(rho):
    c_b = rel_ent_coherence(partial_trace(rho, "B"))
    c_a = rel_ent_coherence(partial_trace(rho, "A"))
    left = bipartite_rel_coherence(rho, MeasurementSide.ON_B)
    right = bipartite_rel_coherence(rho, MeasurementSide.ON_A)
    both = bipartite_rel_coherence(rho, MeasurementSide.BOTH)
    assert abs(left - (c_b + discord(rho, MeasurementSide.ON_B))) < 1e-9
    assert abs(right - (c_a + discord(rho, MeasurementSide.ON_A))) < 1e-9
    assert abs(both - (c_a + c_b + discord(rho, MeasurementSide.BOTH))) < 1e-9


def test_measure_kind_parse():
    assert MeasureKind.parse("L1") is MeasureKind.L1
    assert MeasureKind.parse("rel") is MeasureKind.RELATIVE_ENTROPY
    with pytest.raises(ValueError):
        MeasureKind.parse("robustness")
