import numpy as np
from hypothesis import given

from cohdist import linalg
from cohdist.coherence import MeasurementSide, rel_ent_coherence
from cohdist.correlations import (
    classical_correlation,
    dephased_holevo,
    discord,
    discord_report,
    entropy_table,
    holevo,
    mutual_information,
)
from cohdist.states import (
    KET_MINUS,
    KET_PLUS,
    BipartiteState,
    DensityMatrix,
    Ensemble,
    bell_state,
    conditional_ensemble,
    dephase_side,
    intro_example_state,
    partial_trace,
    product_state,
    random_density_matrix,
    random_ensemble,
)
from tests.strategies import bipartite_states

PLUS = np.outer(KET_PLUS, KET_PLUS)
MINUS = np.outer(KET_MINUS, KET_MINUS)
ZERO, ONE = np.diag([1.0, 0]), np.diag([0, 1.0])


def test_mutual_information_values(rng):
    prod = product_state(random_density_matrix(2, rng), random_density_matrix(3, rng))
    assert abs(mutual_information(prod)) < 1e-9
    assert abs(mutual_information(bell_state()) - 2) < 1e-12
    # S_A + S_B - S_AB = 1 + 1 - 1
    assert abs(mutual_information(intro_example_state()) - 1) < 1e-12


@given(bipartite_states())
def test_mutual_information_bounds(rho):
    i = mutual_information(rho)
    assert -1e-9 <= i <= 2 * min(np.log2(rho.dim_a), np.log2(rho.dim_b)) + 1e-9


def test_intro_state_entropies():
    t = entropy_table(intro_example_state())
    assert abs(t.ab - 1) < 1e-12
    assert abs(t.a_bt - 1) < 1e-12
    assert abs(t.at_b - 2) < 1e-12
    assert abs(t.at_bt - 2) < 1e-12


def test_intro_state_discord():
    # S_B - S_AB - S_B~ + S_AB~ = 1 - 1 - 1 + 1 and S_A - S_AB - S_A~ + S_A~B = 1 - 1 - 1 + 2
    s = intro_example_state()
    assert abs(discord(s, MeasurementSide.ON_B) - 0) < 1e-12
    assert abs(discord(s, MeasurementSide.ON_A) - 1) < 1e-12
    assert abs(discord(s, MeasurementSide.BOTH) - 1) < 1e-12


def test_discord_zero_for_classical_state(rng):
    diag = np.diag(rng.dirichlet(np.ones(6)))
    s = BipartiteState(DensityMatrix(diag), 2, 3)
    for side in MeasurementSide:
        assert abs(discord(s, side)) < 1e-12


def test_bell_bilateral_discord():
    assert abs(discord(bell_state(), MeasurementSide.BOTH) - 1) < 1e-12


@given(bipartite_states())
def test_discord_report_invariants(rho):
    r = discord_report(rho)
    for d in (r.discord_left, r.discord_right, r.discord_both):
        assert d >= -1e-9
    assert r.discord_both >= max(r.discord_left, r.discord_right) - 1e-9
    assert abs(r.discord_left - (r.mutual_info - r.classical_left)) < 1e-9
    assert abs(r.discord_both - (r.mutual_info - r.classical_both)) < 1e-9


def test_classical_correlation_values(rng):
    prod = product_state(random_density_matrix(2, rng), random_density_matrix(2, rng))
    assert abs(classical_correlation(prod, "left")) < 1e-9
    assert abs(classical_correlation(prod, "both")) < 1e-9
    assert abs(classical_correlation(bell_state(), "left") - 1) < 1e-12


@given(bipartite_states())
def test_classical_correlation_matches_entropy_definition(rho):
    r = discord_report(rho)
    assert abs(classical_correlation(rho, "left") - r.classical_left) < 1e-9
    assert abs(classical_correlation(rho, "both") - r.classical_both) < 1e-9


@given(bipartite_states())
def test_average_conditional_coherence_gap(rho):
    ens = conditional_ensemble(rho, "B")
    lhs = sum(p * rel_ent_coherence(s) for p, s in ens) - rel_ent_coherence(partial_trace(rho, "A"))
    rhs = discord(rho, MeasurementSide.BOTH) - discord(rho, MeasurementSide.ON_B)
    assert abs(lhs - rhs) < 1e-9


@given(bipartite_states())
def test_bilateral_discord_splits(rho):
    b_dephased = dephase_side(rho, "B")
    a_dephased = dephase_side(rho, "A")
    both = discord(rho, MeasurementSide.BOTH)
    split_1 = discord(rho, MeasurementSide.ON_B) + discord(b_dephased, MeasurementSide.ON_A)
    split_2 = discord(rho, MeasurementSide.ON_A) + discord(a_dephased, MeasurementSide.ON_B)
    assert abs(both - split_1) < 1e-9
    assert abs(both - split_2) < 1e-9


def test_holevo_values():
    assert abs(holevo(Ensemble((0.5, 0.5), (ZERO, ONE))) - 1) < 1e-12
    assert abs(holevo(Ensemble((1.0,), (PLUS,)))) < 1e-12
    assert abs(holevo(Ensemble((0.5, 0.5), (PLUS, MINUS))) - 1) < 1e-12


def test_dephased_holevo_values(rng):
    assert abs(dephased_holevo(Ensemble((0.5, 0.5), (PLUS, MINUS)))) < 1e-12
    assert abs(dephased_holevo(Ensemble((0.5, 0.5), (ZERO, ONE))) - 1) < 1e-12
    probs = tuple(rng.dirichlet(np.ones(3)))
    diag = tuple(np.diag(rng.dirichlet(np.ones(3))) for _ in range(3))
    e = Ensemble(probs, diag)
    assert abs(dephased_holevo(e) - holevo(e)) < 1e-12


def test_holevo_bounds(rng):
    for _ in range(100):
        e = random_ensemble(int(rng.integers(2, 6)), int(rng.integers(2, 5)), rng)
        chi = holevo(e)
        assert -1e-9 <= chi <= linalg.von_neumann_entropy(e.mixture) + 1e-9
        assert dephased_holevo(e) >= -1e-9
