import math

import numpy as np
import pytest

from magiclab.mbqc import (
    MeasurementLayout,
    outcome_distribution,
    pbound_check,
    planted_verifier,
    randomized_search,
    search_repetition_bound,
)
from magiclab.measures import dmin
from magiclab.pauli import PauliOperator, pauli_from_string

from conftest import random_state


def layout_of(n, *strings):
    return MeasurementLayout(n, tuple(pauli_from_string(s) for s in strings))


def test_layout_validation():
    with pytest.raises(ValueError):
        layout_of(2, "XI", "ZI")  # anticommuting
    with pytest.raises(ValueError):
        layout_of(2, "XX", "XX")  # dependent
    with pytest.raises(ValueError):
        MeasurementLayout(1, (PauliOperator(1, 2, (1,), (0,), 1),))  # iX not Hermitian
    with pytest.raises(ValueError):
        layout_of(2, "II", "ZZ")  # identity observable


def test_uniform_distribution_on_plus_layouts():
    e = np.zeros(8, dtype=complex)
    e[0] = 1.0
    for k in (1, 2, 3):
        obs = ["X" + "I" * 2, "IXI", "IIX"][:k]
        dist = outcome_distribution(e, layout_of(3, *obs))
        assert np.allclose(dist.probabilities, 2.0**-k)


def test_deterministic_z_outcome():
    e = np.zeros(4, dtype=complex)
    e[0] = 1.0
    dist = outcome_distribution(e, layout_of(2, "ZI"))
    assert abs(dist.probabilities[0] - 1.0) < 1e-12


def test_bell_state_joint_outcome():
    bell = np.zeros(4, dtype=complex)
    bell[0] = bell[3] = 2**-0.5
    dist = outcome_distribution(bell, layout_of(2, "XX", "ZZ"))
    assert abs(dist.probabilities[0] - 1.0) < 1e-12
    assert np.max(dist.probabilities[1:]) < 1e-12


def test_order_independence():
    rng = np.random.default_rng(0)
    psi = random_state(8, rng)
    a = outcome_distribution(psi, layout_of(3, "ZII", "IZI", "IIZ")).probabilities
    b = outcome_distribution(psi, layout_of(3, "IIZ", "ZII", "IZI")).probabilities
    # permuting the observables permutes the outcome bits: in the second
    # layout Z3 is measured first, so its bit moves to position 0
    remap = np.zeros_like(a)
    for y in range(8):
        y2 = ((y >> 2) & 1) | ((y & 1) << 1) | (((y >> 1) & 1) << 2)
        remap[y] = b[y2]
    assert np.allclose(a, remap, atol=1e-10)


def test_joint_entangled_layout_k_less_n():
    rng = np.random.default_rng(1)
    psi = random_state(8, rng)
    dist = outcome_distribution(psi, layout_of(3, "XXI", "ZZI"))
    assert abs(np.sum(dist.probabilities) - 1.0) < 1e-10
    assert dist.probabilities.shape == (4,)


def test_pbound_ccz(dict2_3, ccz_state):
    value, _ = dmin(ccz_state, dict2_3)
    ok, max_p, bound = pbound_check(ccz_state, layout_of(3, "ZII", "IZI", "IIZ"), value)
    assert ok
    assert bound == pytest.approx(9 / 16)
    assert max_p * 8 >= 1.0 - 1e-9  # cap consistency: max p 2^k >= 1


def test_pbound_trivial_for_stabilizer(dict2_2):
    psi = dict2_2.state(3)
    ok, max_p, bound = pbound_check(psi, layout_of(2, "ZI"), 0.0)
    assert ok and bound == pytest.approx(2.0)


def test_search_accepts_immediately():
    rng = np.random.default_rng(2)
    res = randomized_search(lambda y: True, 5, 10, rng)
    assert res.success and res.repetitions == 1


def test_search_budget_exhaustion():
    rng = np.random.default_rng(3)
    res = randomized_search(lambda y: False, 3, 17, rng)
    assert not res.success and res.repetitions == 17 and res.accepted is None


def test_search_median_with_half_planted():
    rng = np.random.default_rng(4)
    verifier = planted_verifier(4, set(range(8)))
    reps = [randomized_search(verifier, 4, 1000, rng).repetitions for _ in range(1000)]
    assert np.median(reps) <= 2


def test_search_success_rate_matches_fraction():
    rng = np.random.default_rng(5)
    k, good = 6, set(range(13))
    p = len(good) / 2**k
    trials = 4000
    hits = sum(randomized_search(planted_verifier(k, good), k, 1, rng).success for _ in range(trials))
    sigma = math.sqrt(p * (1 - p) / trials)
    assert abs(hits / trials - p) < 3 * sigma


def test_repetition_bound_value():
    assert search_repetition_bound(3, math.log2(16 / 9)) == pytest.approx(
        3 * math.log2(3) * 4 * (9 / 16)
    )
    assert search_repetition_bound(3, math.log2(16 / 9)) == pytest.approx(10.6985, abs=1e-4)
