import numpy as np
import pytest

from magiclab.pauli import weyl_operator
from magiclab.wigner import (
    mana,
    mana_lr_check,
    negativity_robustness_check,
    phase_point_operator,
    phase_space_points,
    point_index,
    reconstruct_density,
    sum_negativity,
    wigner_csv,
    wigner_function,
)

from conftest import random_state


def test_point_operators_single_qutrit():
    for u in phase_space_points(1):
        A = phase_point_operator(u, 1)
        assert np.allclose(A, A.conj().T)
        assert abs(np.trace(A) - 1) < 1e-12
        assert np.allclose(np.abs(np.linalg.eigvalsh(A)), 1, atol=1e-12)


def test_a0_is_average_of_displacements():
    A0 = phase_point_operator((0, 0), 1)
    total = sum(
        weyl_operator(1, (a1,), (a2,)).dense()
        for a1 in range(3)
        for a2 in range(3)
    )
    assert np.allclose(A0, total / 3)


def test_displacement_z_convention():
    omega = np.exp(2j * np.pi / 3)
    assert np.allclose(
        weyl_operator(1, (1,), (0,)).dense(), np.diag([1, omega, omega**2])
    )


def test_point_index_order():
    pts = list(phase_space_points(2))
    assert len(pts) == 81
    assert sorted(point_index(u) for u in pts) == list(range(81))


def test_wigner_maximally_mixed():
    for n in (1, 2):
        W = wigner_function(np.eye(3**n, dtype=complex) / 3**n)
        assert np.allclose(W.values, 9.0**-n)


def test_wigner_normalization_and_reconstruction():
    rng = np.random.default_rng(0)
    for n in (1, 2):
        psi = random_state(3**n, rng)
        W = wigner_function(psi)
        assert abs(np.sum(W.values) - 1) < 1e-10
        rho = np.outer(psi, psi.conj())
        assert np.max(np.abs(reconstruct_density(W) - rho)) < 1e-10


def test_wigner_rejects_non_hermitian():
    with pytest.raises(ValueError):
        wigner_function(np.array([[0, 1], [0, 0]], dtype=complex))


def test_hudson_direction_on_stabilizers(dict3_1, dict3_2):
    for dic in (dict3_1, dict3_2):
        for i in range(0, dic.size, max(1, dic.size // 40)):
            W = wigner_function(dic.state(i))
            assert W.values.min() > -1e-12
            assert mana(W) < 1e-10


def test_covariance_under_displacement():
    rng = np.random.default_rng(1)
    psi = random_state(3, rng)
    rho = np.outer(psi, psi.conj())
    W = wigner_function(rho)
    for v in ((1, 0), (2, 1)):
        T = weyl_operator(1, (v[0],), (v[1],)).dense()
        W2 = wigner_function(T @ rho @ T.conj().T)
        for u in phase_space_points(1):
            shifted = ((u[0] - v[0]) % 3, (u[1] - v[1]) % 3)
            assert abs(W2.values[point_index(u)] - W.values[point_index(shifted)]) < 1e-10


def test_negativity_and_mana_zero_iff_nonneg(dict3_1):
    W = wigner_function(dict3_1.state(0))
    assert sum_negativity(W) < 1e-12
    assert mana(W) < 1e-12
    strange = np.array([0, 1, -1], dtype=complex) / np.sqrt(2)
    Ws = wigner_function(strange)
    assert sum_negativity(Ws) > 0.3  # maximally negative single-qutrit state
    assert mana(Ws) > 0.7


def test_negativity_below_robustness(dict3_1):
    rng = np.random.default_rng(2)
    for _ in range(8):
        psi = random_state(3, rng)
        ok, neg, r = negativity_robustness_check(psi, dict3_1)
        assert ok


def test_mana_lr_check(dict3_1, dict3_2):
    rng = np.random.default_rng(3)
    for _ in range(4):
        ok, m, lr = mana_lr_check(random_state(3, rng), dict3_1)
        assert ok
    ok, m, lr = mana_lr_check(random_state(9, rng), dict3_2)
    assert ok
    # stabilizer state: 0 < 0 + 1
    ok, m, lr = mana_lr_check(dict3_1.state(4), dict3_1)
    assert ok and m < 1e-10 and lr < 1e-9


def test_wigner_csv_shape():
    W = wigner_function(np.eye(3, dtype=complex) / 3)
    lines = wigner_csv(W).strip().splitlines()
    assert lines[0] == "index,a1_1,a2_1,value"
    assert len(lines) == 10
    assert lines[1].startswith("0,0,0,")
