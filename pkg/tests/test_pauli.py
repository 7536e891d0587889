import itertools

import numpy as np
import pytest

from magiclab.pauli import (
    InconsistentTableauError,
    PauliOperator,
    StabilizerTableau,
    canonical_tableau,
    hermitian_pauli,
    is_hermitian_involution,
    mub_partition,
    pauli_commutes,
    pauli_from_string,
    pauli_to_string,
    tableau_to_state,
    weyl_operator,
)


def test_commutation_examples():
    X1 = pauli_from_string("XI")
    X2 = pauli_from_string("IX")
    assert pauli_commutes(X1, X2)
    assert not pauli_commutes(pauli_from_string("X"), pauli_from_string("Z"))
    assert pauli_commutes(pauli_from_string("XX"), pauli_from_string("ZZ"))


def test_commutation_dimension_mismatch():
    with pytest.raises(ValueError):
        pauli_commutes(pauli_from_string("X"), pauli_from_string("XX"))


def test_string_round_trip_qubits():
    for text in ("+XIZ", "-iYY", "IZ", "-XY", "+iZZI"):
        P = pauli_from_string(text)
        assert pauli_from_string(pauli_to_string(P)) == P


def test_string_round_trip_qutrits():
    for text in ("X2Z1", "w1X1Z0X0Z2", "w2X0Z1"):
        P = pauli_from_string(text, d=3)
        assert pauli_from_string(pauli_to_string(P), d=3) == P


def test_qubit_matrices():
    X = pauli_from_string("X").dense()
    Y = pauli_from_string("Y").dense()
    Z = pauli_from_string("Z").dense()
    assert np.allclose(X, [[0, 1], [1, 0]])
    assert np.allclose(Y, [[0, -1j], [1j, 0]])
    assert np.allclose(Z, [[1, 0], [0, -1]])


def test_multiplication_matches_dense():
    rng = np.random.default_rng(0)
    for d, n in ((2, 2), (2, 3), (3, 1), (3, 2)):
        for _ in range(10):
            def rand_pauli():
                x = tuple(int(v) for v in rng.integers(0, d, n))
                z = tuple(int(v) for v in rng.integers(0, d, n))
                t = int(rng.integers(0, 2 * d))
                return PauliOperator(n, d, x, z, t)

            P, Q = rand_pauli(), rand_pauli()
            assert np.allclose((P * Q).dense(), P.dense() @ Q.dense(), atol=1e-12)
            assert np.allclose(P.dagger().dense(), P.dense().conj().T, atol=1e-12)


def test_weyl_phase_convention():
    # Z-displacement with no X component carries no phase twist
    Z = weyl_operator(1, (1,), (0,))
    omega = np.exp(2j * np.pi / 3)
    assert np.allclose(Z.dense(), np.diag([1, omega, omega**2]))
    # group law T_u T_v = omega^{<u,v>/2} T_{u+v} on commuting pairs
    T1 = weyl_operator(1, (1,), (1,))
    assert np.allclose((T1 * T1).dense(), weyl_operator(1, (2,), (2,)).dense())


def test_hermitian_involution_flags():
    assert is_hermitian_involution(pauli_from_string("Y"))
    assert is_hermitian_involution(hermitian_pauli(2, (1, 0), (1, 1)))
    assert not is_hermitian_involution(pauli_from_string("iX"))


def test_tableau_basic_states():
    t = StabilizerTableau(2, 2, (pauli_from_string("ZI"), pauli_from_string("IZ")))
    assert np.allclose(tableau_to_state(t), [1, 0, 0, 0])
    t = StabilizerTableau(1, 2, (pauli_from_string("X"),))
    assert np.allclose(tableau_to_state(t), [2**-0.5, 2**-0.5])
    t = StabilizerTableau(2, 2, (pauli_from_string("XX"), pauli_from_string("ZZ")))
    bell = tableau_to_state(t)
    assert np.allclose(bell, [2**-0.5, 0, 0, 2**-0.5])


def test_tableau_eigenequations_random(dict2_3):
    rng = np.random.default_rng(5)
    for i in rng.integers(0, dict2_3.size, 25):
        tab = dict2_3.tableau(int(i))
        psi = tableau_to_state(tab)
        for g in tab.generators:
            assert np.linalg.norm(g.apply(psi) - psi) < 1e-12
        assert abs(np.linalg.norm(psi) - 1) < 1e-12


def test_tableau_rejects_non_commuting():
    with pytest.raises(ValueError):
        StabilizerTableau(1, 2, (pauli_from_string("X"),)).generators
        StabilizerTableau(2, 2, (pauli_from_string("XI"), pauli_from_string("ZI")))


def test_tableau_rejects_minus_identity_group():
    # <iZ> squares to -I
    bad = PauliOperator(1, 2, (0,), (1,), 1)
    with pytest.raises(InconsistentTableauError):
        tableau_to_state(StabilizerTableau(1, 2, (bad,)))


def test_tableau_rejects_dependent_generators():
    g1 = pauli_from_string("ZI")
    g2 = pauli_from_string("ZI")
    with pytest.raises(InconsistentTableauError):
        tableau_to_state(StabilizerTableau(2, 2, (g1, g2)))


def test_canonicalization_invariant_under_presentation(dict2_2):
    rng = np.random.default_rng(11)
    for i in rng.integers(0, dict2_2.size, 20):
        tab = dict2_2.tableau(int(i))
        g1, g2 = tab.generators
        # same group, different presentation
        shuffled = StabilizerTableau(2, 2, (g2, g1 * g2))
        assert canonical_tableau(shuffled).generators == tab.generators


def test_group_vectors_size(dict2_2, dict3_1):
    for dic in (dict2_2, dict3_1):
        tab = dic.tableau(7)
        assert len(tab.group_vectors()) == dic.d**dic.n


@pytest.mark.parametrize("n", [1, 2, 3])
def test_mub_partition_covers(n):
    part = mub_partition(n)
    assert len(part) == 2**n + 1
    seen = set()
    ident = tuple([0] * (2 * n))
    for tab in part:
        group = tab.group_vectors()
        group.discard(ident)
        assert len(group) == 2**n - 1  # maximal abelian, phases quotiented
        assert not (seen & group)
        seen |= group
    assert len(seen) == 4**n - 1


def test_mub_partition_n1_is_xyz():
    part = mub_partition(1)
    strings = {pauli_to_string(tab.generators[0]).lstrip("+") for tab in part}
    assert strings == {"X", "Y", "Z"}


def test_mub_states_are_unbiased():
    # joint eigenstates drawn from different subgroups have |<a|b>|^2 = 1/2^n
    for n in (1, 2):
        part = mub_partition(n)
        states = [tableau_to_state(tab) for tab in part[: 3]]
        for a, b in itertools.combinations(states, 2):
            assert abs(abs(np.vdot(a, b)) ** 2 - 2.0**-n) < 1e-12


def test_mub_partition_range():
    with pytest.raises(ValueError):
        mub_partition(6)


def test_apply_matches_dense():
    rng = np.random.default_rng(2)
    for d, n in ((2, 3), (3, 2)):
        x = tuple(int(v) for v in rng.integers(0, d, n))
        z = tuple(int(v) for v in rng.integers(0, d, n))
        P = PauliOperator(n, d, x, z, int(rng.integers(0, 2 * d)))
        v = rng.normal(size=d**n) + 1j * rng.normal(size=d**n)
        assert np.allclose(P.apply(v), P.dense() @ v, atol=1e-12)
