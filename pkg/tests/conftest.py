import numpy as np
import pytest

from magiclab.boolfn import hypergraph_state, parse_anf
from magiclab.measures import golden_state
from magiclab.stabdict import enumerate_stabilizer_states


@pytest.fixture(scope="session")
def dict2_1():
    return enumerate_stabilizer_states(1, 2)


@pytest.fixture(scope="session")
def dict2_2():
    return enumerate_stabilizer_states(2, 2)


@pytest.fixture(scope="session")
def dict2_3():
    return enumerate_stabilizer_states(3, 2)


@pytest.fixture(scope="session")
def dict2_4():
    return enumerate_stabilizer_states(4, 2)


@pytest.fixture(scope="session")
def dict3_1():
    return enumerate_stabilizer_states(1, 3)


@pytest.fixture(scope="session")
def dict3_2():
    return enumerate_stabilizer_states(2, 3)


@pytest.fixture(scope="session")
def golden():
    return golden_state()


@pytest.fixture(scope="session")
def ccz_state():
    return hypergraph_state(parse_anf("x1*x2*x3"))


@pytest.fixture(scope="session")
def single_qubit_cliffords():
    """The 24 single-qubit Clifford unitaries (up to global phase)."""
    H = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
    S = np.diag([1, 1j])
    seen = {}
    frontier = [np.eye(2, dtype=complex)]
    while frontier:
        U = frontier.pop()
        # phase-canonical key: first significant entry made real positive
        flat = U.flatten()
        pivot = flat[np.argmax(np.abs(flat) > 1e-9)]
        key = tuple(np.round(flat / (pivot / abs(pivot)), 9))
        if key in seen:
            continue
        seen[key] = U
        frontier.extend([U @ H, U @ S])
    assert len(seen) == 24
    return list(seen.values())


def random_state(dim: int, rng) -> np.ndarray:
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)
