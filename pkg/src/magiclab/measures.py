"""Magic monotones over an explicit stabilizer dictionary.

Measures computed here, all in bits (base-2 logs):

* ``dmin``      min-relative entropy of magic; for pure states
                -log2 max_phi |<psi|phi>|^2, for mixed states the support
                projector replaces the rank-one projector.
* ``extent``    squared minimal complex l1 norm of a pure-state stabilizer
                decomposition; its log is the max-relative entropy of magic.
* ``free_robustness``
                minimal s with rho = (1+s) sigma - s sigma' over stabilizer
                mixtures; the optimal pseudomixture has l1 mass 1 + 2s, and
                the LP dual provides an operator witness A with
                |Tr phi A| <= 1 on the dictionary and Tr rho A = 1 + 2s.

Every report validates the sandwich dmin <= dmax <= log2(1 + R) within the
stated tolerance before it is returned.
"""

import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from . import __version__
from .pauli import hermitian_pauli, pauli_to_string
from .solvers import (
    BasisPursuitProblem,
    LinearProgram,
    SolverError,
    solve_basis_pursuit,
    solve_lp,
)
from .stabdict import StabilizerDictionary

TOLERANCES = {
    "lp": 1e-9,
    "bp_residual": 1e-8,
    "bp_gap": 1e-6,
    "chain": 1e-5,
    "reconstruction": 1e-8,
    "support_eigenvalue": 1e-10,
}


def golden_state() -> np.ndarray:
    """Single-qubit pure state with Bloch vector (1,1,1)/sqrt(3), the
    maximally magical product-state direction."""
    theta = math.acos(1.0 / math.sqrt(3.0))
    return np.array(
        [math.cos(theta / 2), np.exp(1j * np.pi / 4) * math.sin(theta / 2)]
    )


def _is_density_matrix(state: np.ndarray) -> bool:
    return state.ndim == 2


def dmin(state: np.ndarray, dic: StabilizerDictionary) -> tuple[float, int]:
    """Min-relative entropy of magic and the index of the best dictionary state.

    Ties break toward the lowest dictionary index.
    """
    state = np.asarray(state, dtype=complex)
    dim = dic.d**dic.n
    if state.shape[0] != dim:
        raise ValueError("state dimension does not match the dictionary")
    if _is_density_matrix(state):
        vals, vecs = np.linalg.eigh(state)
        support = vecs[:, vals > TOLERANCES["support_eigenvalue"]]
        overlaps = np.sum(np.abs(support.conj().T @ dic.states) ** 2, axis=0)
    else:
        overlaps = np.abs(dic.overlaps(state)) ** 2
    best = int(np.argmax(overlaps))
    fidelity = float(overlaps[best])
    return -math.log2(fidelity), best


def stabilizer_fidelity(psi: np.ndarray, dic: StabilizerDictionary) -> float:
    """Best stabilizer overlap squared; equals 2**(-dmin)."""
    value, _ = dmin(psi, dic)
    return 2.0**-value


@dataclass
class ExtentResult:
    xi: float
    dmax: float
    coefficients: np.ndarray
    diagnostics: dict


def extent(psi: np.ndarray, dic: StabilizerDictionary, **solver_kwargs) -> ExtentResult:
    """Stabilizer extent of a pure state via certified basis pursuit."""
    psi = np.asarray(psi, dtype=complex)
    if _is_density_matrix(psi):
        raise ValueError("extent is defined here for pure states only")
    bp = solve_basis_pursuit(
        BasisPursuitProblem(dic.states, psi), **solver_kwargs
    )
    xi = bp.l1**2
    return ExtentResult(
        xi=xi,
        dmax=math.log2(xi),
        coefficients=bp.coefficients,
        diagnostics={
            "iterations": bp.iterations,
            "l1_gap": bp.gap,
            "primal_residual": bp.primal_residual,
            "dual_residual": bp.dual_residual,
            "lower_bound": bp.lower_bound,
        },
    )


def _qubit_expectation_rows(dic: StabilizerDictionary):
    """Real Pauli expectations Tr(phi P) for every Pauli, one row per (x, z)."""
    n, d = dic.n, dic.d
    dim = d**n
    D = dic.states
    idx = np.arange(dim)
    labels = []
    rows = np.empty((4**n, D.shape[1]))
    r = 0
    for xm in range(dim):
        for zm in range(dim):
            P = hermitian_pauli(
                n,
                tuple((xm >> i) & 1 for i in range(n)),
                tuple((zm >> i) & 1 for i in range(n)),
            )
            PD = P.apply(D)
            rows[r] = np.real(np.einsum("ij,ij->j", D.conj(), PD))
            labels.append(pauli_to_string(P))
            r += 1
    return rows, labels


def _qubit_state_expectations(rho: np.ndarray, n: int):
    out = np.empty(4**n)
    r = 0
    for xm in range(2**n):
        for zm in range(2**n):
            P = hermitian_pauli(
                n,
                tuple((xm >> i) & 1 for i in range(n)),
                tuple((zm >> i) & 1 for i in range(n)),
            )
            out[r] = float(np.real(np.trace(rho @ P.dense())))
            r += 1
    return out


def _hermitian_entry_rows(dic: StabilizerDictionary):
    """Real coordinates of each projector in the Hermitian entry basis
    (diagonal, then real and imaginary parts of the upper triangle)."""
    dim = dic.d**dic.n
    D = dic.states
    N = D.shape[1]
    rows = []
    labels = []
    outer = np.einsum("ik,jk->kij", D, D.conj())  # (N, dim, dim)
    for i in range(dim):
        rows.append(np.real(outer[:, i, i]))
        labels.append(f"re[{i},{i}]")
    for i in range(dim):
        for j in range(i + 1, dim):
            rows.append(np.real(outer[:, i, j]))
            labels.append(f"re[{i},{j}]")
            rows.append(np.imag(outer[:, i, j]))
            labels.append(f"im[{i},{j}]")
    return np.array(rows), labels


def _hermitian_entry_vector(rho: np.ndarray):
    dim = rho.shape[0]
    out = [float(np.real(rho[i, i])) for i in range(dim)]
    for i in range(dim):
        for j in range(i + 1, dim):
            out.append(float(np.real(rho[i, j])))
            out.append(float(np.imag(rho[i, j])))
    return np.array(out)


@dataclass
class RobustnessResult:
    r: float
    lr: float
    l1: float
    pseudomixture: list[tuple[int, float]]
    witness: list[tuple[str, float]]
    diagnostics: dict


def free_robustness(
    state: np.ndarray, dic: StabilizerDictionary, tol: float = TOLERANCES["lp"]
) -> RobustnessResult:
    """Free robustness via the pseudomixture LP min ||c||_1, sum c_phi phi = rho.

    The optimum splits as (1 + R) - R, so ||c||_1 = 1 + 2R.  The dual vector
    defines a witness operator A (returned in the constraint basis) with
    |Tr phi A| <= 1 for every dictionary state and Tr rho A = ||c||_1.
    """
    state = np.asarray(state, dtype=complex)
    rho = np.outer(state, state.conj()) if not _is_density_matrix(state) else state
    if not np.allclose(rho, rho.conj().T, atol=1e-10):
        raise ValueError("density matrix must be Hermitian")
    if abs(np.trace(rho) - 1.0) > 1e-9:
        raise ValueError("density matrix must have unit trace")
    if dic.d == 2:
        A, labels = _qubit_expectation_rows(dic)
        b = _qubit_state_expectations(rho, dic.n)
    else:
        A, labels = _hermitian_entry_rows(dic)
        b = _hermitian_entry_vector(rho)
    N = A.shape[1]
    prog = LinearProgram(np.ones(2 * N), np.hstack([A, -A]), b)
    sol = solve_lp(prog, tol=tol)
    if sol.status != "optimal":
        raise SolverError(f"robustness LP ended with status {sol.status}")
    coeffs = sol.x[:N] - sol.x[N:]
    l1 = float(sol.objective)
    r = (l1 - 1.0) / 2.0
    r = max(r, 0.0)
    support = [(int(j), float(coeffs[j])) for j in np.nonzero(np.abs(coeffs) > 1e-12)[0]]
    # reconstruction check on the sparse support
    rec = np.zeros_like(rho)
    for j, cj in support:
        phi = dic.state(j)
        rec += cj * np.outer(phi, phi.conj())
    rec_err = float(np.max(np.abs(rec - rho)))
    if rec_err > TOLERANCES["reconstruction"]:
        raise SolverError(f"pseudomixture reconstruction error {rec_err:.2e}")
    dual_full = np.zeros(A.shape[0])
    dual_full[sol.kept_rows] = sol.dual
    witness_feas = float(np.max(np.abs(A.T @ dual_full)))
    witness = [
        (labels[i], float(dual_full[i]))
        for i in np.nonzero(np.abs(dual_full) > 1e-12)[0]
    ]
    return RobustnessResult(
        r=r,
        lr=math.log2(1.0 + r),
        l1=l1,
        pseudomixture=support,
        witness=witness,
        diagnostics={
            "iterations": sol.iterations,
            "duality_gap": sol.gap,
            "witness_max_abs": witness_feas,
            "witness_value": float(b @ dual_full),
            "reconstruction_error": rec_err,
        },
    )


def robustness_bound_check(
    state: np.ndarray, dic: StabilizerDictionary
) -> tuple[bool, float, float]:
    """Guard R(rho) <= sqrt(2^n (2^n + 1)); returns (ok, R, bound)."""
    res = free_robustness(state, dic)
    dim = dic.d**dic.n
    bound = math.sqrt(dim * (dim + 1))
    return res.r <= bound + 1e-9, res.r, bound


def stab_rank_bound(
    psi: np.ndarray,
    dic: StabilizerDictionary,
    epsilon: float,
    xi: float | None = None,
) -> float:
    """Approximate stabilizer-rank bound 1 + xi/epsilon^2 (reported, no search)."""
    if not 0.0 < epsilon < 1.0:
        raise ValueError("epsilon must lie in (0, 1)")
    if xi is None:
        xi = extent(psi, dic).xi
    return 1.0 + xi / epsilon**2


@dataclass
class MagicReport:
    """Bundle of the computed monotones with solver diagnostics and tolerances."""

    n: int
    d: int
    dmin: float
    fidelity: float
    best_state_index: int
    dmax: float | None
    xi: float | None
    r: float | None
    lr: float | None
    l1: float | None
    pseudomixture: list[tuple[int, float]]
    witness: list[tuple[str, float]]
    diagnostics: dict
    tolerances: dict = field(default_factory=lambda: dict(TOLERANCES))
    version: str = __version__

    def validate(self):
        tol = self.tolerances["chain"]
        if self.r is not None and self.r < -1e-12:
            raise ValueError("negative robustness")
        if self.dmax is not None and self.dmin > self.dmax + tol:
            raise ValueError(
                f"measure chain violated: dmin={self.dmin} > dmax={self.dmax}"
            )
        if self.lr is not None:
            upper = self.dmax if self.dmax is not None else self.dmin
            if upper > self.lr + tol:
                raise ValueError(
                    f"measure chain violated: {upper} > lr={self.lr}"
                )
        return self

    def to_json(self, **kwargs) -> str:
        payload = asdict(self)
        payload["pseudomixture"] = [[j, c] for j, c in self.pseudomixture]
        payload["witness"] = [[lbl, c] for lbl, c in self.witness]
        return json.dumps(payload, **kwargs)


# above this dictionary size the convex solves outgrow the desk scale
SOLVER_DICTIONARY_LIMIT = 5000


def magic_report(
    state: np.ndarray,
    dic: StabilizerDictionary,
    compute_extent: bool | None = None,
    compute_robustness: bool | None = None,
) -> MagicReport:
    """Compute dmin, extent (pure states), and free robustness; validate the
    consistency sandwich dmin <= dmax <= LR before returning.

    By default the convex solves run only while the dictionary stays at desk
    scale (n <= 3 qubits / n <= 2 qutrits); pass the booleans to force either
    way.  Skipped measures are reported as None.
    """
    state = np.asarray(state, dtype=complex)
    pure = not _is_density_matrix(state)
    affordable = dic.size <= SOLVER_DICTIONARY_LIMIT
    if compute_extent is None:
        compute_extent = pure and affordable
    if compute_robustness is None:
        compute_robustness = affordable
    dmin_value, best = dmin(state, dic)
    ext = extent(state, dic) if compute_extent and pure else None
    rob = free_robustness(state, dic) if compute_robustness else None
    diagnostics = {}
    if rob is not None:
        diagnostics["robustness"] = rob.diagnostics
    if ext is not None:
        diagnostics["extent"] = ext.diagnostics
    report = MagicReport(
        n=dic.n,
        d=dic.d,
        dmin=dmin_value,
        fidelity=2.0**-dmin_value,
        best_state_index=best,
        dmax=ext.dmax if ext else None,
        xi=ext.xi if ext else None,
        r=rob.r if rob else None,
        lr=rob.lr if rob else None,
        l1=rob.l1 if rob else None,
        pseudomixture=rob.pseudomixture if rob else [],
        witness=rob.witness if rob else [],
        diagnostics=diagnostics,
    )
    return report.validate()
