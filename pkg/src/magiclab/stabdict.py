"""Exhaustive stabilizer-state enumeration, quadratic states, and the cache.

Enumeration walks canonical tableaux directly: every maximal isotropic
(Lagrangian) subspace of F_d^{2n} has a unique normal form given by a
reduced-row-echelon basis R of its X-projection plus a symmetric matrix S
fixing the Z-part lifts, and each subspace carries d^n phase characters.
No dedup pass is needed and the total matches the closed-form count
d^n * prod_k (d^{n-k} + 1) by construction.

States are built with exact integer phase arithmetic (powers of
zeta = exp(i*pi/d)), then canonicalized so the first nonzero amplitude is
real positive.
"""

import itertools
import os
import struct
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from .binlin import gfp_nullspace, gfp_rref, gfp_solve
from .boolfn import BooleanFunction, hypergraph_state, quadratic_basis
from .pauli import PauliOperator, StabilizerTableau

CACHE_MAGIC = b"MSTB"
CACHE_CONVENTION = 1

DENSE_LIMITS = {2: 4, 3: 2}
STREAM_LIMITS = {2: 5, 3: 2}


class ResourceLimitError(ValueError):
    """Requested enumeration exceeds the supported desk-scale limits."""


def count_stabilizer_states(n: int, d: int = 2) -> int:
    """Closed-form count d^n * prod_{k=0}^{n-1} (d^{n-k} + 1)."""
    if n < 1:
        raise ValueError("n must be positive")
    count = d**n
    for k in range(n):
        count *= d ** (n - k) + 1
    return count


def _rref_matrices(n: int, k: int, d: int):
    """All k x n reduced-row-echelon matrices of rank k over GF(d), lex order."""
    if k == 0:
        yield np.zeros((0, n), dtype=np.int64)
        return
    for pivots in itertools.combinations(range(n), k):
        free_pos = [
            (i, c)
            for i in range(k)
            for c in range(pivots[i] + 1, n)
            if c not in pivots
        ]
        base = np.zeros((k, n), dtype=np.int64)
        for i, p in enumerate(pivots):
            base[i, p] = 1
        for values in itertools.product(range(d), repeat=len(free_pos)):
            R = base.copy()
            for (i, c), v in zip(free_pos, values):
                R[i, c] = v
            yield R


def _symmetric_matrices(k: int, d: int):
    entries = [(i, j) for i in range(k) for j in range(i, k)]
    for values in itertools.product(range(d), repeat=len(entries)):
        S = np.zeros((k, k), dtype=np.int64)
        for (i, j), v in zip(entries, values):
            S[i, j] = v
            S[j, i] = v
        yield S


def _char_table(k: int, d: int) -> np.ndarray:
    """(d^k, d^k) table of 2 * y.eps phase offsets for all supports/characters."""
    ys = np.array(
        [[(yi // d**i) % d for i in range(k)] for yi in range(d**k)], dtype=np.int64
    )
    return ys, (2 * (ys @ ys.T)) % (2 * d)


def _iter_entries(n: int, d: int):
    """Yield (gen_x, gen_z, gen_t, psi) over all stabilizer states, in a fixed
    deterministic order (subspace dimension ascending, then lex)."""
    powers = d ** np.arange(n)
    zeta = np.exp(1j * np.pi / d)
    zeta_pow = zeta ** np.arange(2 * d)
    for k in range(n + 1):
        ys, char_tab = _char_table(k, d)
        for R in _rref_matrices(n, k, d):
            if k < n:
                znull, zpiv = gfp_rref(gfp_nullspace(R, d), d)
            else:
                znull, zpiv = np.zeros((0, n), dtype=np.int64), []
            for S in _symmetric_matrices(k, d):
                # lifts: start supported on the pivot columns of R, then make
                # them canonical by clearing the Z-block pivot columns
                lifts = np.zeros((k, n), dtype=np.int64)
                pivcols = [int(np.argmax(R[i] != 0)) for i in range(k)]
                for i in range(k):
                    for j in range(k):
                        lifts[i, pivcols[j]] = S[j, i]
                if zpiv:
                    lifts = (lifts - lifts[:, zpiv] @ znull) % d
                gen_x = np.vstack([R, np.zeros((n - k, n), dtype=np.int64)])
                gen_z = np.vstack([lifts, znull])
                if d == 2:
                    t0x = np.array(
                        [(-int(R[i] @ lifts[i])) % 4 for i in range(k)], dtype=np.int64
                    )
                else:
                    t0x = np.array(
                        [(2 * int(lifts[i] @ R[i])) % 6 for i in range(k)],
                        dtype=np.int64,
                    )
                wbase = (ys @ R) % d if k else np.zeros((1, n), dtype=np.int64)
                mag = float(d) ** (-k / 2)
                for eps_z in itertools.product(range(d), repeat=n - k):
                    if n - k:
                        w0 = gfp_solve(
                            znull, np.array([(-e) % d for e in eps_z]), d
                        )
                    else:
                        w0 = np.zeros(n, dtype=np.int64)
                    W = (w0 + wbase) % d
                    idx = W @ powers
                    e0 = np.zeros(d**k, dtype=np.int64)
                    for yi in range(1, d**k):
                        i = next(j for j in range(k) if (yi // d**j) % d)
                        prev = yi - d**i
                        e0[yi] = (
                            e0[prev] + t0x[i] + 2 * int(gen_z[i] @ W[yi])
                        ) % (2 * d)
                    anchor = int(np.argmin(idx))
                    tz = np.array([(2 * e) % (2 * d) for e in eps_z], dtype=np.int64)
                    for ci in range(d**k):
                        e = (e0 + char_tab[ci]) % (2 * d)
                        e = (e - e[anchor]) % (2 * d)
                        psi = np.zeros(d**n, dtype=complex)
                        psi[idx] = mag * zeta_pow[e]
                        gen_t = np.concatenate([(t0x + 2 * ys[ci]) % (2 * d), tz])
                        yield gen_x, gen_z, gen_t, psi


@dataclass
class StabilizerDictionary:
    """All pure stabilizer states for (n, d): canonical tableaux + dense vectors."""

    n: int
    d: int
    states: np.ndarray  # (d^n, N) complex128, columns normalized
    gen_x: np.ndarray  # (N, n, n) int8
    gen_z: np.ndarray  # (N, n, n) int8
    gen_t: np.ndarray  # (N, n) int8, zeta exponents mod 2d
    created_at: str = ""
    convention: int = CACHE_CONVENTION

    @property
    def size(self) -> int:
        return self.states.shape[1]

    def tableau(self, i: int) -> StabilizerTableau:
        gens = tuple(
            PauliOperator(
                self.n,
                self.d,
                tuple(int(v) for v in self.gen_x[i, r]),
                tuple(int(v) for v in self.gen_z[i, r]),
                int(self.gen_t[i, r]),
            )
            for r in range(self.n)
        )
        return StabilizerTableau(self.n, self.d, gens)

    def state(self, i: int) -> np.ndarray:
        return self.states[:, i]

    def overlaps(self, psi: np.ndarray) -> np.ndarray:
        """<phi_i|psi> for every dictionary state at once."""
        if psi.shape[0] != self.states.shape[0]:
            raise ValueError("state dimension mismatch")
        return self.states.conj().T @ psi


def iter_stabilizer_states(n: int, d: int = 2):
    """Stream (tableau, state) pairs without materializing the dictionary."""
    if d not in STREAM_LIMITS or n > STREAM_LIMITS[d] or n < 1:
        raise ResourceLimitError(
            f"streaming enumeration supports d=2 n<=5 and d=3 n<=2, got n={n} d={d}"
        )
    for gen_x, gen_z, gen_t, psi in _iter_entries(n, d):
        gens = tuple(
            PauliOperator(
                n,
                d,
                tuple(int(v) for v in gen_x[r]),
                tuple(int(v) for v in gen_z[r]),
                int(gen_t[r]),
            )
            for r in range(n)
        )
        yield StabilizerTableau(n, d, gens), psi


def enumerate_stabilizer_states(n: int, d: int = 2) -> StabilizerDictionary:
    """Dense dictionary of all stabilizer states; exact count by construction."""
    if d not in DENSE_LIMITS or n < 1:
        raise ResourceLimitError(f"unsupported local dimension d={d}")
    if n > DENSE_LIMITS[d]:
        raise ResourceLimitError(
            f"dense enumeration supports n <= {DENSE_LIMITS[d]} for d={d}; "
            "use iter_stabilizer_states to stream larger systems"
        )
    total = count_stabilizer_states(n, d)
    states = np.empty((d**n, total), dtype=complex)
    gen_x = np.empty((total, n, n), dtype=np.int8)
    gen_z = np.empty((total, n, n), dtype=np.int8)
    gen_t = np.empty((total, n), dtype=np.int8)
    for i, (gx, gz, gt, psi) in enumerate(_iter_entries(n, d)):
        states[:, i] = psi
        gen_x[i] = gx
        gen_z[i] = gz
        gen_t[i] = gt
    count = i + 1
    if count != total:
        raise AssertionError(f"enumeration produced {count} != {total} states")
    return StabilizerDictionary(
        n,
        d,
        states,
        gen_x,
        gen_z,
        gen_t,
        created_at=datetime.now(timezone.utc).isoformat(),
    )


# --- quadratic states ---------------------------------------------------------

@dataclass
class QuadraticStateSet:
    """Hypergraph states of all degree <= 2 characteristic functions.

    Constant terms only flip the global sign, so entries are deduplicated to
    one representative per ray (constant term dropped): 2^(n + C(n,2)) states
    out of the 2^(1 + n + C(n,2)) functions.
    """

    n: int
    functions: list[BooleanFunction]
    states: np.ndarray  # (2^n, N) complex128


def enumerate_quadratic_states(n: int) -> QuadraticStateSet:
    if not 1 <= n <= 5:
        raise ResourceLimitError("quadratic-state enumeration supports 1 <= n <= 5")
    basis = quadratic_basis(n)[1:]  # drop the constant: global phase only
    functions = []
    dim = 1 << n
    states = np.empty((dim, 1 << len(basis)), dtype=complex)
    scale = dim ** -0.5
    for bits in range(1 << len(basis)):
        monos = frozenset(basis[i] for i in range(len(basis)) if (bits >> i) & 1)
        f = BooleanFunction(n, monos)
        functions.append(f)
        states[:, bits] = hypergraph_state(f)
    assert abs(states[0, 0] - scale) < 1e-15
    return QuadraticStateSet(n, functions, states)


# --- persistent cache ---------------------------------------------------------

def cache_path(n: int, d: int, cache_root: str | os.PathLike | None = None) -> Path:
    """magic-stab-cache/v1/n{n}d{d}.bin under the cache root.

    The root defaults to ~/.cache/magiclab and honors MAGICLAB_CACHE_DIR.
    """
    if cache_root is None:
        cache_root = os.environ.get(
            "MAGICLAB_CACHE_DIR", Path.home() / ".cache" / "magiclab"
        )
    return Path(cache_root) / "magic-stab-cache" / "v1" / f"n{n}d{d}.bin"


def save_dictionary(dic: StabilizerDictionary, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    dim = dic.d**dic.n
    with open(path, "wb") as fh:
        fh.write(CACHE_MAGIC)
        fh.write(struct.pack("<III Q", dic.convention, dic.n, dic.d, dic.size))
        for i in range(dic.size):
            fh.write(dic.gen_x[i].astype(np.uint8).tobytes())
            fh.write(dic.gen_z[i].astype(np.uint8).tobytes())
            fh.write(dic.gen_t[i].astype(np.uint8).tobytes())
            fh.write(dic.states[:, i].astype(np.complex64).tobytes())


def _state_from_arrays(n, d, gx, gz, gt) -> np.ndarray:
    """Rebuild the exact state from one packed canonical tableau."""
    zeta = np.exp(1j * np.pi / d)
    k = int(np.sum(np.any(gx != 0, axis=1)))
    powers = d ** np.arange(n)
    zrows = gz[k:]
    if n - k:
        rhs = np.array([(-(int(t) // 2)) % d for t in gt[k:]], dtype=np.int64)
        w0 = gfp_solve(zrows.astype(np.int64), rhs, d)
    else:
        w0 = np.zeros(n, dtype=np.int64)
    amps = {}
    amps[tuple(int(v) for v in w0)] = 0
    for y in itertools.product(*(range(d) for _ in range(k))):
        if not any(y):
            continue
        i = next(j for j in range(k) if y[j])
        prev = list(y)
        prev[i] -= 1
        w_prev = (w0 + np.array(prev) @ gx[:k]) % d
        w_new = (w_prev + gx[i]) % d
        e = (
            amps[tuple(int(v) for v in w_prev)]
            + int(gt[i])
            + 2 * int(gz[i] @ w_new)
        ) % (2 * d)
        amps[tuple(int(v) for v in w_new)] = e
    psi = np.zeros(d**n, dtype=complex)
    indexed = {int(np.array(w) @ powers): e for w, e in amps.items()}
    anchor = min(indexed)
    for index, e in indexed.items():
        psi[index] = d ** (-k / 2) * zeta ** ((e - indexed[anchor]) % (2 * d))
    return psi


def load_dictionary(path: Path, n: int, d: int) -> StabilizerDictionary | None:
    """Load a cache file; returns None on any mismatch so callers regenerate.

    Stored complex64 amplitudes are interchange data only: exact complex128
    states are rebuilt from the packed tableaux and cross-checked against
    the stored values.
    """
    try:
        raw = Path(path).read_bytes()
    except OSError:
        return None
    header = struct.calcsize("<III Q")
    if len(raw) < 4 + header or raw[:4] != CACHE_MAGIC:
        return None
    convention, fn, fd, count = struct.unpack("<III Q", raw[4 : 4 + header])
    if convention != CACHE_CONVENTION or fn != n or fd != d:
        return None
    if count != count_stabilizer_states(n, d):
        return None
    dim = d**n
    entry = 2 * n * n + n + 8 * dim
    if len(raw) != 4 + header + count * entry:
        return None
    states = np.empty((dim, count), dtype=complex)
    gen_x = np.empty((count, n, n), dtype=np.int8)
    gen_z = np.empty((count, n, n), dtype=np.int8)
    gen_t = np.empty((count, n), dtype=np.int8)
    off = 4 + header
    for i in range(count):
        gx = np.frombuffer(raw, dtype=np.uint8, count=n * n, offset=off).reshape(n, n)
        off += n * n
        gz = np.frombuffer(raw, dtype=np.uint8, count=n * n, offset=off).reshape(n, n)
        off += n * n
        gt = np.frombuffer(raw, dtype=np.uint8, count=n, offset=off)
        off += n
        stored = np.frombuffer(raw, dtype=np.complex64, count=dim, offset=off)
        off += 8 * dim
        if gx.max() >= d or gz.max() >= d or gt.max() >= 2 * d:
            return None
        try:
            psi = _state_from_arrays(
                n, d, gx.astype(np.int64), gz.astype(np.int64), gt
            )
        except Exception:
            return None
        if np.max(np.abs(psi - stored)) > 2e-6:
            return None
        states[:, i] = psi
        gen_x[i] = gx
        gen_z[i] = gz
        gen_t[i] = gt
    return StabilizerDictionary(n, d, states, gen_x, gen_z, gen_t)


def get_dictionary(
    n: int,
    d: int = 2,
    cache_root: str | os.PathLike | None = None,
    use_cache: bool = True,
) -> StabilizerDictionary:
    """Load the (n, d) dictionary from cache, regenerating on any mismatch."""
    path = cache_path(n, d, cache_root)
    if use_cache:
        dic = load_dictionary(path, n, d)
        if dic is not None:
            return dic
    dic = enumerate_stabilizer_states(n, d)
    if use_cache:
        save_dictionary(dic, path)
    return dic
