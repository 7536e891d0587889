"""GF(2) linear algebra, prime-field (GF(p)) row reduction, and GF(2^m) fields.

Bit convention used across the package: variable/site k (1-indexed in text
formats) lives on bit k-1, least significant bit first.  This applies to
packed truth tables, basis-state indices, and BitMatrix rows alike.
"""

from dataclasses import dataclass

import numpy as np

# Fixed table of irreducible (primitive) polynomials over GF(2) for
# m = 1..15, encoded as bit masks with bit m set.  A fixed table keeps field
# constructions (and everything derived from them) reproducible.
IRREDUCIBLE_POLY = {
    1: 0b11,                 # x + 1
    2: 0b111,                # x^2 + x + 1
    3: 0b1011,               # x^3 + x + 1
    4: 0b10011,              # x^4 + x + 1
    5: 0b100101,             # x^5 + x^2 + 1
    6: 0b1011011,            # x^6 + x^4 + x^3 + x + 1
    7: 0b10000011,           # x^7 + x + 1
    8: 0b100011101,          # x^8 + x^4 + x^3 + x^2 + 1
    9: 0b1000010001,         # x^9 + x^4 + 1
    10: 0b10000001001,       # x^10 + x^3 + 1
    11: 0b100000000101,      # x^11 + x^2 + 1
    12: 0b1000001010011,     # x^12 + x^6 + x^4 + x + 1
    13: 0b10000000011011,    # x^13 + x^4 + x^3 + x + 1
    14: 0b100010001000011,   # x^14 + x^10 + x^6 + x + 1
    15: 0b1000000000000011,  # x^15 + x + 1
}


@dataclass(frozen=True)
class BitMatrix:
    """Dense matrix over GF(2) with packed row-major bit storage.

    Row i is an int whose bit j is the (i, j) entry; column j is bit j.
    """

    rows: int
    cols: int
    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) != self.rows:
            raise ValueError("bit storage length must equal row count")
        mask = (1 << self.cols) - 1
        if any(row & ~mask for row in self.bits):
            raise ValueError("row has bits outside the column range")

    @classmethod
    def from_rows(cls, rows: list[int], cols: int) -> "BitMatrix":
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def from_array(cls, arr) -> "BitMatrix":
        arr = np.asarray(arr, dtype=np.uint8) % 2
        if arr.ndim != 2:
            raise ValueError("expected a 2-D array")
        rows = [int(sum(int(v) << j for j, v in enumerate(r))) for r in arr]
        return cls(arr.shape[0], arr.shape[1], tuple(rows))

    def to_array(self) -> np.ndarray:
        out = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for i, row in enumerate(self.bits):
            for j in range(self.cols):
                out[i, j] = (row >> j) & 1
        return out

    def transpose(self) -> "BitMatrix":
        cols = []
        for j in range(self.cols):
            col = 0
            for i, row in enumerate(self.bits):
                col |= ((row >> j) & 1) << i
            cols.append(col)
        return BitMatrix(self.cols, self.rows, tuple(cols))


def _as_bit_rows(M) -> tuple[list[int], int]:
    if isinstance(M, BitMatrix):
        return list(M.bits), M.cols
    arr = np.asarray(M, dtype=np.uint8) % 2
    if arr.ndim != 2:
        raise ValueError("expected a 2-D array or BitMatrix")
    rows = [int(sum(int(v) << j for j, v in enumerate(r))) for r in arr]
    return rows, arr.shape[1]


def gf2_rank(M) -> int:
    """Rank over GF(2) via Gaussian elimination.  Accepts BitMatrix or array."""
    work, cols = _as_bit_rows(M)
    rank = 0
    for col in range(cols):
        pivot = next((i for i in range(rank, len(work)) if (work[i] >> col) & 1), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for i in range(len(work)):
            if i != rank and (work[i] >> col) & 1:
                work[i] ^= work[rank]
        rank += 1
        if rank == len(work):
            break
    return rank


def gf2_solve(M, rhs: list[int]) -> list[int] | None:
    """One solution x of M x = rhs over GF(2), or None if inconsistent.

    Free variables are set to zero, so the solution is deterministic.
    """
    work, cols = _as_bit_rows(M)
    b = list(int(v) % 2 for v in rhs)
    if len(b) != len(work):
        raise ValueError("rhs length must equal row count")
    pivots = []
    rank = 0
    for col in range(cols):
        pivot = next((i for i in range(rank, len(work)) if (work[i] >> col) & 1), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        b[rank], b[pivot] = b[pivot], b[rank]
        for i in range(len(work)):
            if i != rank and (work[i] >> col) & 1:
                work[i] ^= work[rank]
                b[i] ^= b[rank]
        pivots.append(col)
        rank += 1
    if any(b[i] for i in range(rank, len(work))):
        return None
    x = [0] * cols
    for i, col in enumerate(pivots):
        x[col] = b[i]
    return x


def gf2_nullspace(M) -> list[list[int]]:
    """Basis of the right nullspace of M over GF(2) (one vector per free column)."""
    work, cols = _as_bit_rows(M)
    pivots = []
    rank = 0
    for col in range(cols):
        pivot = next((i for i in range(rank, len(work)) if (work[i] >> col) & 1), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for i in range(len(work)):
            if i != rank and (work[i] >> col) & 1:
                work[i] ^= work[rank]
        pivots.append(col)
        rank += 1
    basis = []
    pivot_set = set(pivots)
    for free in range(cols):
        if free in pivot_set:
            continue
        v = [0] * cols
        v[free] = 1
        for i, col in enumerate(pivots):
            v[col] = (work[i] >> free) & 1
        basis.append(v)
    return basis


# --- dense row reduction over a prime field, used by the Pauli/tableau code ---

def gfp_rref(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(p).  Returns (rref, pivot columns)."""
    M = np.array(mat, dtype=np.int64) % p
    m, n = M.shape
    pivots = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if M[i, c] % p), None)
        if pivot is None:
            continue
        M[[r, pivot]] = M[[pivot, r]]
        M[r] = (M[r] * pow(int(M[r, c]), -1, p)) % p
        for i in range(m):
            if i != r and M[i, c]:
                M[i] = (M[i] - M[i, c] * M[r]) % p
        pivots.append(c)
        r += 1
        if r == m:
            break
    return M, pivots


def gfp_rank(mat: np.ndarray, p: int) -> int:
    return len(gfp_rref(mat, p)[1])


def gfp_solve(mat: np.ndarray, rhs: np.ndarray, p: int) -> np.ndarray | None:
    """One solution of mat @ x = rhs over GF(p) (free variables zero), or None."""
    M = np.array(mat, dtype=np.int64) % p
    b = np.array(rhs, dtype=np.int64).reshape(-1, 1) % p
    aug, pivots = gfp_rref(np.hstack([M, b]), p)
    n = M.shape[1]
    if n in pivots:
        return None
    x = np.zeros(n, dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = aug[i, n]
    return x


def gfp_nullspace(mat: np.ndarray, p: int) -> np.ndarray:
    """Rows form a basis of the right nullspace of mat over GF(p)."""
    R, pivots = gfp_rref(mat, p)
    n = mat.shape[1]
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-R[i, fc]) % p
    return basis


# --- GF(2^m) field elements -------------------------------------------------

@dataclass(frozen=True)
class FieldElement:
    """Element of GF(2^m) as a polynomial bit mask modulo a fixed irreducible."""

    m: int
    value: int
    modulus: int

    def __post_init__(self):
        if not 1 <= self.m <= 15:
            raise ValueError("supported extension degrees are 1..15")
        if self.value >> self.m:
            raise ValueError("value must have fewer than m significant bits")
        if self.modulus >> self.m != 1:
            raise ValueError("modulus must have degree exactly m")

    def _check(self, other: "FieldElement"):
        if self.m != other.m or self.modulus != other.modulus:
            raise ValueError("mismatched field moduli")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.m, self.value ^ other.value, self.modulus)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        a, b, out = self.value, other.value, 0
        while b:
            if b & 1:
                out ^= a
            b >>= 1
            a <<= 1
            if a >> self.m:
                a ^= self.modulus
        return FieldElement(self.m, out, self.modulus)


def field_element(m: int, value: int) -> FieldElement:
    """Element of GF(2^m) under the package's fixed modulus table."""
    return FieldElement(m, value, IRREDUCIBLE_POLY[m])


def field_pow(x: FieldElement, e: int) -> FieldElement:
    """x**e by square-and-multiply; x**0 is 1."""
    if e < 0:
        raise ValueError("exponent must be non-negative")
    result = FieldElement(x.m, 1, x.modulus)
    base = x
    while e:
        if e & 1:
            result = result * base
        base = base * base
        e >>= 1
    return result


def field_trace(x: FieldElement) -> int:
    """Field trace tr(x) = sum of the Frobenius orbit, reduced to GF(2)."""
    acc = FieldElement(x.m, 0, x.modulus)
    y = x
    for _ in range(x.m):
        acc = acc + y
        y = y * y
    if acc.value not in (0, 1):
        raise AssertionError("trace must land in GF(2)")
    return acc.value
