"""Boolean functions in ANF, hypergraph states, and nonquadraticity.

Truth tables are packed into Python ints: bit x of the table is f(x), where
input bit i of x is variable x_{i+1} (LSB-first, matching basis-state
indexing).  Degree <= 2 functions are exactly the codewords of the
second-order Reed-Muller code RM(2, n).
"""

import math
import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .binlin import field_element, field_pow, field_trace


def variable_mask(n: int, i: int) -> int:
    """Packed table of the coordinate function x -> x_i (bit i of the input).

    The pattern is 2^i zeros then 2^i ones, repeated; built with a repunit
    multiply so large n stay cheap.
    """
    if not 0 <= i < n:
        raise ValueError("variable index out of range")
    block = ((1 << (1 << i)) - 1) << (1 << i)
    period = 1 << (i + 1)
    reps = 1 << (n - i - 1)
    repunit = ((1 << (period * reps)) - 1) // ((1 << period) - 1)
    return block * repunit


def monomial_table(n: int, monomial: frozenset[int]) -> int:
    table = (1 << (1 << n)) - 1  # empty product = constant 1
    for i in monomial:
        table &= variable_mask(n, i)
    return table


@dataclass(frozen=True)
class BooleanFunction:
    """Boolean function given by its ANF monomial set (0-indexed variables)."""

    n: int
    monomials: frozenset[frozenset[int]]

    def __post_init__(self):
        object.__setattr__(
            self, "monomials", frozenset(frozenset(m) for m in self.monomials)
        )
        for m in self.monomials:
            if any(not 0 <= i < self.n for i in m):
                raise ValueError("monomial variable out of range")

    @cached_property
    def truth_table(self) -> int:
        if self.n > 24:
            raise ValueError("truth table too large to materialize (n > 24)")
        out = 0
        for m in self.monomials:
            out ^= monomial_table(self.n, m)
        return out

    @property
    def degree(self) -> int:
        return max((len(m) for m in self.monomials), default=0)

    def weight(self) -> int:
        return self.truth_table.bit_count()

    def evaluate(self, x: int) -> int:
        value = 0
        for m in self.monomials:
            value ^= all((x >> i) & 1 for i in m)
        return int(value)

    def __xor__(self, other: "BooleanFunction") -> "BooleanFunction":
        if self.n != other.n:
            raise ValueError("mismatched variable counts")
        return BooleanFunction(self.n, self.monomials ^ other.monomials)

    def compose_affine(self, A: np.ndarray, b: np.ndarray) -> "BooleanFunction":
        """f(Ax + b) by permuting (or collapsing) the truth table."""
        n = self.n
        tt = self.truth_table
        out = 0
        A = np.asarray(A) % 2
        b = np.asarray(b) % 2
        for x in range(1 << n):
            xv = np.array([(x >> i) & 1 for i in range(n)])
            y = (A @ xv + b) % 2
            yi = int(sum(int(v) << i for i, v in enumerate(y)))
            if (tt >> yi) & 1:
                out |= 1 << x
        return from_truth_table(n, out)


def from_truth_table(n: int, table: int) -> BooleanFunction:
    """ANF via the Moebius transform of a packed truth table."""
    tt = table
    for i in range(n):
        lo = ~variable_mask(n, i)
        tt ^= (tt & lo) << (1 << i)
    tt &= (1 << (1 << n)) - 1
    monomials = set()
    while tt:
        m = (tt & -tt).bit_length() - 1
        tt &= tt - 1
        monomials.add(frozenset(i for i in range(n) if (m >> i) & 1))
    return BooleanFunction(n, frozenset(monomials))


def parse_anf(text: str, n: int | None = None) -> BooleanFunction:
    """Parse "x1*x2*x3 + x2 + 1" (variables 1-indexed, whitespace ignored)."""
    text = re.sub(r"\s+", "", text)
    if not text:
        raise ValueError("empty ANF expression")
    monomials = set()
    max_var = 0
    for term in text.split("+"):
        if term == "1":
            mono = frozenset()
        else:
            factors = term.split("*")
            idxs = []
            for f in factors:
                m = re.fullmatch(r"x(\d+)", f)
                if not m or int(m.group(1)) < 1:
                    raise ValueError(f"malformed ANF factor: {f!r}")
                idxs.append(int(m.group(1)) - 1)
            if len(set(idxs)) != len(idxs):
                raise ValueError(f"repeated variable in monomial: {term!r}")
            mono = frozenset(idxs)
        monomials ^= {mono}
        max_var = max(max_var, max((i + 1 for i in mono), default=0))
    if n is None:
        n = max(max_var, 1)
    elif n < max_var:
        raise ValueError("declared variable count too small for expression")
    return BooleanFunction(n, frozenset(monomials))


def anf_string(f: BooleanFunction) -> str:
    if not f.monomials:
        return "0"
    terms = []
    for m in sorted(f.monomials, key=lambda m: (len(m), sorted(m))):
        terms.append("*".join(f"x{i + 1}" for i in sorted(m)) if m else "1")
    return " + ".join(terms)


def truth_table_hex(f: BooleanFunction) -> str:
    """Hex dump of the packed table (2^n bits, LSB-first byte order)."""
    nbytes = max(1, (1 << f.n) + 7 >> 3)
    return f.truth_table.to_bytes(nbytes, "little").hex()


def from_truth_table_hex(n: int, dump: str) -> BooleanFunction:
    return from_truth_table(n, int.from_bytes(bytes.fromhex(dump), "little"))


# --- hypergraph states --------------------------------------------------------

@dataclass(frozen=True)
class Hypergraph:
    """Hypergraph on vertices 1..n (stored 0-indexed) with hyperedges of size >= 1."""

    n: int
    hyperedges: frozenset[frozenset[int]]

    def __post_init__(self):
        object.__setattr__(
            self, "hyperedges", frozenset(frozenset(e) for e in self.hyperedges)
        )
        for e in self.hyperedges:
            if not e:
                raise ValueError("hyperedges must contain at least one vertex")
            if any(not 0 <= v < self.n for v in e):
                raise ValueError("hyperedge vertex out of range")


def characteristic_function(H: Hypergraph) -> BooleanFunction:
    return BooleanFunction(H.n, H.hyperedges)


def hypergraph_state(H: Hypergraph | BooleanFunction) -> np.ndarray:
    """Dense state with amplitudes 2^(-n/2) * (-1)^f(x).

    Equals applying one multi-controlled-Z per hyperedge to the uniform
    superposition.
    """
    f = characteristic_function(H) if isinstance(H, Hypergraph) else H
    if f.n > 20:
        raise ValueError("dense hypergraph states are limited to n <= 20")
    dim = 1 << f.n
    raw = f.truth_table.to_bytes((dim + 7) // 8, "little")
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:dim]
    return (1.0 - 2.0 * bits) / math.sqrt(dim) + 0j


def overlap_from_weight(f: BooleanFunction, g: BooleanFunction) -> float:
    """Inner product of the two hypergraph states, 1 - 2^(1-n) * wt(f xor g)."""
    if f.n != g.n:
        raise ValueError("mismatched variable counts")
    return 1.0 - 2.0 ** (1 - f.n) * (f ^ g).weight()


# --- second-order nonlinearity ------------------------------------------------

def quadratic_basis(n: int) -> list[frozenset[int]]:
    """ANF basis of RM(2, n): constant, linear, and pair monomials."""
    basis: list[frozenset[int]] = [frozenset()]
    basis += [frozenset({i}) for i in range(n)]
    basis += [frozenset({i, j}) for i in range(n) for j in range(i + 1, n)]
    return basis


def nonquadraticity(f: BooleanFunction) -> tuple[int, BooleanFunction]:
    """Minimum Hamming distance from f to RM(2, n), plus one minimizer.

    Exhaustive Gray-code sweep over all 2^(1 + n + C(n,2)) quadratics with an
    incremental table update; zero iff deg f <= 2.  The sweep partitions
    cleanly over the coefficient space if parallelism is ever needed.
    """
    n = f.n
    if n > 6:
        raise ValueError(
            "exhaustive search supports n <= 6; use decomposition bounds beyond"
        )
    basis = quadratic_basis(n)
    tables = [monomial_table(n, m) for m in basis]
    cur = f.truth_table
    best_w = cur.bit_count()
    best_g = 0
    for g in range(1, 1 << len(basis)):
        cur ^= tables[(g & -g).bit_length() - 1]
        w = cur.bit_count()
        if w < best_w:
            best_w, best_g = w, g
            if w == 0:
                break
    subset = best_g ^ (best_g >> 1)
    argmin = BooleanFunction(
        n, frozenset(basis[i] for i in range(len(basis)) if (subset >> i) & 1)
    )
    return best_w, argmin


def dmin_bound_from_chi(f: BooleanFunction, chi: int | None = None) -> float:
    """Upper bound -2*log2(1 - 2^(1-n)*chi(f)) on the min-relative entropy of
    magic of the hypergraph state of f (quadratic states are stabilizer states)."""
    if chi is None:
        chi, _ = nonquadraticity(f)
    if chi >= 2 ** (f.n - 1):
        raise ValueError("bound undefined: chi >= 2^(n-1)")
    return -2.0 * math.log2(1.0 - 2.0 ** (1 - f.n) * chi)


def welch_function(n: int) -> BooleanFunction:
    """The modified Welch power function x -> tr(x^(2^r + 3)), r = (n+1)/2.

    Defined for odd n under the package's fixed GF(2^n) modulus; algebraic
    degree 3 (the exponent has binary weight 3).
    """
    if n % 2 == 0:
        raise ValueError("n must be odd")
    if not 3 <= n <= 15:
        raise ValueError("supported range is 3 <= n <= 15")
    r = (n + 1) // 2
    e = (1 << r) + 3
    table = 0
    for v in range(1 << n):
        if field_trace(field_pow(field_element(n, v), e)):
            table |= 1 << v
    return from_truth_table(n, table)
