"""Hypergraph states through their Boolean functions.

State overlaps reduce to Hamming distances: <Psi_f|Psi_g> = 1 - 2^(1-n)
wt(f+g).  Minimizing the distance to the quadratics (the second-order
Reed-Muller code) upper-bounds the magic of the state, and the cubic
Welch power function shows how far a degree-3 function can sit from them.
"""

import numpy as np

from magiclab import (
    anf_string,
    dmin_bound_from_chi,
    from_truth_table,
    hypergraph_state,
    nonquadraticity,
    overlap_from_weight,
    parse_anf,
    welch_function,
)

f = parse_anf("x1*x2*x3")
g = parse_anf("x1*x2", n=3)
lhs = overlap_from_weight(f, g)
rhs = np.vdot(hypergraph_state(f), hypergraph_state(g)).real
print(f"overlap via weights: {lhs:.12f}   dense inner product: {rhs:.12f}")

chi, nearest = nonquadraticity(f)
print(f"\nchi(x1 x2 x3) = {chi}, nearest quadratic: {anf_string(nearest)}")
print(f"magic bound -2 log2(1 - 2^(1-n) chi) = {dmin_bound_from_chi(f, chi):.6f}")

print("\nmodified Welch functions tr(x^(2^r + 3)):")
for n in (3, 5):
    w = welch_function(n)
    chi_w, _ = nonquadraticity(w)
    curve = 2 ** (n - 1) - 2 ** ((3 * n - 1) / 4)
    print(
        f"  n={n}: degree {w.degree}, weight {w.weight()}, chi = {chi_w}"
        f"  (asymptotic curve ~{curve:.2f}, reported only)"
    )

rng = np.random.default_rng(0)
print("\nrandom spot checks of the overlap identity (n = 6):")
for _ in range(3):
    a = from_truth_table(6, int.from_bytes(rng.bytes(8), "little"))
    b = from_truth_table(6, int.from_bytes(rng.bytes(8), "little"))
    dense = np.vdot(hypergraph_state(a), hypergraph_state(b)).real
    print(f"  weight form {overlap_from_weight(a, b):+.9f}   dense {dense:+.9f}")
