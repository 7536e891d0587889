"""Pauli measurements on magic states: too much magic flattens the outcomes.

Joint Pauli outcome probabilities obey p(y) <= 2^(n - k - dmin): the more
magic the resource state carries, the more uniform every measurement
pattern becomes, and uniform patterns are easy to imitate with classical
coin flips.  The uniform-search budget makes this concrete.
"""

import numpy as np

from magiclab import (
    MeasurementLayout,
    enumerate_stabilizer_states,
    dmin,
    hypergraph_state,
    outcome_distribution,
    parse_anf,
    pauli_from_string,
    planted_verifier,
    randomized_search,
    search_repetition_bound,
)

dic = enumerate_stabilizer_states(3, 2)
psi = hypergraph_state(parse_anf("x1*x2*x3"))
value, _ = dmin(psi, dic)
print(f"resource state CCZ|+++>, dmin = {value:.4f}\n")

for strings in (("ZII", "IZI", "IIZ"), ("XXI", "ZZI"), ("XXX",)):
    layout = MeasurementLayout(3, tuple(pauli_from_string(s) for s in strings))
    dist = outcome_distribution(psi, layout)
    cap = 2.0 ** (3 - layout.k - value)
    print(f"layout {','.join(strings):12s} max p(y) = {dist.probabilities.max():.4f}  cap = {cap:.4f}")

print("\nuniform random search against a planted verifier:")
rng = np.random.default_rng(0)
k, good = 8, set(range(40))
verifier = planted_verifier(k, good)
reps = [randomized_search(verifier, k, 10_000, rng).repetitions for _ in range(2000)]
print(f"  |G|/2^k = {len(good) / 2 ** k:.4f}; mean draws to success = {np.mean(reps):.2f}"
      f" (geometric mean 1/p = {2 ** k / len(good):.2f})")
print(f"  reference budget at n = 3, dmin = {value:.3f}: "
      f"{search_repetition_bound(3, value):.2f} draws")
