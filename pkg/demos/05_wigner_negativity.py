"""Qutrit phase space: negativity as a magic witness.

Stabilizer states are exactly the pure states with non-negative discrete
Wigner functions, so negative mass witnesses magic.  The negative mass never
exceeds the free robustness (it solves a relaxation of the same
pseudomixture problem), and mana stays below LR + 1.
"""

import numpy as np

from magiclab import (
    enumerate_stabilizer_states,
    free_robustness,
    mana,
    sum_negativity,
    wigner_function,
)

dic = enumerate_stabilizer_states(1, 3)
print("Wigner functions of the 12 single-qutrit stabilizer states are non-negative:")
mins = [wigner_function(dic.state(i)).values.min() for i in range(dic.size)]
print("  min over all states and points:", f"{min(mins):+.2e}")

strange = np.array([0, 1, -1], dtype=complex) / np.sqrt(2)
W = wigner_function(strange)
print("\nmost negative single-qutrit state (|1> - |2>)/sqrt2:")
print("  Wigner values:", np.round(W.values, 4))
print(f"  negativity = {sum_negativity(W):.6f}   mana = {mana(W):.6f}")

rob = free_robustness(strange, dic)
print(f"  free robustness R = {rob.r:.6f}  -> LR = {rob.lr:.6f}")
print(f"  checks: N <= R ({sum_negativity(W):.4f} <= {rob.r:.4f}), "
      f"M < LR + 1 ({mana(W):.4f} < {rob.lr + 1:.4f})")

rng = np.random.default_rng(1)
print("\nrandom qutrit states:")
for _ in range(5):
    v = rng.normal(size=3) + 1j * rng.normal(size=3)
    v /= np.linalg.norm(v)
    W = wigner_function(v)
    rob = free_robustness(v, dic)
    print(
        f"  N = {sum_negativity(W):.4f} <= R = {rob.r:.4f};"
        f"  M = {mana(W):.4f} < LR + 1 = {rob.lr + 1:.4f}"
    )
