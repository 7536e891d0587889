"""How magical can one qubit be?

Builds the six single-qubit stabilizer states, computes the three monotones
for the "golden" state along the Bloch-diagonal, and confirms they sandwich
exactly as the theory demands: dmin <= dmax <= log2(1 + R).
"""

import numpy as np

from magiclab import enumerate_stabilizer_states, golden_state, magic_report

dic = enumerate_stabilizer_states(1, 2)
print(f"dictionary: {dic.size} single-qubit stabilizer states")
print(np.round(dic.states.T, 3), "\n")

G = golden_state()
print("golden state amplitudes:", np.round(G, 6))

report = magic_report(G, dic)
print(f"""
min-relative entropy of magic  dmin = {report.dmin:.6f}  (log2(3 - sqrt 3) = {np.log2(3 - np.sqrt(3)):.6f})
stabilizer extent              xi   = {report.xi:.6f}  -> dmax = {report.dmax:.6f}
free robustness                R    = {report.r:.6f}  -> LR   = {report.lr:.6f}
""")

print("pseudomixture (state index, weight):")
for j, c in report.pseudomixture:
    print(f"  {j:2d}  {c:+.6f}")
print("\nwitness operator (Pauli coefficients):", report.witness)
print("\nNote the l1 mass:", report.l1, "= 1 + 2R, the (1+R) - R split of the pseudomixture.")
