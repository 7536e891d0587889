"""Typical states are magical: overlap law and the empirical magic spread.

A Haar-random state's squared overlap with any fixed state follows the
(1 - b)^(2^n - 1) survival law; sweeping the best overlap over the whole
stabilizer dictionary shows the min-relative entropy of magic creeping
toward its ceiling as n grows, hugging the union-bound tail curve.
"""

import numpy as np

from magiclab import (
    ExperimentConfig,
    dmin_distribution,
    enumerate_stabilizer_states,
    overlap_cdf_pvalue,
)

print("Kolmogorov-Smirnov p-values for the fixed-reference overlap law:")
for n in (1, 2, 3):
    pv = overlap_cdf_pvalue(n, 10_000, seed=100 + n)
    print(f"  n = {n}: p = {pv:.3f}")

print("\nempirical distribution of dmin over Haar samples:")
for n, samples in ((1, 3000), (2, 1500), (3, 600), (4, 200)):
    dic = enumerate_stabilizer_states(n, 2)
    exp = dmin_distribution(ExperimentConfig(n, samples, seed=7 * n), dic)
    mask = exp.bound_curve < 1
    inside = bool(np.all(exp.empirical_cdf[mask] <= exp.bound_curve[mask] + 1e-12))
    print(
        f"  n = {n}: mean {exp.summary['mean']:.3f}, max {exp.summary['max']:.3f}"
        f"  (union-bound curve respected where < 1: {inside};"
        f" constants only meaningful from n = 3 up)"
    )

print(
    "\nSingle-qubit ceiling: max dmin = log2(3 - sqrt 3) = "
    f"{np.log2(3 - np.sqrt(3)):.4f}, attained on the Bloch diagonal."
)
