"""Operator ideal norms against lattice averages of the symbol.

Compares |T_nu^s|_Phi with Phi of the hat and tilde lattice sequences, shows
that the ratios stay in a bounded window across a family of clustered
measures, and checks the tilde domination constant numerically.
"""

import math

import numpy as np

from fockideal import AtomicMeasure, PowerSum, SupNorm, check_tilde_domination, main_chain
from fockideal.verify import chain_family, ratio_interval

print("== one atom at the origin, r = 1: the ratio is exactly 1 ==")
for phi in (PowerSum(1), PowerSum(2), SupNorm()):
    rep = main_chain(AtomicMeasure([0.0]), 1.0, 0.5, 1.0, phi)
    print(f"{str(phi):4s}: operator {rep.operator!r}, hat {rep.hat.value!r}")

print("\n== ratio windows over 50 clustered measures ==")
family = chain_family(1729)
for phi in (PowerSum(1), PowerSum(2), SupNorm()):
    for s in (0.5, 1.0):
        iv = ratio_interval(family, 1.0, s, phi, seed=0)
        print(f"{str(phi):4s} s={s}: ratios in [{iv.low:.4f}, {iv.high:.4f}], B = {iv.bound:.4f}")

print("\n== tilde domination: which constant actually holds ==")
nu = AtomicMeasure([0.9 + 0.9j])
r = alpha = 1.0
ratio = 1.0 / math.exp(-alpha * abs(0.9 + 0.9j) ** 2)
print(f"at z = 0: hat / tilde = {ratio:.4f}")
print(f"exp(alpha sqrt(2n) r^2) = {math.exp(math.sqrt(2)):.4f}, exp(2n alpha r^2) = {math.exp(2):.4f}")
for kind in ("stated", "sharp"):
    v = check_tilde_domination(nu, r, alpha, 1000, 0, kind)
    print(f"{kind:6s} constant {v.constant:.4f}: {v.violations} violations, max ratio {v.max_ratio:.4f}")
