"""Exact spectra of Toeplitz operators with atomic and radial symbols.

For finitely many atoms the nonzero s-numbers of T_nu are the eigenvalues of
a weighted Gram matrix of kernels. Radial densities are diagonal in the
monomial basis, and truncating to polynomials of growing degree gives an
increasing ladder of s-numbers.
"""

import math

import numpy as np

from fockideal import AtomicMeasure, DensityMeasure, build_atomic, build_truncated, truncate

print("== two unit atoms at distance sqrt(2 log 2): overlap 1/2 ==")
a = math.sqrt(2 * math.log(2))
print("s-numbers:", build_atomic(AtomicMeasure([0.0, a])).s_numbers().values)

print("\n== close atoms keep their tiny eigenvalue to full relative precision ==")
for d in (1e-2, 1e-4, 1e-6):
    small = build_atomic(AtomicMeasure([0.0, d])).s_numbers().values[1]
    print(f"d = {d:g}: computed {small:.12e}, exact {-math.expm1(-d * d / 2):.12e}")

print("\n== Lebesgue measure: T is pi^n times the identity ==")
for n in (1, 2):
    comp = build_truncated(DensityMeasure(n), 4)
    print(f"n = {n}, dim {comp.dim}: distinct s-numbers", np.unique(np.round(comp.s_numbers().values, 12)))

print("\n== compression ladder for an atomic measure ==")
rng = np.random.default_rng(7)
nu = AtomicMeasure(rng.normal(size=4) + 1j * rng.normal(size=4), rng.uniform(0.5, 1.5, 4))
print("exact   ", build_atomic(nu).s_numbers().values)
for d in (4, 8, 16, 32):
    print(f"d = {d:2d}  ", build_truncated(nu, d).s_numbers().values[:4])

print("\n== Lebesgue measure restricted to the disc of radius 2 ==")
disc = truncate(DensityMeasure(1), 2.0)
print("top s-numbers:", build_truncated(disc, 12).s_numbers().values[:6])
