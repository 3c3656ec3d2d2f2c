"""Reproducing kernels, the two averaging transforms and the Berezin transform.

Walks through the basic objects on C^n: normalized kernels and their
overlaps, the weighted kernel identity, hat/tilde averages of a measure, and
the fact that the Berezin transform of T_nu is the Gaussian average with
alpha = 1.
"""

import numpy as np

from fockideal import AtomicMeasure, DensityMeasure, hat, kernel_identity_check, normalized_kernel, tilde
from fockideal.fockmeasure import kernel_overlap
from fockideal.toeplitz import berezin

rng = np.random.default_rng(1729)

print("== kernel overlaps ==")
z, w = np.array([0.3 + 0.4j]), np.array([-1.0 + 0.2j])
print("|<k_z, k_w>|           ", abs(kernel_overlap(z, w)))
print("exp(-|z - w|^2 / 2)    ", np.exp(-np.abs(z - w) ** 2 / 2)[0])
print("k_z(w) / |k_z|         ", normalized_kernel(z, w))

print("\n== weighted kernel identity (should be 1) ==")
for p in (1.0, 2.0, 4.0):
    print(f"p = {p}:", kernel_identity_check(np.array([1.5 - 0.5j]), p))

print("\n== hat and tilde of an atomic measure ==")
nu = AtomicMeasure([0.0, 1.0 + 1.0j, -2.0], [1.0, 0.5, 2.0])
pts = np.array([0.0, 0.5, 1.0 + 1.0j, 3.0])
print("points   ", pts)
print("hat_1    ", hat(nu, 1.0, pts))
print("tilde_1  ", tilde(nu, 1.0, pts))
print("berezin  ", berezin(nu, pts))

print("\n== a radial density: Lebesgue measure has tilde_alpha = pi / alpha ==")
leb = DensityMeasure(1)
for alpha in (0.5, 1.0, 2.0):
    print(f"alpha = {alpha}: tilde = {tilde(leb, alpha, np.array([0.7])).item():.15f}, pi/alpha = {np.pi / alpha:.15f}")
