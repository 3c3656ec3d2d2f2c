"""Two-sided control of |T_nu^s|_Phi by lattice samples of the Berezin transform.

Lower bound: a Gaussian-weighted hat average. Middle: Phi of the Berezin-type
average on the rho-lattice. Upper: an explicit lattice constant times the hat
average. Every value carries a certified tail.
"""

import numpy as np

from fockideal import AtomicMeasure, PowerSum, SupNorm, berezin_constant, berezin_sandwich, parse_snf

print("== the lattice constant for n = s = alpha = rho = 1 ==")
c, tail = berezin_constant(1, 1.0, 1.0, 1.0)
print(f"C = {c!r}, certified tail {tail:.1e}")

print("\n== theta check: single atom at the origin ==")
v = berezin_sandwich(AtomicMeasure([0.0]), 1.0, 1.0, 1.0, 1.0, PowerSum(1))
print(f"middle value {v.middle.value!r} (sum of exp(-|j|^2) over Z^2)")

print("\n== sandwich on a random atomic measure ==")
rng = np.random.default_rng(3)
nu = AtomicMeasure(2 * (rng.uniform(-1, 1, 8) + 1j * rng.uniform(-1, 1, 8)), rng.uniform(0.5, 1.5, 8))
for phi in (PowerSum(1), PowerSum(2), SupNorm(), parse_snf("kyfan:5")):
    for s in (0.5, 1.0):
        v = berezin_sandwich(nu, 0.5, 1.0, 1.0, s, phi)
        print(f"{str(phi):8s} s={s}: {v.lower.value:.6g} <= {v.middle.value:.6g} <= {v.upper.value:.6g}  pass={v.passed}")
