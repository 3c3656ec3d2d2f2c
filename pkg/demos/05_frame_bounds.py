"""Sampling a Fock space function on a lattice.

For a fine rho-lattice, the weighted samples sum of |g(b)|^2 e^{-|b|^2} is
comparable to the Fock norm of g, with both frame constants close to
pi / rho^2. Coarsening the lattice past rho^2 = pi breaks the lower bound;
random trials hide this, the exact smallest eigenvalue does not.
"""

import math

from fockideal.toeplitz import frame_ladder

ladder = frame_ladder(degree=10, trials=100, seed=1729)
print(" rho   C1 rho^2/pi   C2 rho^2/pi   exact lower rho^2/pi")
for rho, est in zip(ladder.rhos, ladder.estimates):
    k = rho * rho / math.pi
    print(f"{rho:4.1f}   {est.c1 * k:11.8f}   {est.c2 * k:11.8f}   {est.eig_min * k:.3e}")
print("lower frame bound first drops below half at rho =", ladder.degraded_at)
