"""
The Artin-Hasse exponential
===========================

exp(x + x^p/p + x^{p^2}/p^2 + ...) has p-integral coefficients.  Its
Moebius product form gives an independent expansion, and products of
hexp factors realize the idempotent eps_p on Witt vectors.
"""

import random

from witt import full_profile, p_typical_profile, project, random_vector, witt_vector
from witt.artin_hasse import HEXP_ORIENTATION, epsilon_p, epsilon_product, hexp_coeffs, hexp_moebius, iota_p
from witt.rings import LocalizedRationals, PrimeField

print("hexp_2 to x^8:", hexp_coeffs(2, 8))
print("hexp_3 to x^8:", hexp_coeffs(3, 8))
print("Moebius product agrees to x^32:", all(hexp_coeffs(p, 32) == hexp_moebius(p, 32) for p in (2, 3, 5)))

# eps_2 keeps the ghost components at 1, 2, 4, ... and kills the rest
R = LocalizedRationals(2)
x = witt_vector(R, full_profile(4), [5, 0, 0, 0])
print("eps_2[5] =", epsilon_p(2, x))
print("hexp product orientation:", HEXP_ORIENTATION, "->", epsilon_product(2, x))

# iota_p: an additive section of the projection to p-typical vectors
F3 = PrimeField(3)
rng = random.Random(0)
y = random_vector(F3, p_typical_profile(3, 1), rng)
iy = iota_p(3, y, 4)
print("y =", y, " iota_3(y) =", iy, " projected back:", project(iy, p_typical_profile(3, 1)))
