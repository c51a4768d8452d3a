"""
Maps from Frobenius lifts, and the comultiplication
===================================================

A ring with commuting Frobenius lifts maps into its Witt ring with ghost
components sigma_n(a).  Delta sends W to W(W) and is characterized by
its outer ghost components being the Frobenius maps.
"""

import random

from witt import core, full_profile
from witt.canonical import FrobeniusLiftSpec, delta, mapped_ghost, outer_ghost, phi
from witt.rings import Integers

ident, power = FrobeniusLiftSpec.identity(), FrobeniusLiftSpec.power()
print("phi(2) with sigma = id:", phi(ident, Integers()(2), full_profile(6)))
print("phi(1 + u) with u -> u^p:", phi(power, power.ring("1,1"), full_profile(4)))
print("phi(u) is Teichmueller:", phi(power, power.ring("0,1"), full_profile(4)))

x = core.random_vector(Integers(), full_profile(6), random.Random(3))
d = delta(x, 2, 3)
print("x =", x)
print("Delta(x) =", d)
for n in (1, 2):
    print(f"outer ghost {n}:", outer_ghost(d, n), " F_n(x):", core.project(core.frobenius(n, x), full_profile(3)))
for n in (1, 2, 3):
    print(f"inner ghost {n}:", mapped_ghost(d, n), " F_n(x):", core.project(core.frobenius(n, x), full_profile(2)))
