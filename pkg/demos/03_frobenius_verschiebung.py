"""
Frobenius and Verschiebung
==========================

V_n shifts components to multiples of n, F_n is the ring map with
w_m(F_n x) = w_{nm}(x).  F_p lifts the p-th power map modulo p, and
this fails for composite n.
"""

import random

from witt import frobenius, frobenius_poly, full_profile, random_vector, teichmuller, verschiebung
from witt.checks import frobenius_congruence, non_congruence_witness
from witt.rings import Integers

Z = Integers()
P = full_profile(6)

v = verschiebung(2, teichmuller(Z(1), full_profile(3)), P)
print("V_2[1] =", v)
print("F_2 V_2 [1] =", frobenius(2, v), "(this is 2 in the Witt ring)")

# F_n V_n = n on random input
x = random_vector(Z, full_profile(3), random.Random(1))
print("F_3 V_3 x == 3x:", frobenius(3, verschiebung(3, x, full_profile(9))) == 3 * x)

# the congruence F_p(x) = x^p mod p, made explicit
y = random_vector(Z, full_profile(8), random.Random(2))
print("(F_2(y) - y^2)/2 =", frobenius_congruence(y, 2))

print("F_2 component 1:", frobenius_poly(2, 1))
print("F_6 component 1:", frobenius_poly(6, 1), " mod 6:", frobenius_poly(6, 1).reduce_mod(6))
print("witness over Z/6 that F_6 is not x -> x^6:", non_congruence_witness(6))
