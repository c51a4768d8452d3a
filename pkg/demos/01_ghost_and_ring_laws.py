"""
Ghost components and the Witt ring laws
=======================================

Witt vectors add and multiply through universal integer polynomials.
The ghost map turns those laws into plain componentwise arithmetic.
"""

from witt import Kind, full_profile, ghost, structural_poly, unghost, witt_polynomial, witt_vector
from witt.rings import Integers, IntegersMod

# the first few ghost polynomials
for n in (1, 2, 4, 6):
    print(f"w_{n} =", witt_polynomial(n))

# sum and product polynomials, solved recursively from the ghost equations
print("S_2 =", structural_poly(Kind.SUM, 2))
print("Z_2 =", structural_poly(Kind.PRODUCT, 2))
print("S_3 has", len(structural_poly(Kind.SUM, 3)), "terms")

# over Z the ghost map is injective, so it can check any computation
Z = Integers()
P = full_profile(4)
x = witt_vector(Z, P, [1, 2, 3, 4])
y = witt_vector(Z, P, [2, 0, -1, 5])
print("x + y =", x + y, " ghost:", ghost(x + y), "=", ghost(x) + ghost(y))
print("x * y =", x * y, " ghost:", ghost(x * y), "=", ghost(x) * ghost(y))
print("unghost(ghost(x)) =", unghost(ghost(x)))

# over Z/4 the ghost map loses information, but the polynomials still work
Z4 = IntegersMod(4)
a = witt_vector(Z4, full_profile(2), [1, 1])
b = witt_vector(Z4, full_profile(2), [1, 0])
print("over Z/4:", a, "+", b, "=", a + b)
