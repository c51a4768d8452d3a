"""
Witt vectors as power series
============================

A big Witt vector x of length N is the series prod (1 - x_n t^n).
Witt addition becomes series multiplication, and -t f'/f lists the
ghost components.
"""

import random

from witt import full_profile, ghost, random_vector
from witt.lambda_ring import d_operator, lambda_to_witt, lambda_witt_mul, witt_to_lambda
from witt.rings import IntegersMod

R = IntegersMod(6)
P = full_profile(6)
rng = random.Random(0)
x, y = random_vector(R, P, rng), random_vector(R, P, rng)
f, g = witt_to_lambda(x), witt_to_lambda(y)
print("x =", x, " f_x =", f)
print("y =", y, " f_y =", g)

# addition: multiply the series
print("f_x * f_y back in coordinates:", lambda_to_witt(f * g))
print("x + y computed directly:       ", x + y)

# multiplication: the product formula over lcm/gcd pairs
print("Lambda product:", lambda_to_witt(lambda_witt_mul(f, g)))
print("direct x * y:  ", x * y)

# D(f_x) carries the ghost components
print("D(f_x) =", d_operator(f))
print("ghost(x) =", ghost(x))
