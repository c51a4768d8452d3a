"""
p-typical Witt vectors over F_p are the p-adic integers
=======================================================

Sending (x_1, x_p, x_{p^2}, ...) to sum tau(x_{p^n}) p^n identifies
W(F_p) truncated at length L with Z/p^L.  Teichmueller lifts come from
iterating the p-th power map.
"""

from witt import p_typical_profile, witt_vector
from witt.padic import oracle_check, teichmuller_lift, witt_to_padic
from witt.rings import PrimeField

for a in range(5):
    print(f"tau({a}) mod 125 =", teichmuller_lift(a, 3, 5).value)

F2 = PrimeField(2)
P = p_typical_profile(2, 2)
x = witt_vector(F2, P, [1, 1, 0])
y = witt_vector(F2, P, [1, 0, 1])
print(x, "->", witt_to_padic(x).value, "mod 8")
print(y, "->", witt_to_padic(y).value, "mod 8")
print("x + y =", x + y, "->", witt_to_padic(x + y).value, "mod 8")

for p, L in ((2, 3), (3, 2)):
    report = oracle_check(p, L, exhaustive=True)
    print(f"exhaustive p={p} L={L}:", "ok" if report.ok else report.counterexample, f"({report.checked} pairs)")
print("random p=5 L=3:", oracle_check(5, 3, 500, seed=1).ok)
