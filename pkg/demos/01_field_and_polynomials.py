"""Tour of the exact arithmetic layers: GF(2^m) and polynomials over it.

Run:  PYTHONPATH=src python demos/01_field_and_polynomials.py
"""

from constacodes.gf2m import GF2m
from constacodes import polyring as pr

# ----------------------------------------------------------------------
# GF(4): elements are ints 0..3, bit i = coefficient of y^i.
# ----------------------------------------------------------------------
F4 = GF2m(2)
w = 2  # the class of y
print("GF(4) with reduction", bin(F4.reduction))
print("  w * w   =", F4.mul(w, w), "   (w^2 = w + 1 -> 3)")
print("  w * w^2 =", F4.mul(w, F4.mul(w, w)), " (norm 1)")
print("  inverse table:", {a: F4.inv(a) for a in F4.nonzero_elements()})

# Squaring is a bijection in characteristic 2, so square roots are exact.
print("  sqrt(w) =", F4.sqrt(w), "  check:", F4.mul(F4.sqrt(w), F4.sqrt(w)) == w)

# 2^k-th roots: the heart of rewriting x^(2^k n) - delta as a power.
F8 = GF2m(3)
delta = 2  # the element y
root = F8.root_2k(delta, 2)
print("GF(8): fourth root of y is", root, " check:", F8.pow(root, 4) == delta)

# ----------------------------------------------------------------------
# Polynomials: tuples of coefficients, index = degree.
# ----------------------------------------------------------------------
F2 = GF2m(1)
a = (1, 1)        # x + 1
b = (1, 1, 1)     # x^2 + x + 1
print("\n(x+1)(x^2+x+1) =", pr.p_mul(F2, a, b), " (x^3 + 1)")

g, s, t = pr.p_xgcd(F2, a, b)
print("xgcd(x+1, x^2+x+1):", g, s, t)
print("  recombination:", pr.p_add(F2, pr.p_mul(F2, s, a), pr.p_mul(F2, t, b)))

# Frobenius fixed point: x^(q^d) = x mod f for irreducible f of degree d.
f = (1, 1, 0, 1)  # x^3 + x + 1 over GF(2)
print("x^(2^3) mod (x^3+x+1) =", pr.p_powmod(F2, (0, 1), 8, f), " (back to x)")
