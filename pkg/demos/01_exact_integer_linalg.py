#!/usr/bin/env python3
"""Tour of the exact integer linear algebra layer.

Everything is computed over arbitrary-precision Python ints; there is no
floating point anywhere, so every identity printed below holds exactly.
"""

from hopfglue import (
    IntMatrix,
    complete_primitive_to_sl3,
    extended_gcd,
    gcd_of_k_minors,
    inverse_unimodular,
    random_sl3,
    smith_normal_form,
)

# ---------------------------------------------------------------------------
# Extended gcd: Bezout coefficients with a fixed, reproducible convention.
# ---------------------------------------------------------------------------
for a, b in ((6, 4), (2, 1), (0, 0), (-15, 35)):
    g, x, y = extended_gcd(a, b)
    print(f"gcd({a}, {b}) = {g} = {x}*{a} + {y}*{b}")
print()

# ---------------------------------------------------------------------------
# Smith normal form: u @ a @ v == d with unimodular u, v and a diagonal d
# whose entries divide each other in turn.
# ---------------------------------------------------------------------------
a = IntMatrix([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
res = smith_normal_form(a)
print("a =", a.to_lists())
print("d =", res.d.to_lists())
print("u =", res.u.m.to_lists())
print("v =", res.v.m.to_lists())
assert (res.u.m @ a) @ res.v.m == res.d
print("u @ a @ v == d holds exactly")
print()

# The diagonal packs the minor gcds: d1 * ... * dk is the gcd of all
# k x k minors of the input.
prod = 1
for k, entry in enumerate(res.diagonal(), start=1):
    prod *= entry
    print(f"d1*...*d{k} = {prod}   gcd of {k}-minors = {gcd_of_k_minors(a, k)}")
print()

# ---------------------------------------------------------------------------
# Completing a primitive vector to a determinant +1 matrix.  This is how a
# surgery direction/multiplicity triple becomes a full boundary matrix.
# ---------------------------------------------------------------------------
v = (2, 3, 5)
u = complete_primitive_to_sl3(v)
print(f"completion of {v}:", u.m.to_lists())
print("third column:", u.m.col(2), " determinant:", u.det)
print()

# ---------------------------------------------------------------------------
# Seeded random determinant-1 matrices (products of elementary shears) and
# their exact inverses.
# ---------------------------------------------------------------------------
w = random_sl3(seed=7, word_length=15)
w_inv = inverse_unimodular(w)
print("random word:", w.m.to_lists())
print("its inverse:", w_inv.m.to_lists())
assert w.m @ w_inv.m == IntMatrix.identity(3)
print("w @ w^-1 == I, exactly")
