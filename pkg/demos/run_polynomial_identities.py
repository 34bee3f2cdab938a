#!/usr/bin/env python3
"""The polynomial identities behind the scalar-power analysis.

When z = xy has a scalar 5th or 7th power, the parameters (a, b) satisfy a
pair of coordinate polynomial equations; eliminating one variable gives the
condition polynomials.  Everything below is exact integer arithmetic.
"""

from gen23.polys import (
    BivarPoly,
    IntPoly,
    R_POLY,
    Z5_POLY,
    factorize_int,
    poly_text,
    resultant_bivar,
    splitting_order_check,
)

print("Order-5 system: f1 = -a^2 + ab^2 - b, f2 = b^3 - 2ab + 1")
f1 = BivarPoly(("a", "b"), {(2, 0): -1, (1, 2): 1, (0, 1): -1})
f2 = BivarPoly(("a", "b"), {(1, 1): -2, (0, 3): 1, (0, 0): 1})
res = resultant_bivar(f1, f2, "a")
print("  Res_a =", poly_text(res))
print("  (the displayed form b^2(b^6-4b^3-1) carries the content factor b^2:")
print("   b^2 * Res_a =", poly_text(IntPoly([0, 0, 1]) * res), ")")
print()

print("Order-7 system: the degree-15 resultant")
g1 = BivarPoly(("a", "b"),
               {(3, 0): 1, (2, 2): -3, (1, 4): 1, (1, 1): 4, (0, 3): -1, (0, 0): -1})
g2 = BivarPoly(("a", "b"),
               {(2, 1): 3, (1, 3): -4, (1, 0): -2, (0, 5): 1, (0, 2): 3})
res_b = resultant_bivar(g1, g2, "b")
res_a = resultant_bivar(g1, g2, "a")
print("  Res_b =", poly_text(res_b))
print("  Res_b == R:", res_b == R_POLY, "   Res_a == -R:",
      res_a == IntPoly([-c for c in R_POLY.coeffs]))
print()

print("R factors over the integers as:")
content, factors = factorize_int(R_POLY)
for g, m in factors:
    print("   ", poly_text(g))
prod = IntPoly([content])
for g, m in factors:
    prod = prod * g**m
print("  product check:", prod == R_POLY)
print()

print("R splits over a field containing an element of order 21/(p,21):")
for p in (2, 3, 5, 7):
    rep = splitting_order_check(R_POLY, p)
    d = rep.details
    print(f"  p = {p:2d}: splitting degree {d['splitting_degree']:2d}, "
          f"required order {d['required_order']:2d}, "
          f"contained: {rep.ok}, minimal field: {d['splitting_field_is_minimal']}")
print()

print("t^6 - 4t^3 - 1 =", poly_text(Z5_POLY))
