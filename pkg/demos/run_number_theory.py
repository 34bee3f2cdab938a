#!/usr/bin/env python3
"""Walk through the number-theoretic groundwork.

The generation arguments lean on two exact facts about the Euler phi
function and on a subfield lemma for powers of a field generator.  Both are
verified here over comfortable ranges, in exact integer arithmetic.
"""

import math

from gen23 import numth
from gen23.fields import element, element_order, make_field, subfield_generated

print("phi(n) > n^(2/3): the comparison is done as phi(n)^3 > n^2, exactly.")
rep = numth.check_phi_bounds(1, 100_000, corollary_hi=10_000)
print("  exceptions found:", rep.details["exceptions_found"])
print("  equality cases:  ", rep.details["equality_found"], "(phi(8)^3 = 64 = 8^2)")
print("  phi(n^2-1) > max(3n+21, 4n-1) for n >= 14:", rep.details["corollary_ok"])
print()

print("The n = 14 boundary case, by hand:")
n = 14
print(f"  phi({n * n - 1}) = {numth.euler_phi(n * n - 1)} > max({3 * n + 21}, {4 * n - 1})")
print()

print("Subfield lemma: if a generates F_q*, then F_p[a^s] = F_q for s = 3, 5,")
print("except for exactly one field each.")
for p, m, s in ((2, 2, 3), (2, 4, 5), (2, 3, 3), (3, 2, 3)):
    F = make_field(p, m)
    q = F.q
    gen = next(c for c in range(2, q) if F.element_order(c) == q - 1)
    a = element(F, gen)
    sub = subfield_generated(a**s)
    tag = "  <-- the exception" if sub.size != q else ""
    print(f"  q = {q:3d}, s = {s}: a of order {element_order(a):3d}, "
          f"F_p[a^{s}] has size {sub.size}{tag}")
print()

print("Exhaustively over every prime power q <= 4096 (arithmetic form):")
exceptions = {3: [], 5: []}
for p, m, q in numth.prime_powers_up_to(4096):
    if q < 3:
        continue
    for s in (3, 5):
        order_of_power = (q - 1) // math.gcd(s, q - 1)
        if numth.smallest_subfield_degree(p, m, order_of_power) != m:
            exceptions[s].append(q)
print("  exceptions for s = 3:", exceptions[3])
print("  exceptions for s = 5:", exceptions[5])
