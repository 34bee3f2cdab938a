#!/usr/bin/env python3
"""A guided tour of the dimension-3 machinery on concrete parameters.

The pair is x = [[-1,0,a],[0,-1,b],[0,0,1]], y the 3-cycle permutation
matrix; z = xy has characteristic polynomial t^3 - b t^2 + a t - 1.
"""

from gen23.constructions import (
    Dim3Params,
    build_dim3,
    dim3_irreducibility_conditions,
    dim3_monomial_basis,
    scalar_power_classify_dim3,
)
from gen23.fields import make_field
from gen23.matgroup import charpoly, element_order, projective_order
from gen23.polys import poly_text
from gen23.repcheck import commutant_dimension, invariant_forms, meataxe_irreducible

F7 = make_field(7, 1)
params = Dim3Params(F7, 0, 1)
pair = build_dim3(params)
print("over GF(7), (a,b) = (0,1):")
print("  orders of x, y:", element_order(pair.x), element_order(pair.y))
print("  charpoly(xy):  ", poly_text(charpoly(pair.z)))
rep = dim3_irreducibility_conditions(params)
print("  irreducibility conditions all hold:", rep.overall)
verdict = meataxe_irreducible([pair.x, pair.y])
print("  MeatAxe: irreducible =", verdict.irreducible,
      ", absolutely irreducible =", verdict.absolutely_irreducible,
      ", commutant dim =", commutant_dimension([pair.x, pair.y]))
cl = scalar_power_classify_dim3(params)
print("  scalar powers of z at k <= 7:", cl.first_scalar_power())
print("  projective order of z:", projective_order(pair.z))
print()

print("a reducible point: b = -a - 2 with a = 3 over GF(7):")
params = Dim3Params(F7, 3, (-3 - 2) % 7)
verdict = meataxe_irreducible([build_dim3(params).x, build_dim3(params).y])
print("  MeatAxe: irreducible =", verdict.irreducible)
print("  invariant subspace (row basis):", verdict.witness)
print()

print("the unitary line over GF(9): a = -alpha with alpha^2 = alpha + 1:")
F9 = make_field(3, 2, (2, 2, 1))
alpha = F9.encode([0, 1])
a = F9.neg(alpha)
params = Dim3Params(F9, a, F9.pow(a, 3))  # b = a^q
pair = build_dim3(params)
print("  order(xy) =", element_order(pair.z), ", order([x,y]) =",
      element_order(pair.comm), "  (the PSL2(7) configuration)")
sol = invariant_forms([pair.x, pair.y], twist="sigma")
print("  invariant hermitian form exists:", sol.exists_nondegenerate())
print()

print("a monomial point: a = alpha + 1 (so ab = a^4 = 1):")
a = F9.add(alpha, 1)
params = Dim3Params(F9, a, F9.pow(a, 3))
res = dim3_monomial_basis(params)
print("  basis columns:", res.basis)
print("  x on that basis:", res.x_conj.rows)
print("  y on that basis:", res.y_conj.rows)
