import json

import pytest

from gen23 import polys
from gen23.constructions import Dim3Params, Dim5Params, build_dim3, build_dim5
from gen23.fields import make_field
from gen23.matgroup import (
    Matrix,
    brute_order,
    charpoly,
    commutator,
    element_order,
    invariant_factors,
    is_conjugate,
    matrix_from_json,
    min_poly,
    projective_order,
)


def pair3(F, a, b):
    p = build_dim3(Dim3Params(F, a, b), allow_excluded=True)
    return p.x, p.y


def test_charpoly_identity_dim3():
    F7 = make_field(7, 1)
    x, y = pair3(F7, 0, 1)
    cp = charpoly(x * y)
    assert cp.codes == (F7.neg(1), 0, F7.neg(1), 1)  # t^3 - t^2 - 1
    I3 = Matrix.identity(F7, 3)
    assert charpoly(I3).codes == (6, 3, 4, 1)  # (t-1)^3 over GF(7)


def test_cayley_hamilton_spot():
    import random

    rng = random.Random(2)
    for p, m in ((5, 1), (2, 2), (3, 2)):
        F = make_field(p, m)
        for _ in range(8):
            M = Matrix(F, [[rng.randrange(F.q) for _ in range(3)] for _ in range(3)])
            cp = charpoly(M)
            acc = Matrix(F, [[0] * 3 for _ in range(3)])
            for c in reversed(cp.codes):
                acc = acc * M + Matrix.scalar(F, 3, c)
            assert all(v == 0 for row in acc.rows for v in row)


def test_element_orders_with_brute_oracle():
    F9 = make_field(3, 2, (2, 2, 1))
    al = F9.encode([0, 1])
    a = F9.neg(al)
    b = F9.pow(a, 3)
    x, y = pair3(F9, a, b)
    assert element_order(x) == brute_order(x) == 2
    assert element_order(y) == brute_order(y) == 3
    z = x * y
    assert element_order(z) == brute_order(z) == 7
    c = commutator(x, y)
    assert element_order(c) == brute_order(c) == 4


def test_element_order_large_without_iteration():
    # ord(xy) = 69905 = 5 * 11 * 31 * 41 for the SL5(16) witness: the exact
    # method must agree with the factored structure without 69905 products
    F16 = make_field(2, 4, (1, 1, 0, 0, 1))
    c = min(r for r in polys.roots(polys.FieldPoly(F16, (1, 0, 0, 1, 1))))
    pr = build_dim5(Dim5Params(F16, 0, c))
    n = element_order(pr.z)
    assert n % 41 == 0
    assert (pr.z**n).is_identity()
    for ell in (5, 41):
        assert not (pr.z ** (n // ell)).is_identity()


def test_projective_order_examples():
    F7 = make_field(7, 1)
    assert projective_order(Matrix.scalar(F7, 3, 3)) == 1
    F4 = make_field(2, 2)
    w = F4.root_of_unity(3)
    x, y = pair3(F4, w, 1)
    assert projective_order(x * y) == 5
    x, y = pair3(F4, 0, w)
    assert projective_order(x * y) == 7


def test_projective_order_divides_order():
    import random

    rng = random.Random(9)
    F5 = make_field(5, 1)
    count = 0
    while count < 10:
        M = Matrix(F5, [[rng.randrange(5) for _ in range(3)] for _ in range(3)])
        if M.det() == 0:
            continue
        count += 1
        n = element_order(M)
        k = projective_order(M)
        assert n % k == 0
        assert (M**k).is_scalar()
        for d in range(1, k):
            if k % d == 0:
                assert not (M**d).is_scalar()


def test_invariant_factors_shapes():
    F7 = make_field(7, 1)
    I3 = Matrix.identity(F7, 3)
    inv = invariant_factors(I3)
    assert len(inv) == 3
    assert all(f.codes == (6, 1) for f in inv)  # t - 1 three times
    # companion matrix of t^3 - 2t^2 + 3t - 1 is cyclic
    C = Matrix(F7, [[0, 0, 1], [1, 0, 4], [0, 1, 2]])
    inv = invariant_factors(C)
    assert len(inv) == 1
    assert inv.factors[0] == charpoly(C)
    # product of invariant factors is the characteristic polynomial, and the
    # divisibility chain holds
    x, y = (build_dim3(Dim3Params(F7, 2, 2)).x, build_dim3(Dim3Params(F7, 2, 2)).y)
    for M in (x, y, x * y):
        ch = invariant_factors(M)
        prod = polys.FieldPoly(F7, (1,))
        last = None
        for f in ch:
            prod = prod * f
            if last is not None:
                assert (f % last).is_zero()
            last = f
        assert prod == charpoly(M)


def test_single_invariant_factor_for_irreducible_pair_product():
    F7 = make_field(7, 1)
    x, y = pair3(F7, 0, 1)
    assert len(invariant_factors(x * y)) == 1


def test_is_conjugate():
    F9 = make_field(3, 2, (2, 2, 1))
    al = F9.encode([0, 1])
    a = F9.neg(al)
    b = F9.pow(a, 3)
    x, y = pair3(F9, a, b)
    z = x * y
    assert is_conjugate(z, z)
    assert is_conjugate(z.frobenius_map(1), z.inverse())  # b = a^q
    F7 = make_field(7, 1)
    w = F7.root_of_unity(3)
    assert w != 1
    d1 = Matrix(F7, [[1, 0, 0], [0, 1, 0], [0, 0, w]])
    d2 = Matrix(F7, [[1, 0, 0], [0, w, 0], [0, 0, w]])
    assert not is_conjugate(d1, d2)
    with pytest.raises(ValueError):
        is_conjugate(Matrix.identity(F7, 3), Matrix.identity(F9, 3))


def test_min_poly_divides_charpoly():
    import random

    rng = random.Random(4)
    F4 = make_field(2, 2)
    for _ in range(10):
        M = Matrix(F4, [[rng.randrange(4) for _ in range(3)] for _ in range(3)])
        mp = min_poly(M)
        cp = charpoly(M)
        assert (cp % mp).is_zero()


def test_matrix_json_round_trip():
    F9 = make_field(3, 2, (2, 2, 1))
    x, y = pair3(F9, 4, 7)
    blob = json.dumps(x.to_json())
    back = matrix_from_json(json.loads(blob))
    assert back == x
    assert back.field is x.field


def test_dim5_pair_shape():
    F2 = make_field(2, 1)
    pr = build_dim5(Dim5Params(F2, 0, 1))
    assert (pr.x * pr.x).is_identity()
    assert (pr.y ** 3).is_identity()
    assert pr.x.det() == 1 and pr.y.det() == 1
    assert charpoly(pr.z).codes == (1, 1, 0, 1, 1, 1)  # t^5+t^4+t^3+t^2+t+1 over GF(2)
