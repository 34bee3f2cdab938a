import pytest

from gen23.constructions import Dim3Params, Dim5Params, build_dim3, build_dim5
from gen23.fields import make_field
from gen23.matgroup import Matrix
from gen23.repcheck import (
    brute_submodules_dim3,
    commutant_dimension,
    in_rowspace,
    invariant_forms,
    meataxe_irreducible,
    nullspace,
    spin,
)


def pair3(F, a, b):
    p = build_dim3(Dim3Params(F, a, b), allow_excluded=True)
    return p.x, p.y


def test_commutant_examples():
    F7 = make_field(7, 1)
    assert commutant_dimension([Matrix.identity(F7, 3)]) == 9
    x, y = pair3(F7, 0, 1)
    assert commutant_dimension([x, y]) == 1
    with pytest.raises(ValueError):
        commutant_dimension([])


def test_meataxe_absolutely_irreducible_case():
    F3 = make_field(3, 1)
    x, y = pair3(F3, 1, 2)
    v = meataxe_irreducible([x, y])
    assert v.irreducible and v.absolutely_irreducible and v.witness is None


def test_meataxe_reducible_with_plane_witness():
    # b = -a - 2 (the j=0 locus): the transpose fixes (1,1,1)
    F7 = make_field(7, 1)
    a = 3
    b = F7.sub(F7.neg(a), 2)
    x, y = pair3(F7, a, b)
    xt, yt = x.transpose(), y.transpose()
    w = (1, 1, 1)
    assert xt.matvec(w) == tuple(F7.neg(1) * 1 % 7 * c % 7 for c in w) or xt.matvec(w) == tuple(F7.mul(F7.neg(1), c) for c in w)
    assert yt.matvec(w) == w
    v = meataxe_irreducible([x, y])
    assert not v.irreducible and v.witness is not None
    for g in (x, y):
        for row in v.witness:
            assert in_rowspace(F7, [list(r) for r in v.witness], g.matvec(row))


def test_meataxe_reducible_p5_j0_fixed_vector():
    F5 = make_field(5, 1)
    x, y = pair3(F5, 2, 2)
    v = meataxe_irreducible([x, y])
    assert not v.irreducible
    u = (2, 2, 2)
    assert x.matvec(u) == u and y.matvec(u) == u
    # spec allows commutant >= 2 or an explicit reducibility witness
    assert v.witness is not None or commutant_dimension([x, y]) >= 2


def test_meataxe_dim5_reducible_witness_contains_w_and_yw():
    # (b,c) = (4g-1, -g^2-2g) carries the invariant plane <w, yw>
    F7 = make_field(7, 1)
    g = 1
    b = (4 * g - 1) % 7
    c = (-g * g - 2 * g) % 7
    pr = build_dim5(Dim5Params(F7, b, c))
    v = meataxe_irreducible([pr.x, pr.y])
    assert not v.irreducible and v.witness is not None
    w = (g % 7, (-g) % 7, 1, 6, 0)
    yw = pr.y.matvec(w)
    basis = [list(r) for r in v.witness]
    assert in_rowspace(F7, basis, w)
    assert in_rowspace(F7, basis, yw)


def test_meataxe_trivial_generators_legal():
    F5 = make_field(5, 1)
    I = Matrix.identity(F5, 3)
    v = meataxe_irreducible([I])
    assert not v.irreducible and v.witness is not None


def test_brute_submodules_examples():
    F7 = make_field(7, 1)
    x, y = pair3(F7, 0, 1)
    assert brute_submodules_dim3([x, y]) == []
    I = Matrix.identity(F7, 3)
    subs = brute_submodules_dim3([I, I])
    lines = [s for s in subs if s[0] == 1]
    planes = [s for s in subs if s[0] == 2]
    assert len(lines) == 7**2 + 7 + 1
    assert len(planes) == 7**2 + 7 + 1
    with pytest.raises(ValueError):
        brute_submodules_dim3([Matrix.identity(make_field(5, 1), 3)][:0] or [Matrix.identity(F7, 2)])


def test_brute_submodule_char2_witness_matches_meataxe():
    # b = -a w - 2 w^2 over GF(4) with a = w: a reducible point
    F4 = make_field(2, 2)
    w = F4.root_of_unity(3)
    a = w
    b = F4.mul(a, w)  # -a w - 2 w^2 = a w in characteristic 2
    x, y = pair3(F4, a, b)
    subs = brute_submodules_dim3([x, y])
    v = meataxe_irreducible([x, y])
    assert (not v.irreducible) and subs


def test_invariant_forms_hermitian_iff_b_eq_aq():
    F9 = make_field(3, 2, (2, 2, 1))
    al = F9.encode([0, 1])
    a = F9.neg(al)
    x, y = pair3(F9, a, F9.pow(a, 3))
    sol = invariant_forms([x, y], twist="sigma")
    assert sol.exists_nondegenerate()
    ch = sol.characters[0]
    assert ch.symmetrized is not None  # J can be scaled to J^T = J^sigma
    J = Matrix(F9, ch.symmetrized)
    assert J.transpose() == J.frobenius_map(1)
    d = 1
    lhs = x.transpose() * J * x.frobenius_map(d)
    assert lhs == J
    # and b != a^q kills it
    x2, y2 = pair3(F9, a, F9.add(F9.pow(a, 3), 1))
    sol2 = invariant_forms([x2, y2], twist="sigma")
    assert not sol2.exists_nondegenerate()


def test_invariant_forms_a0_none_even_up_to_scalars():
    F9 = make_field(3, 2, (2, 2, 1))
    al = F9.encode([0, 1])
    x, y = pair3(F9, 0, al)
    for tw in ("id", "sigma"):
        sol = invariant_forms([x, y], twist=tw, up_to_scalars=True)
        assert not sol.exists_nondegenerate()


def test_invariant_forms_dim5_hermitian():
    F4 = make_field(2, 2)
    q = 2
    for c in range(1, 4):
        b = F4.sub(F4.sub(F4.pow(c, q), c), 1)
        pr = build_dim5(Dim5Params(F4, b, c))
        from gen23.constructions import dim5_irreducibility_conditions

        if not dim5_irreducibility_conditions(Dim5Params(F4, b, c)).overall:
            continue
        sol = invariant_forms([pr.x, pr.y], twist="sigma")
        assert sol.exists_nondegenerate()


def test_invariant_forms_rejects_bad_twist():
    F7 = make_field(7, 1)
    x, y = pair3(F7, 0, 1)
    with pytest.raises(ValueError):
        invariant_forms([x, y], twist="sigma")  # 7^1 is not a square extension


def test_spin_and_nullspace_helpers():
    F5 = make_field(5, 1)
    x, y = pair3(F5, 0, 1)
    full = spin(F5, [(1, 0, 0)], [x, y])
    assert len(full) == 3
    ns = nullspace(F5, [[1, 2, 3]], 3)
    assert len(ns) == 2
    for v in ns:
        assert (v[0] + 2 * v[1] + 3 * v[2]) % 5 == 0
