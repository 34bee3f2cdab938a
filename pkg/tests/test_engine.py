import math

import pytest

from gen23.constructions import Dim3Params, build_dim3
from gen23.engine import closure, target_order
from gen23.fields import make_field
from gen23.matgroup import Matrix, element_order, projective_order


def test_closure_identity_only():
    F = make_field(5, 1)
    res = closure([Matrix.identity(F, 3)])
    assert res.order == 1 and res.scalar_subgroup_order == 1 and not res.truncated


def test_closure_cyclic_group():
    F = make_field(7, 1)
    y = build_dim3(Dim3Params(F, 0, 1)).y
    assert closure([y]).order == 3


def test_closure_sl3_2_witness():
    F2 = make_field(2, 1)
    pr = build_dim3(Dim3Params(F2, 1, 0))  # the (1,2) witness mod 2
    res = closure([pr.x, pr.y])
    assert res.order == 168 == target_order("SL", 3, 2).order


def test_closure_paths_agree():
    F3 = make_field(3, 1)
    pr = build_dim3(Dim3Params(F3, 1, 2))
    orders = {}
    for path in ("python", "bitset", "sorted"):
        res = closure([pr.x, pr.y], force_path=path)
        orders[path] = (res.order, res.scalar_subgroup_order)
        assert res.path == path
    assert len(set(orders.values())) == 1
    assert orders["python"][0] == 5616


def test_closure_generator_order_independent():
    F3 = make_field(3, 1)
    pr = build_dim3(Dim3Params(F3, 1, 2))
    a = closure([pr.x, pr.y]).order
    b = closure([pr.y, pr.x]).order
    c = closure([pr.y.inverse(), pr.x]).order
    assert a == b == c


def test_closure_divisibility_properties():
    F5 = make_field(5, 1)
    pr = build_dim3(Dim3Params(F5, 0, 2))
    res = closure([pr.x, pr.y])
    ox, oy = element_order(pr.x), element_order(pr.y)
    lcm = ox * oy // math.gcd(ox, oy)
    assert res.order % lcm == 0
    assert res.order % element_order(pr.z) == 0
    assert res.projective_order % projective_order(pr.z) == 0
    assert res.order % res.scalar_subgroup_order == 0


def test_closure_cap_truncation_flagged():
    F5 = make_field(5, 1)
    pr = build_dim3(Dim3Params(F5, 0, 2))
    res = closure([pr.x, pr.y], cap=1000, force_path="python")
    assert res.truncated
    res = closure([pr.x, pr.y], cap=1000, force_path="bitset")
    assert res.truncated


def test_closure_thread_count_does_not_change_result():
    F3 = make_field(3, 1)
    pr = build_dim3(Dim3Params(F3, 1, 2))
    r1 = closure([pr.x, pr.y], threads=1, force_path="bitset")
    r2 = closure([pr.x, pr.y], threads=2, force_path="bitset")
    assert (r1.order, r1.scalar_subgroup_order, r1.levels) == (
        r2.order, r2.scalar_subgroup_order, r2.levels)


def test_closure_rejects_mixed_fields():
    F5 = make_field(5, 1)
    F7 = make_field(7, 1)
    with pytest.raises(ValueError):
        closure([Matrix.identity(F5, 3), Matrix.identity(F7, 3)])


def test_target_orders():
    assert target_order("SL", 3, 2).order == 168
    t = target_order("SU", 3, 2)
    assert t.order == 216 and t.center_order == 3 and t.projective_order == 72
    assert target_order("SL", 5, 2).order == 9_999_360
    assert target_order("SL", 3, 5).order == 372_000
    assert target_order("SL", 3, 7).order == 5_630_688
    assert target_order("SL", 3, 8).order == 16_482_816
    assert target_order("SL", 3, 9).order == 42_456_960
    assert target_order("SU", 3, 4).order == 62_400
    assert target_order("SU", 3, 7).order == 5_663_616
    assert target_order("SU", 3, 5).order == 378_000
    assert target_order("SU", 3, 3).center_order == 1
    assert target_order("SL", 3, 4).center_order == 3


def test_target_order_cross_checked_by_transvection_closure():
    # independent check of the SL3(2) formula value by enumerating the group
    # from its elementary transvections
    F2 = make_field(2, 1)
    gens = []
    for (i, j) in ((0, 1), (1, 0), (1, 2), (2, 1)):
        rows = [[1 if r == c else 0 for c in range(3)] for r in range(3)]
        rows[i][j] = 1
        gens.append(Matrix(F2, rows))
    assert closure(gens).order == target_order("SL", 3, 2).order


def test_scalar_subgroup_counted():
    # SL3(4) contains the three scalar matrices with cube-one determinant
    F4 = make_field(2, 2)
    gens = []
    for lam in range(1, 4):
        for (i, j) in ((0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)):
            rows = [[1 if r == c else 0 for c in range(3)] for r in range(3)]
            rows[i][j] = lam
            gens.append(Matrix(F4, rows))
    res = closure(gens)
    assert res.order == 60480
    assert res.scalar_subgroup_order == 3
    assert res.projective_order == 20160
