import pytest

from gen23 import polys
from gen23.constructions import (
    Dim3Params,
    Dim5Params,
    ExcludedParameters,
    build_dim3,
    build_dim5,
    dim3_irreducibility_conditions,
    dim3_monomial_basis,
    dim5_irreducibility_conditions,
    expected_charpoly_dim3,
    expected_charpoly_dim5,
    scalar_power_classify_dim3,
    scalar_power_bounds_dim5,
    search_params,
    theorem_conditions,
)
from gen23.fields import make_field
from gen23.matgroup import charpoly


def test_build_dim3_examples_and_errors():
    F3 = make_field(3, 1)
    pr = build_dim3(Dim3Params(F3, 1, 2))
    assert (pr.x * pr.x).is_identity() and (pr.y ** 3).is_identity()
    assert pr.x.det() == 1 and pr.y.det() == 1
    assert charpoly(pr.z) == expected_charpoly_dim3(pr.params)
    with pytest.raises(ExcludedParameters):
        build_dim3(Dim3Params(F3, 0, 0))
    F2 = make_field(2, 1)
    with pytest.raises(ExcludedParameters):
        build_dim3(Dim3Params(F2, 0, 0))
    # with the override, characteristic 2 degenerates x to the identity
    pr = build_dim3(Dim3Params(F2, 0, 0), allow_excluded=True)
    assert pr.x.is_identity()


def test_build_dim5_examples_and_errors():
    F4 = make_field(2, 2)
    w = F4.root_of_unity(3)
    pr = build_dim5(Dim5Params(F4, w, w))
    assert (pr.x * pr.x).is_identity() and (pr.y ** 3).is_identity()
    assert charpoly(pr.z) == expected_charpoly_dim5(pr.params)
    with pytest.raises(ExcludedParameters):
        build_dim5(Dim5Params(F4, w, 0))


def test_dim3_conditions_examples():
    F5 = make_field(5, 1)
    rep = dim3_irreducibility_conditions(Dim3Params(F5, 2, 2))
    assert not rep["Lemma 3.1 (i) j=0"]
    F7 = make_field(7, 1)
    rep = dim3_irreducibility_conditions(Dim3Params(F7, 0, F7.neg(2)))
    assert not rep["Lemma 3.1 (ii) j=0"]
    assert dim3_irreducibility_conditions(Dim3Params(F7, 0, 1)).overall


def test_dim5_conditions_examples():
    F7 = make_field(7, 1)
    g = 1
    rep = dim5_irreducibility_conditions(
        Dim5Params(F7, (4 * g - 1) % 7, (-g * g - 2 * g) % 7)
    )
    assert not rep["Lemma 4.1 (ii)"]
    F2 = make_field(2, 1)
    assert dim5_irreducibility_conditions(Dim5Params(F2, 0, 1)).overall
    # with b = 0 condition (i) reduces to 3c^2-3c+1 != 0 and (ii) to 16c+9 != 0
    F13 = make_field(13, 1)
    for c in range(1, 13):
        rep = dim5_irreducibility_conditions(Dim5Params(F13, 0, c))
        v1 = (3 * c * c - 3 * c + 1) % 13
        v2 = (16 * c + 9) % 13
        assert rep["Lemma 4.1 (i)"] == (v1 != 0)
        assert rep["Lemma 4.1 (ii)"] == (v2 != 0)


def test_factored_form_of_dim5_condition_i():
    # b^2+3bc-b+3c^2-3c+1 = (b - (w-1)c + w)(b - (w^2-1)c + w^2)
    F7 = make_field(7, 1)
    w = F7.root_of_unity(3)
    for b in range(7):
        for c in range(7):
            v = (b * b + 3 * b * c - b + 3 * c * c - 3 * c + 1) % 7
            r1 = (b - (w - 1) * c + w) % 7
            r2 = (b - (w * w - 1) * c + w * w) % 7
            assert v == (r1 * r2) % 7


def test_scalar_power_classification_examples():
    F4 = make_field(2, 2)
    w = F4.root_of_unity(3)
    cl = scalar_power_classify_dim3(Dim3Params(F4, w, w), require_hypotheses=False)
    assert cl.z5_scalar and cl.z5_pattern
    cl = scalar_power_classify_dim3(Dim3Params(F4, w, 0))
    assert cl.z7_scalar and cl.z7_p2_pattern and not cl.z5_scalar
    F7 = make_field(7, 1)
    cl = scalar_power_classify_dim3(Dim3Params(F7, 0, 1))
    assert cl.first_scalar_power() is None
    with pytest.raises(ValueError):
        scalar_power_classify_dim3(Dim3Params(F7, 3, 5))  # ab = 1


def test_scalar_power_classification_matches_matrix_powers():
    for p, m in ((2, 2), (5, 1), (3, 2)):
        F = make_field(p, m)
        for a in range(F.q):
            for b in range(F.q):
                if (a, b) == (0, 0):
                    continue
                params = Dim3Params(F, a, b)
                cl = scalar_power_classify_dim3(params, require_hypotheses=False)
                pr = build_dim3(params)
                z5 = (pr.z ** 5).is_scalar()
                z7 = (pr.z ** 7).is_scalar()
                assert cl.z5_scalar == z5
                assert cl.z7_scalar == z7


def test_scalar_power_bounds_dim5():
    F2 = make_field(2, 1)
    rep = scalar_power_bounds_dim5(Dim5Params(F2, 0, 1))
    assert rep.ok and rep.details["proj_order_xy"] >= 10
    F4 = make_field(2, 2)
    w = F4.root_of_unity(3)
    rep = scalar_power_bounds_dim5(Dim5Params(F4, w, w))
    assert rep.ok and rep.details["proj_order_comm"] >= 5
    with pytest.raises(ValueError):
        scalar_power_bounds_dim5(Dim5Params(F2, 1, 1))  # reducible input


def test_theorem_conditions_examples():
    F49 = make_field(7, 2)
    root = min(polys.roots(polys.FieldPoly(F49, (3, 6, 1))))
    rep = theorem_conditions("SU3", root, F49)
    assert rep.overall and len(rep.items) == 5
    F5 = make_field(5, 1)
    rep = theorem_conditions("SL3", 3, F5)
    assert rep.failed() == ["Thm 3.5 (i)"]  # 3 = -2 in GF(5)
    F2 = make_field(2, 1)
    assert theorem_conditions("SL5", 1, F2).overall
    with pytest.raises(ValueError):
        theorem_conditions("SU3", 1, F5)  # not a square field


def test_search_deterministic_and_special_cases():
    F5 = make_field(5, 1)
    r1 = search_params("SL3", F5)
    r2 = search_params("SL3", F5)
    assert r1.free_param == r2.free_param == 2

    # q = 2: every b fails a condition, so the explicit (1,2) witness engages
    F2 = make_field(2, 1)
    r = search_params("SL3", F2)
    assert r.found and r.special is not None
    assert (r.params.a, r.params.b) == (1, 0)
    # q = 3: the generic search finds b = 2 (closure-certified elsewhere)
    F3 = make_field(3, 1)
    r = search_params("SL3", F3)
    assert r.found and r.special is None and r.free_param == 2

    assert not search_params("SL3", make_field(2, 2)).found  # q = 4 excluded

    assert not search_params("SU3", make_field(2, 2)).found
    assert not search_params("SU3", make_field(3, 2, (2, 2, 1))).found
    assert not search_params("SU3", make_field(5, 2, (1, 1, 1))).found

    F16 = make_field(2, 4, (1, 1, 0, 0, 1))
    r = search_params("SU3", F16)
    assert r.found and r.report.overall

    r = search_params("SL5", F16)
    assert r.found and r.special and r.unmet == ("Thm 4.6 (ii)",)
    # the witness has order 15 and minimal polynomial t^4+t^3+1
    c = r.params.c
    assert F16.element_order(c) == 15
    from gen23.certify import minimal_polynomial_over_prime

    assert minimal_polynomial_over_prime(F16, c) == (1, 0, 0, 1, 1)

    r = search_params("SU5", F16)
    assert r.found and r.unmet == ("Thm 4.8 (iii)",)

    r = search_params("SL5", make_field(2, 2))
    assert r.found and r.special  # b = c = w

    r = search_params("SL5", make_field(3, 1))
    assert r.found and r.report.overall
    # the stated witness class c = -2 also passes
    F3 = make_field(3, 1)
    assert theorem_conditions("SL5", (-2) % 3, F3)["Thm 4.6 (i)"]
    assert theorem_conditions("SL5", (-2) % 3, F3)["Thm 4.6 (ii)"]


def test_search_order_hint():
    F16 = make_field(2, 4, (1, 1, 0, 0, 1))
    r = search_params("SU3", F16, order_hint=15)
    assert r.found
    assert F16.element_order(r.free_param) == 15


def test_search_su3_q11_and_table_b_root():
    F121 = make_field(11, 2)
    r = search_params("SU3", F121)
    assert r.found and r.report.overall
    # the listed minimal polynomial's roots pass as well
    rts = polys.roots(polys.FieldPoly(F121, (2, 7, 1)))
    assert rts
    for root in rts:
        assert theorem_conditions("SU3", root, F121).overall


def test_monomial_basis_examples():
    F9 = make_field(3, 2, (2, 2, 1))
    al = F9.encode([0, 1])
    a = F9.add(al, 1)  # a^4 = 1, so ab = 1 with b = a^3
    res = dim3_monomial_basis(Dim3Params(F9, a, F9.pow(a, 3)))
    assert res.ok
    from gen23.constructions import _is_monomial_matrix

    assert _is_monomial_matrix(res.x_conj) and _is_monomial_matrix(res.y_conj)

    F25 = make_field(5, 2, (1, 1, 1))
    w = F25.encode([0, 1])
    res = dim3_monomial_basis(Dim3Params(F25, w, F25.pow(w, 5)))
    assert res.ok  # the monomial case of the q^2 = 25 analysis

    F7 = make_field(7, 1)
    res = dim3_monomial_basis(Dim3Params(F7, 0, 1))
    assert not res.ok and "ab != 1" in res.reason

    with pytest.raises(ValueError):
        dim3_monomial_basis(Dim3Params(make_field(2, 1), 1, 1))  # reducible
