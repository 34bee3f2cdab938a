from collections import Counter

import pytest

from gen23.certify import (
    dim3_case_label,
    is_unitary,
    minimal_polynomial_over_prime,
    nongeneration_allpairs,
    nongeneration_canonical,
    special_linear_group_3,
    unitary_group_3,
    verify_generation,
)
from gen23.constructions import Dim3Params, Dim5Params, build_dim3, build_dim5, search_params
from gen23.engine import target_order
from gen23.fields import make_field
from gen23.matgroup import Matrix


def test_unitary_group_enumeration_orders():
    G4 = unitary_group_3(2)
    assert G4.order == 216
    assert len(G4.scalar_codes) == 3
    # every element is unitary for the antidiagonal form
    for rows in G4.elements[:25]:
        assert is_unitary(Matrix(G4.field, rows.tolist()))


def test_sl3_4_enumeration():
    G = special_linear_group_3(4)
    assert G.order == 60480
    assert len(G.scalar_codes) == 3


def test_verify_generation_full_mode():
    F3 = make_field(3, 1)
    pr = build_dim3(Dim3Params(F3, 1, 2))
    rep = verify_generation(pr, target_order("SL", 3, 3))
    assert rep.ok and rep.details["mode"] == "full"
    assert rep.details["closure_order"] == 5616
    assert rep.details["xy^6_nonscalar"]


def test_verify_generation_detects_non_generation():
    F3 = make_field(3, 1)
    pr = build_dim3(Dim3Params(F3, 0, 1))  # proper subgroup of order 432
    rep = verify_generation(pr, target_order("SL", 3, 3))
    assert not rep.ok


def test_verify_generation_partial_mode():
    F4 = make_field(2, 2)
    res = search_params("SL5", F4)
    pr = build_dim5(res.params)
    rep = verify_generation(pr, target_order("SL", 5, 4), cap=1 << 20,
                            conditions=res.report)
    assert rep.details["mode"] == "partial"
    assert rep.ok
    checks = rep.details["checks"]
    assert checks["absolutely_irreducible"]
    assert checks["no_invariant_form"]


def test_allpairs_psu3_4():
    cert = nongeneration_allpairs("psu3_4")
    assert cert.verdict
    assert cert.group.projective_order == 72
    assert cert.pairs_covered == cert.detail["involution_classes"] * int(
        cert.detail["order3_cosets"]
    )
    for case in cert.cases:
        assert cert.group.projective_order % case.projective_closure_order == 0
        assert case.projective_closure_order < cert.group.projective_order


def test_canonical_psu3_4_and_9_labels():
    cert = nongeneration_canonical(2)
    labels = {c.case_id: c.label for c in cert.cases}
    assert labels["a=0,1"] == "reducible"  # a = omega
    assert labels["a=1,1"] == "reducible"  # a = omega^2
    assert labels["a=1,0"] == "reducible"  # a = 1

    F9 = make_field(3, 2, (2, 2, 1))
    cert9 = nongeneration_canonical(3, field=F9)
    labels = {c.case_id: c.label for c in cert9.cases}
    orders = {c.case_id: c.closure_order for c in cert9.cases}
    assert labels["a=0,1"] == "reducible"  # alpha
    assert labels["a=1,1"] == "monomial"  # alpha + 1
    assert labels["a=0,2"] == "PSL2(7)" and orders["a=0,2"] == 168  # -alpha
    assert labels["a=0,0"] == "other-proper"  # Alt(4)
    assert orders["a=0,0"] == 12
    counts = Counter(c.label for c in cert9.cases)
    assert counts["PSL2(7)"] == 2 and counts["monomial"] == 3


def test_case_label_alt5_on_q25():
    F25 = make_field(5, 2, (1, 1, 1))
    # a = 3: the z^5-scalar parameter inside the prime field
    label, det = dim3_case_label(Dim3Params(F25, 3, 3))
    assert label == "Alt(5)-factor"
    w = F25.encode([0, 1])
    label, det = dim3_case_label(Dim3Params(F25, F25.mul(3, w), F25.pow(F25.mul(3, w), 5)))
    assert label == "Alt(5)-factor"


def test_minimal_polynomial_over_prime():
    F9 = make_field(3, 2, (2, 2, 1))
    al = F9.encode([0, 1])
    assert minimal_polynomial_over_prime(F9, al) == (2, 2, 1)
    assert minimal_polynomial_over_prime(F9, 2) == (1, 1)  # t + 1 = t - 2
