import pytest

from gen23 import fields
from gen23.fields import element, make_field, parse_field


def test_default_modulus_is_deterministic_lex():
    # constant-upward comparison: t^4+t^3+1 precedes t^4+t+1
    assert make_field(2, 4).modulus == (1, 0, 0, 1, 1)
    assert make_field(2, 1).modulus == (0, 1)
    assert make_field(3, 2).modulus == (1, 0, 1)


def test_explicit_modulus_accepted():
    F9 = make_field(3, 2, (2, 2, 1))  # alpha^2 = alpha + 1
    al = element(F9, [0, 1])
    assert al * al == al + 1


def test_bad_inputs_rejected():
    with pytest.raises(ValueError):
        make_field(6, 1)
    with pytest.raises(ValueError):
        make_field(2, 2, (1, 1))  # wrong degree
    with pytest.raises(ValueError):
        make_field(2, 2, (0, 0, 1))  # t^2 is reducible


def test_field_arithmetic_axioms_small():
    for p, m in ((2, 2), (3, 2), (5, 1), (2, 3)):
        F = make_field(p, m)
        xs = [element(F, c) for c in range(F.q)]
        for a in xs:
            for b in xs:
                assert (a + b) - b == a
                assert a * b == b * a
                if b.code:
                    assert (a * b) / b == a
        one = element(F, 1)
        for a in xs:
            assert a * one == a


def test_element_order_alpha_f9_brute_oracle():
    F9 = make_field(3, 2, (2, 2, 1))
    al = element(F9, [0, 1])
    # brute repeated multiplication
    k, cur = 1, al
    while cur != element(F9, 1):
        cur = cur * al
        k += 1
    assert k == 8
    assert fields.element_order(al) == 8


def test_element_order_examples():
    F4 = make_field(2, 2)
    w = element(F4, F4.root_of_unity(3))
    assert fields.element_order(w) == 3
    assert fields.element_order(element(F4, 1)) == 1
    with pytest.raises(ZeroDivisionError):
        fields.element_order(element(F4, 0))


def test_order_divisor_property():
    for p, m in ((2, 4), (3, 2), (5, 2)):
        F = make_field(p, m)
        for c in range(1, F.q):
            a = element(F, c)
            n = fields.element_order(a)
            assert a**n == element(F, 1)
            for d in range(1, n):
                if n % d == 0:
                    assert a**d != element(F, 1)


def test_frobenius_examples_and_automorphism():
    F9 = make_field(3, 2, (2, 2, 1))
    al = element(F9, [0, 1])
    assert fields.frobenius(al) == al**3
    F4 = make_field(2, 2)
    w = element(F4, F4.root_of_unity(3))
    assert fields.frobenius(w) == w * w
    F5 = make_field(5, 1)
    assert fields.frobenius(element(F5, 3)) == element(F5, 3)
    F8 = make_field(2, 3)
    with pytest.raises(ValueError):
        fields.frobenius(element(F8, 2))  # no square-root field
    # field automorphism, and an involution over the square subfield
    for c in range(9):
        for d in range(9):
            a, b = element(F9, c), element(F9, d)
            assert fields.frobenius(a + b) == fields.frobenius(a) + fields.frobenius(b)
            assert fields.frobenius(a * b) == fields.frobenius(a) * fields.frobenius(b)
        assert fields.frobenius(fields.frobenius(element(F9, c))) == element(F9, c)


def test_subfield_generated_examples():
    F4 = make_field(2, 2)
    w = element(F4, F4.root_of_unity(3))
    assert fields.subfield_generated(w**3).size == 2  # the s=3, q=4 exception
    F16 = make_field(2, 4, (1, 1, 0, 0, 1))
    t = element(F16, 2)
    assert fields.element_order(t) == 15
    assert fields.subfield_generated(t**5).size == 4  # the s=5, q=16 exception
    F8 = make_field(2, 3)
    a = element(F8, 2)
    assert fields.element_order(a) == 7
    assert fields.subfield_generated(a**3).size == 8


def test_subfield_full_iff_minpoly_degree_m():
    for p, m in ((2, 4), (3, 2)):
        F = make_field(p, m)
        for c in range(1, F.q):
            # Frobenius orbit length is the minimal polynomial degree
            orbit = {c}
            cur = F.frobenius(c, 1)
            while cur not in orbit:
                orbit.add(cur)
                cur = F.frobenius(cur, 1)
            d = fields.subfield_generated(element(F, c)).d
            assert d == len(orbit)
            assert (d == m) == (len(orbit) == m)


def test_serialization_round_trip():
    F = make_field(3, 2, (2, 2, 1))
    assert str(F) == "3^2/2,2,1"
    assert parse_field(str(F)) is F
    a = element(F, [2, 1])
    assert str(a) == "2,1"
    assert element(F, str(a)) == a
    assert parse_field("7^1/0,1").q == 7
    assert parse_field("2^4").modulus == (1, 0, 0, 1, 1)


def test_roots_of_unity_per_order_table():
    # order 3/(3,p): 1 in characteristic 3, else a genuine cube root
    assert make_field(3, 1).root_of_unity(3) == 1
    F4 = make_field(2, 2)
    w = F4.root_of_unity(3)
    assert F4.element_order(w) == 3
    # order 4/(4,p^2): 1 in characteristic 2
    assert make_field(2, 2).root_of_unity(4) == 1
    F5 = make_field(5, 1)
    assert F5.element_order(F5.root_of_unity(4)) == 4
    # order 5/(5,p): 1 in characteristic 5
    assert make_field(5, 1).root_of_unity(5) == 1
    F16 = make_field(2, 4)
    assert F16.element_order(F16.root_of_unity(5)) == 5
    with pytest.raises(ValueError):
        make_field(2, 2).root_of_unity(5)  # needs an extension


def test_extension_embedding_is_homomorphism():
    F4 = make_field(2, 2)
    E, emb = F4.extension(2)
    assert E.q == 16
    for a in range(4):
        for b in range(4):
            assert emb(F4.add(a, b)) == E.add(emb(a), emb(b))
            assert emb(F4.mul(a, b)) == E.mul(emb(a), emb(b))
    # the image of a generator keeps its multiplicative order
    w = F4.root_of_unity(3)
    assert E.element_order(emb(w)) == 3
