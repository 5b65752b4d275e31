"""Cyclotomic integers and sparse integer polynomials."""

import pytest
from hypothesis import given, settings, strategies as st

from abelinv import IntPolynomial, apply_group_action, cyclotomic_polynomial, parse_group
from abelinv.numtheory import euler_phi
from abelinv.polynom import CycPolynomial, CyclotomicInt


def test_cyclotomic_polynomial_frozen():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_cyclotomic_degree_is_phi():
    for e in range(1, 40):
        assert len(cyclotomic_polynomial(e)) - 1 == euler_phi(e)


def test_cyclotomic_product_over_divisors():
    # prod over d | n of the d-th polynomial gives x^n - 1
    from abelinv import divisors

    for n in range(1, 31):
        acc = [1]
        for d in divisors(n):
            phi_d = cyclotomic_polynomial(d)
            out = [0] * (len(acc) + len(phi_d) - 1)
            for i, a in enumerate(acc):
                for j, b in enumerate(phi_d):
                    out[i + j] += a * b
            acc = out
        expected = [-1] + [0] * (n - 1) + [1]
        assert acc == expected


def test_cyclotomic_105_has_coefficient_minus_two():
    assert cyclotomic_polynomial(105)[7] == -2


def test_zeta_relations():
    z = CyclotomicInt.zeta_power
    assert z(4, 2) == CyclotomicInt.integer(4, -1)
    assert z(6, 3) == CyclotomicInt.integer(6, -1)
    for e in (2, 3, 4, 5, 6, 8, 12):
        acc = CyclotomicInt.zero(e)
        for t in range(e):
            acc = acc + z(e, t)
        assert acc == CyclotomicInt.zero(e)
        assert z(e, e) == CyclotomicInt.integer(e, 1)


def test_zeta_power_is_multiplicative():
    for e in (5, 8, 12):
        for s in range(e):
            for t in range(e):
                lhs = CyclotomicInt.zeta_power(e, s) * CyclotomicInt.zeta_power(e, t)
                assert lhs == CyclotomicInt.zeta_power(e, (s + t) % e)


def test_golden_section_relation_in_fifth_roots():
    # s = zeta + zeta^4 satisfies s^2 + s - 1 = 0
    s = CyclotomicInt.zeta_power(5, 1) + CyclotomicInt.zeta_power(5, 4)
    val = s * s + s - CyclotomicInt.integer(5, 1)
    assert val == CyclotomicInt.zero(5)


def test_integer_detection():
    three = CyclotomicInt.integer(7, 3)
    assert three.is_integer() and three.integer_value() == 3
    z = CyclotomicInt.zeta_power(7, 2)
    assert not z.is_integer()
    with pytest.raises(ValueError):
        z.integer_value()


def test_polynomial_constructors_and_queries():
    p = IntPolynomial.variable(3, 0)
    q = IntPolynomial.constant(3, 2)
    assert (p + q).coefficient([1, 0, 0]) == 1
    assert (p + q).coefficient([0, 0, 0]) == 2
    assert (p + q).coefficient([0, 1, 0]) == 0
    assert IntPolynomial.zero(2).term_count() == 0
    cube = p * p * p
    assert cube.total_degree() == 3
    assert cube.support() == [(3, 0, 0)]
    assert (cube * 2).coefficient_sum() == 2


def test_polynomial_zero_coefficients_dropped():
    p = IntPolynomial(2, {(1, 0): 1, (0, 1): 0})
    assert p.term_count() == 1
    assert (p - p).term_count() == 0


small_poly = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)),
    st.integers(-4, 4),
    max_size=5,
).map(lambda d: IntPolynomial(2, d))


@given(small_poly, small_poly, small_poly)
@settings(max_examples=60)
def test_polynomial_ring_axioms(p, q, r):
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + (-p) == IntPolynomial.zero(2)


@given(small_poly, small_poly)
def test_coefficient_sum_is_homomorphism(p, q):
    assert (p * q).coefficient_sum() == p.coefficient_sum() * q.coefficient_sum()
    assert (p + q).coefficient_sum() == p.coefficient_sum() + q.coefficient_sum()


def test_str_descending_lexicographic():
    x0, x1, x2 = (IntPolynomial.variable(3, i) for i in range(3))
    p = x0 * x0 * x0 + x1 * x1 * x1 + x2 * x2 * x2 + 3 * (x0 * x1 * x2)
    assert str(p) == "x0^3 + 3*x0*x1*x2 + x1^3 + x2^3"
    assert str(IntPolynomial.zero(3)) == "0"
    assert str(x0 - x1) == "x0 - x1"


def test_json_round_trip_ascending_order():
    x0, x1 = (IntPolynomial.variable(2, i) for i in range(2))
    p = 2 * (x0 * x0) - x1 + IntPolynomial.constant(2, 7)
    obj = p.to_json_obj()
    exps = [tuple(t["exponents"]) for t in obj]
    assert exps == sorted(exps)
    back = IntPolynomial.from_json_obj(2, obj)
    assert back == p


def test_permute_variables():
    x0, x1, x2 = (IntPolynomial.variable(3, i) for i in range(3))
    p = x0 * x0 * x1
    swapped = p.permute_variables([1, 0, 2])  # x0 <-> x1
    assert swapped == x1 * x1 * x0
    assert p.permute_variables([0, 1, 2]) == p
    with pytest.raises(ValueError):
        p.permute_variables([0, 0, 1])


def test_group_translation_action():
    g = parse_group("C2")
    x0, x1 = (IntPolynomial.variable(2, i) for i in range(2))
    p = x0 * x0 * x1
    moved = apply_group_action(g, (1,), p)
    assert moved == x1 * x1 * x0


def test_group_action_composes():
    g = parse_group("C2xC2")
    xs = [IntPolynomial.variable(4, i) for i in range(4)]
    p = xs[0] * xs[1] + 2 * (xs[2] * xs[3] * xs[3])
    for g1 in g.elements():
        for g2 in g.elements():
            once = apply_group_action(g, g2, apply_group_action(g, g1, p))
            both = apply_group_action(g, g.add(g1, g2), p)
            assert once == both
    assert apply_group_action(g, g.zero(), p) == p


def test_group_action_rejects_wrong_width():
    g = parse_group("C3")
    with pytest.raises(ValueError):
        apply_group_action(g, (1,), IntPolynomial.variable(2, 0))


def test_cyclotomic_coefficient_polynomials():
    one = CycPolynomial.one(3, 2)
    assert (one * one).terms == one.terms
    z = CyclotomicInt.zeta_power(3, 1)
    p = CycPolynomial(3, 1, {(1,): z})
    cube = p * p * p  # zeta^3 = 1 collapses the coefficient
    assert cube.to_integer_polynomial() == IntPolynomial(1, {(3,): 1})
    with pytest.raises(ValueError):
        p.to_integer_polynomial()
