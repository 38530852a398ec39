"""Exact arithmetic: Laurent polynomials, rational functions, cyclotomics,
and the duck-typed linear algebra kernels."""

import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from linkslope.algebra import (
    CyclotomicElement, LaurentPoly, RationalFunction, bareiss_det,
    cyclotomic_polynomial, exact_divide, hermitian_signature, kernel_basis,
    matrix_rank, multivariate_gcd, parse_poly, parse_rational, root_of_unity,
    smith_invariants, solve_system,
)
from linkslope.errors import ParseError

F = Fraction
TT = ("t", "t1")


def tp(text):
    return parse_poly(text, TT)


# --- Laurent polynomials --------------------------------------------------


def test_constructors_and_flags():
    z = LaurentPoly.zero(TT)
    one = LaurentPoly.one(TT)
    t = LaurentPoly.variable(TT, "t")
    assert z.is_zero() and not z
    assert one.is_constant() and one.constant_value() == 1
    assert t.is_monomial() and not t.is_constant()
    m = LaurentPoly.monomial(TT, (2, -1), F(3, 2))
    assert m == tp("3/2 * t^2 * t1^-1")


def test_parse_str_round_trip():
    p = tp("(t - 1)*(t1 - 1) + 2*t^-3")
    q = parse_poly(str(p), TT)
    assert p == q


def test_parse_rejects_junk():
    with pytest.raises(ParseError):
        parse_poly("t +", TT)
    with pytest.raises(ParseError):
        parse_poly("x - 1", TT)
    with pytest.raises(ParseError):
        parse_rational("(t", TT)


def test_arithmetic_identities():
    p = tp("t^2 - t1 + 3")
    q = tp("t1^-2 + t")
    assert (p + q) - q == p
    assert p * q == q * p
    assert p * (q + 1) == p * q + p
    assert (p - p).is_zero()
    assert p ** 3 == p * p * p
    assert (-p) + p == LaurentPoly.zero(TT)


def test_unit_equal_ignores_monomial_units():
    p = tp("(t - 1)*(t1 - 1)")
    assert p.unit_equal(tp("-t^-4*t1*(t - 1)*(t1 - 1)"))
    assert not p.unit_equal(tp("(t - 1)^2"))
    assert LaurentPoly.zero(TT).unit_equal(LaurentPoly.zero(TT))
    assert not p.unit_equal(LaurentPoly.zero(TT))


def test_derivative_and_substitute_inverse():
    p = tp("t^3*t1 - 2*t^-1")
    assert p.derivative("t") == tp("3*t^2*t1 + 2*t^-2")
    q = p.substitute_inverse("t")
    assert q == tp("t^-3*t1 - 2*t")


def test_exact_divide_and_gcd():
    a = tp("(t - 1)^2*(t1 + 1)")
    b = tp("(t - 1)*(t1 + 1)")
    q = exact_divide(a, b)
    assert q is not None and q.unit_equal(tp("t - 1"))
    assert exact_divide(tp("t + 1"), tp("t - 1")) is None
    g = multivariate_gcd([a, tp("(t - 1)*(t + 1)*(t1 + 1)")])
    assert g.unit_equal(b)
    assert multivariate_gcd([LaurentPoly.zero(TT), a]).unit_equal(a)


def test_evaluate_at_cyclotomic_point():
    p = tp("t*t1 - t^-1 + 2")
    z = root_of_unity(5)
    w = root_of_unity(3)
    got = p.evaluate([z, w])
    assert got == z * w - z ** -1 + CyclotomicElement.from_rational(2)


def test_evaluate_at_rational_point():
    p = tp("t^2 - t1^-1")
    assert p.evaluate([F(1, 2), F(3)]) == F(1, 4) - F(1, 3)


# --- rational functions ---------------------------------------------------


def test_rational_reduction_and_equality():
    r = parse_rational("(t^2 - 1) / (t - 1)", ("t",))
    assert r == parse_rational("t + 1", ("t",))
    assert r.is_polynomial() and r.as_laurent() == parse_poly("t + 1", ("t",))
    s = parse_rational("1 / (t - 1)", ("t",))
    assert (s * (parse_rational("t - 1", ("t",)))) == parse_rational("1", ("t",))


def test_rational_field_ops():
    a = parse_rational("t / (t1 - 1)", TT)
    b = parse_rational("(t + 1) / t1", TT)
    assert a / a == RationalFunction.from_const(TT, 1)
    assert a * b / b == a
    assert a - a == RationalFunction.from_const(TT, 0)
    assert (a + b) - b == a
    assert a ** -2 == 1 / (a * a)


def test_rational_evaluate_matches_parts():
    r = parse_rational("(t - 2) / (t1 + 3)", TT)
    assert r.evaluate([F(7), F(1)]) == F(5, 4)
    z = root_of_unity(4)
    got = r.evaluate([z, z])
    want = (z - 2 * z.one_like()) / (z + 3 * z.one_like())
    assert got == want


# --- cyclotomic numbers ---------------------------------------------------


def test_cyclotomic_polynomial_small():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_root_of_unity_basics():
    z = root_of_unity(3)
    assert z ** 3 == z.one_like()
    assert 1 + z + z ** 2 == z.zero_like()
    assert z.conjugate() == z ** -1
    assert abs(z.to_complex() - cmath.exp(2j * cmath.pi / 3)) < 1e-12
    m = root_of_unity(2)
    assert m.is_rational() and m.rational_value() == -1


def test_cyclotomic_canonical_conductor():
    # zeta_4^2 is just -1; arithmetic across conductors promotes correctly
    a = root_of_unity(4, 2)
    assert a == CyclotomicElement.from_rational(-1)
    b = root_of_unity(6) + root_of_unity(4)
    assert b.promote(12) == b
    assert (root_of_unity(6) ** 6).is_rational()


def test_cyclotomic_inverse_and_division():
    z = root_of_unity(7, 3)
    assert z * z.inverse() == z.one_like()
    x = 2 - z - z ** -1
    assert (x / x) == z.one_like()
    assert x.is_real()


def test_cyclotomic_galois_and_reality():
    z = root_of_unity(5)
    tr = z + z.galois(2) + z.galois(3) + z.galois(4)
    assert tr.is_rational() and tr.rational_value() == -1
    assert (z + z.conjugate()).is_real()
    assert not z.is_real()


# --- linear algebra -------------------------------------------------------


def test_rank_kernel_solve_over_fractions():
    m = [[F(1), F(2), F(3)], [F(2), F(4), F(6)], [F(0), F(1), F(1)]]
    assert matrix_rank(m) == 2
    ker = kernel_basis(m)
    assert len(ker) == 1
    v = ker[0]
    for row in m:
        assert sum(a * x for a, x in zip(row, v)) == 0
    sol = solve_system([[F(2), F(0)], [F(0), F(4)]], [F(6), F(2)])
    assert sol == [F(3), F(1, 2)]


def test_rank_over_rational_functions():
    t = parse_rational("t", ("t",))
    one = RationalFunction.from_const(("t",), 1)
    m = [[t, one], [t * t, t]]
    assert matrix_rank(m) == 1
    assert len(kernel_basis(m)) == 1


def test_bareiss_det_matches_cofactor():
    m = [[F(2), F(1), F(0)], [F(1), F(-1), F(3)], [F(4), F(0), F(1)]]
    det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
           - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
           + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    assert bareiss_det(m) == det


def test_hermitian_signature_diag():
    sig, nul = hermitian_signature([[2.0, 0.0], [0.0, -3.0]])
    assert (sig, nul) == (0, 0)
    sig, nul = hermitian_signature([[1.0, 0.0], [0.0, 0.0]])
    assert (sig, nul) == (1, 1)
    sig, nul = hermitian_signature([[0j, 1j], [-1j, 0j]])
    assert (sig, nul) == (0, 0)


def test_smith_invariants():
    assert smith_invariants([[2, 0], [0, 3]]) == [1, 6]
    assert smith_invariants([[0, 2], [0, 0]]) == [2]
    assert smith_invariants([[1, 0], [0, 1]]) == [1, 1]


# --- property checks ------------------------------------------------------

coeffs = st.integers(min_value=-4, max_value=4)
exps = st.tuples(st.integers(min_value=-2, max_value=2),
                 st.integers(min_value=-2, max_value=2))
polys = st.dictionaries(exps, coeffs, max_size=4).map(
    lambda d: LaurentPoly(TT, {e: F(c) for e, c in d.items() if c}))


@given(polys, polys, polys)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)


@given(polys, polys)
@settings(max_examples=40, deadline=None)
def test_evaluation_is_a_homomorphism(p, q):
    point = [root_of_unity(5), root_of_unity(3)]
    assert (p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point)
    assert (p + q).evaluate(point) == p.evaluate(point) + q.evaluate(point)


@given(polys, polys)
@settings(max_examples=25, deadline=None)
def test_gcd_divides_both(p, q):
    g = multivariate_gcd([p, q])
    if g.is_zero():
        assert p.is_zero() and q.is_zero()
        return
    assert exact_divide(p, g) is not None
    assert exact_divide(q, g) is not None
