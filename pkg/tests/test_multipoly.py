from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from hexagrammum.multipoly import ONE, P, Q, R, MultiPoly

p, q, r = sympy.symbols("p q r")

exps = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
coeffs = st.fractions(min_value=-9, max_value=9, max_denominator=5)
polys = st.dictionaries(exps, coeffs, max_size=6).map(MultiPoly)
points = st.tuples(coeffs, coeffs, coeffs)


def to_sympy(f: MultiPoly):
    return sum(
        (sympy.Rational(c.numerator, c.denominator) * p**i * q**j * r**k for (i, j, k), c in f.terms.items()),
        sympy.Integer(0),
    )


@given(polys, polys)
def test_ring_operations_match_sympy(f, g):
    assert sympy.expand(to_sympy(f * g) - to_sympy(f) * to_sympy(g)) == 0
    assert sympy.expand(to_sympy(f + g) - to_sympy(f) - to_sympy(g)) == 0
    assert sympy.expand(to_sympy(f - g) - to_sympy(f) + to_sympy(g)) == 0


@given(polys, points)
def test_evaluate_is_a_homomorphism(f, x):
    g = f * f + P
    assert g.evaluate(x) == f.evaluate(x) ** 2 + x[0]


@given(polys, polys.filter(bool))
def test_exact_division_recovers_factor(f, g):
    assert (f * g).exact_div(g) == f


@given(polys, polys.filter(bool))
def test_divmod_reconstructs(f, g):
    quo, rem = f.divmod(g)
    assert quo * g + rem == f


def test_zero_division():
    with pytest.raises(ZeroDivisionError):
        P.divmod(MultiPoly())


def test_no_zero_terms_stored():
    f = P - P
    assert f.is_zero() and f.terms == {} and not f
    assert MultiPoly({(1, 0, 0): 0}).is_zero()


def test_equality_with_scalars_and_hashing():
    assert ONE == 1 and (P - P) == 0
    assert hash(P * Q) == hash(Q * P)
    assert {P + Q: 1}[Q + P] == 1


def test_degree_content_leading():
    f = 6 * P**2 * Q - 4 * R + Fraction(2, 3)
    assert f.degree() == 3 and f.degree(0) == 2 and f.degree(2) == 1
    assert f.content() == Fraction(2, 3)
    assert f.leading() == ((2, 1, 0), 6)
    assert MultiPoly().degree() == -1


def test_substitute_composes():
    f = P * Q - R
    g = f.substitute([Q, P, ONE])
    assert g == P * Q - 1


def test_str_form():
    assert str(P * Q - 2 * R + 1) == "p*q - 2*r + 1"
    assert str(MultiPoly()) == "0"
