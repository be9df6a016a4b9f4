from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from heisenweyl.freealg import parse_scalar
from heisenweyl.params import (
    GaussianRational,
    Numeric,
    OneParam,
    Quotient,
    Scalar,
    SpecializationError,
    laurent_gcd,
    pq_factorial,
    pq_number,
    specialize,
)

from conftest import P, Q, T, U, laurent_scalars, nonzero_scalars, sympy_equal, sympy_pq_number, to_sympy

p, q = Scalar.p(), Scalar.q()


def test_gaussian_rationals():
    a = GaussianRational(Fraction(1, 2), 3)
    assert a * a.inverse() == 1
    assert (a * a.conjugate()).is_real()
    assert GaussianRational(0, 1) ** 2 == -1


# -- field axioms -------------------------------------------------------------

@given(laurent_scalars(), laurent_scalars(), laurent_scalars())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0


@given(nonzero_scalars(), laurent_scalars())
def test_division_inverts_multiplication(a, b):
    assert (b * a) / a == b
    assert a * a.inverse() == 1


@given(laurent_scalars(), nonzero_scalars())
def test_quotients_agree_with_sympy(a, b):
    assert sympy_equal(a / b, sympy.cancel(to_sympy(a) / to_sympy(b)))


def test_scalar_examples():
    assert (1 - p * q) * (1 - p * q).inverse() == 1
    half = Scalar.monomial(Fraction(1, 2), 0)
    assert half * half == p
    assert p.sqrt() == half
    assert (q**2 - p**-2) / (q - p**-1) == q + p**-1


def test_canonical_form_is_structural():
    a = (q**2 - 1) / (q - 1)
    assert a == q + 1 and hash(a) == hash(q + 1)
    assert (p / (p * q)) == q.inverse()


# -- gcd ----------------------------------------------------------------------

def _same_up_to_unit(g, expected):
    num, den = sympy.fraction(sympy.cancel(to_sympy(Scalar(g)) / expected))
    return all(len(sympy.Poly(e, P, Q).terms()) == 1 for e in (num, den))


def test_gcd_examples():
    assert _same_up_to_unit(laurent_gcd(p.num, p.num), P)
    one_minus = (1 - p * q).num
    assert _same_up_to_unit(laurent_gcd(one_minus, (p * (1 - p * q)).num), 1 - P * Q)
    assert _same_up_to_unit(laurent_gcd((q**2 - 1).num, (q**3 - 1).num), Q - 1)


@given(laurent_scalars(), laurent_scalars(), laurent_scalars())
def test_gcd_matches_sympy(a, b, c):
    if not (a and b and c):
        return
    f, g = (a * c).num, (b * c).num
    # clear the monomial denominators so sympy sees ordinary polynomials
    pf, pg = (sympy.fraction(sympy.together(to_sympy(Scalar(h))))[0] for h in (f, g))
    assert _same_up_to_unit(laurent_gcd(f, g), sympy.gcd(pf, pg))


# -- (p,q)-numbers --------------------------------------------------------------

@pytest.mark.parametrize("n", [-7, -3, -1, 0, 1, 2, 5, 11])
def test_pq_number_fraction_formula(n):
    assert sympy_equal(pq_number(n), sympy_pq_number(n))


def test_pq_number_examples():
    assert pq_number(0) == 0
    assert pq_number(2) == q + p**-1
    assert pq_number(-1) == -p * q**-1
    assert pq_factorial(0) == 1 and pq_factorial(1) == 1
    assert pq_factorial(2) == q + p**-1


@given(st.integers(min_value=-40, max_value=40))
def test_pq_number_recurrence(n):
    assert pq_number(n + 1) == p ** (-n) + q * pq_number(n)
    assert pq_number(-n) == -((p / q) ** n) * pq_number(n)


@given(st.integers(min_value=0, max_value=30))
def test_pq_number_at_equal_parameters(n):
    value = pq_number(n, q, q)
    assert sympy_equal(value, (Q**n - Q**(-n)) / (Q - 1 / Q))


def test_pq_number_degenerate_parameters():
    one = Scalar(1)
    assert pq_number(5, one, one) == 5
    # q = p^-1 makes the fraction 0/0 but the sum form is fine
    assert pq_number(3, p, p.inverse()) == 3 * p**-2


# -- specialisations -----------------------------------------------------------

def test_oneparam():
    spec = OneParam(2, 3)
    assert spec(p * q) == Scalar.t(5)
    assert spec(Scalar(1)) == 1
    assert spec(p**3) == spec(q**2)
    with pytest.raises(ValueError):
        OneParam(2, 4)


def test_quotient_root_of_unity():
    spec = Quotient.cyclotomic(12, 4, 3)
    assert not spec(pq_number(12))
    assert spec(Scalar(1)) == spec(Scalar(1)) * spec(Scalar(1))
    assert spec(p) ** 3 == spec(Scalar(1)) and spec(q) ** 4 == spec(Scalar(1))
    assert spec(pq_number(5))
    with pytest.raises(SpecializationError) as err:
        spec(pq_number(12).inverse())
    assert err.value.factor


@given(laurent_scalars(), laurent_scalars())
def test_specialisations_are_ring_maps(a, b):
    for spec in (OneParam(1, 1), OneParam(2, 3), Quotient.cyclotomic(12, 4, 3)):
        assert spec(a + b) == spec(a) + spec(b)
        assert spec(a * b) == spec(a) * spec(b)
    num = Numeric(1.3, 1.7)
    assert abs(num(a * b) - num(a) * num(b)) < 1e-9 * (1 + abs(num(a) * num(b)))


@given(laurent_scalars())
def test_numeric_matches_sympy(a):
    expected = complex(to_sympy(a).subs({P: 1.3, Q: 1.7}))
    assert abs(Numeric(1.3, 1.7)(a) - expected) < 1e-9 * (1 + abs(expected))


def test_vanishing_denominator_names_factor():
    with pytest.raises(SpecializationError) as err:
        Numeric(1, 1)((1 - p * q).inverse())
    assert "p*q - 1" in err.value.factor
    assert specialize(Scalar(1), Numeric(1.3, 1.7)) == 1


def test_oneparam_on_sympy_oracle():
    value = OneParam(2, 3)(parse_scalar("[3]_{p,q}/(1-p*q)"))
    expected = sympy_pq_number(3).subs({P: T**2, Q: T**3}) / (1 - T**5)
    assert sympy_equal(value, expected)


def test_quotient_matches_sympy_residue():
    value = Quotient.cyclotomic(12, 4, 3)(pq_number(5))
    phi = sympy.cyclotomic_poly(12, U)
    num, den = sympy.fraction(sympy.together(sympy_pq_number(5).subs({P: U**4, Q: U**3})))
    expected = sympy.rem(sympy.expand(num * sympy.invert(den, phi, U)), phi, U)
    assert sympy.rem(sympy.expand(to_sympy(value) - expected), phi, U) == 0
