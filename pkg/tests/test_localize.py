import pytest
from hypothesis import given, strategies as st

from heisenweyl.localize import (
    LocalizedHeisenberg,
    TorusElement,
    idealizer_generator_check,
    in_left_ideal,
    inner_residues,
    inner_t,
    left_ideal_contains_product,
    quantum_weyl_residue,
    quantum_weyl_subring_check,
    sigma_power_matches,
    theta_factorization_residues,
    to_weyl_basis,
    verify_inner,
    verify_theta_factorization,
    verify_virasoro,
    virasoro_L,
    virasoro_residue,
    weyl_basis_element,
    zinv_y,
)
from heisenweyl.params import OneParam, Scalar, pq_number

from conftest import local_elements, pbw_elements

p, q = Scalar.p(), Scalar.q()
B = LocalizedHeisenberg()
x, y, z, xi, zi = B.x, B.y, B.z, B.x_inv, B.z_inv


def test_inverse_examples():
    assert x * xi == B.one and xi * x == B.one
    assert z * zi == B.one
    assert y * xi == q.inverse() * xi * y - p * q.inverse() * B.monomial(-2, 0, 1)
    assert y * x == q * x * y + z


def test_units():
    u = (p * q) * B.monomial(3, 0, -2)
    assert u * u.inverse() == B.one
    with pytest.raises(ValueError):
        (x + z).inverse()
    with pytest.raises(ValueError):
        y.inverse()


@given(local_elements(B), local_elements(B), local_elements(B))
def test_associative(f, g, h):
    assert (f * g) * h == f * (g * h)


@given(pbw_elements(), pbw_elements())
def test_restriction_agrees_with_unlocalized(f, g):
    assert B.lift(f * g) == B.lift(f) * B.lift(g)


@given(st.integers(min_value=-8, max_value=8))
def test_reordering_past_negative_powers(n):
    # y x^n = q^n x^n y + [n] x^(n-1) z holds for every integer n
    xn = x**n if n >= 0 else xi ** (-n)
    lhs = y * xn
    rhs = q**n * (xn * y) + pq_number(n) * B.monomial(n - 1, 0, 1)
    assert lhs == rhs


def test_torus_closed_under_product():
    a = B.torus({(1, 0): 1, (-2, 1): p})
    b = B.torus({(0, -1): q})
    assert isinstance(a * b, TorusElement)
    assert not isinstance(a * y, TorusElement)
    with pytest.raises(ValueError):
        TorusElement(B, {(0, 1, 0): Scalar(1)})


# -- Virasoro ------------------------------------------------------------------

def test_virasoro_generators():
    assert virasoro_L(-1) == zi * y
    assert virasoro_L(-1) == B.monomial(0, 1, -1, p.inverse())
    assert virasoro_L(0) == zi * x * y == B.monomial(1, 1, -1)
    assert virasoro_L(2) == B.monomial(3, 1, -1, p**2)
    for n in range(-3, 4):
        xn = x ** (n + 1) if n >= -1 else xi ** (-n - 1)
        assert virasoro_L(n) == zi * xn * y


def test_virasoro_examples():
    assert not virasoro_residue(0, 0)
    L0, L1 = virasoro_L(0), virasoro_L(1)
    assert L0 * L1 * p.inverse() - q * L1 * L0 == virasoro_L(1)
    Lm2, L3 = virasoro_L(-2), virasoro_L(3)
    lhs = p ** (-5) * Lm2 * L3 - q**5 * L3 * Lm2
    assert lhs == pq_number(5) * virasoro_L(1)


@given(st.integers(-8, 8), st.integers(-8, 8))
def test_virasoro_relation(n, m):
    assert verify_virasoro(n, m)


def test_virasoro_relation_oneparam():
    spec = OneParam(2, 3)
    alg = LocalizedHeisenberg(spec.p, spec.q)
    assert all(verify_virasoro(n, m, alg) for n in range(-3, 4) for m in range(-3, 4))


# -- inner automorphisms --------------------------------------------------------------

def test_inner_identities():
    res = inner_residues(2, 3)
    assert all(not v for v in res.values())
    assert all(e.passed for e in verify_inner(2, 3))
    t = inner_t()
    assert t * x - q * x * t == z


def test_inner_needs_coprime():
    with pytest.raises(ValueError):
        inner_residues(2, 4)


def test_sigma_power_under_dependence():
    assert sigma_power_matches(2, 3, OneParam(2, 3))
    assert not sigma_power_matches(2, 3, OneParam(1, 1))


def test_theta_factorization():
    assert verify_theta_factorization()
    assert all(not v for v in theta_factorization_residues().values())


def test_theta_factorization_rejects_pq_one():
    alg = LocalizedHeisenberg(p, p.inverse())
    with pytest.raises(ValueError):
        theta_factorization_residues(alg)


# -- Weyl subring and idealizer -----------------------------------------------------

def test_quantum_weyl_relation():
    assert quantum_weyl_subring_check()
    Y = zinv_y()
    assert Y * x == p * q * x * Y + 1


def test_classical_weyl_at_pq_one():
    alg = LocalizedHeisenberg(p, p.inverse())
    assert not quantum_weyl_residue(alg)
    Y = zinv_y(alg)
    assert Y * alg.x - alg.x * Y == alg.one


@given(st.integers(-4, 4), st.integers(0, 4))
def test_weyl_basis_coordinates(i, j):
    assert to_weyl_basis(weyl_basis_element(i, j, B)) == {(i, j): Scalar(1)}
    Y = zinv_y()
    direct = (x**i if i >= 0 else xi ** (-i)) * (Y**j if j else B.one)
    assert direct == weyl_basis_element(i, j, B)


def test_idealizer():
    assert idealizer_generator_check(8)
    Y = zinv_y()
    assert in_left_ideal(Y * Y)
    assert Y * x * Y == p * q * x * Y * Y + Y
    assert not left_ideal_contains_product(x)
    with pytest.raises(ValueError):
        to_weyl_basis(y)
