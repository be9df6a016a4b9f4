import pytest
from hypothesis import given, strategies as st

from heisenweyl.freealg import FreeElement, Letter, hpq_rules
from heisenweyl.hpq import (
    HeisenbergAlgebra,
    central_witness,
    check_normal,
    commutator,
    downup_residues,
    equal_parameter_involution,
    ident_by_multiplication,
    ident_closed_form,
    identity_morphism,
    inverse_parameter_map,
    is_central,
    omega,
    pbw_multiply,
    quommutator,
    root_of_unity_centrality,
    swap_parameter_map,
    theta,
    verify_downup,
    verify_ident,
    verify_morphism,
    zhang_twist_product,
    zhang_twist_relations,
)
from heisenweyl.params import OneParam, Quotient, Scalar, pq_number

from conftest import pbw_elements

p, q = Scalar.p(), Scalar.q()
H = HeisenbergAlgebra()
x, y, z = H.x, H.y, H.z
RULES = hpq_rules()


def as_words(f):
    terms = {}
    for (i, j, k), c in f.terms.items():
        terms[(Letter("x"),) * i + (Letter("y"),) * j + (Letter("z"),) * k] = c
    return FreeElement(terms)


# -- multiplication ------------------------------------------------------------

def test_product_examples():
    assert y * x == q * x * y + z
    assert str(y * x) == "q*x*y + z"
    assert H.one * (x + z) == x + z
    assert y * x**3 == q**3 * x**3 * y + pq_number(3) * x**2 * z
    assert y**2 * x == q**2 * x * y**2 + pq_number(2) * z * y
    assert z * x == p.inverse() * x * z and z * y == p * y * z


@given(pbw_elements(), pbw_elements(), pbw_elements())
def test_associative(f, g, h):
    assert (f * g) * h == f * (g * h)


@given(pbw_elements(), pbw_elements(), pbw_elements())
def test_distributive(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert (g + h) * f == g * f + h * f


@given(pbw_elements(max_terms=2), pbw_elements(max_terms=2))
def test_product_matches_rewriting(f, g):
    expected = RULES.normalize(as_words(f) * as_words(g))
    assert as_words(pbw_multiply(f, g)) == expected


@given(pbw_elements(), pbw_elements())
def test_degree_is_additive(f, g):
    # deg x = deg y = 1, deg z = 2 makes the relations homogeneous
    if f and g:
        assert (f * g).degree() == f.degree() + g.degree()


def test_commutators():
    assert quommutator(y, x, q) == z
    assert not commutator(x, x)
    assert quommutator(y, x, p.inverse()) == z + (q - p.inverse()) * x * y


# -- closed-form reordering --------------------------------------------------------

@pytest.mark.parametrize("which", ["ident1", "ident2"])
@pytest.mark.parametrize("n", [1, 2, 5, 10])
def test_reordering_identities(n, which):
    assert ident_closed_form(n, which) == ident_by_multiplication(n, which)
    assert verify_ident(n, which).passed


def test_reordering_under_oneparam():
    alg = HeisenbergAlgebra(OneParam(2, 3).p, OneParam(2, 3).q)
    assert verify_ident(7, "ident1", alg).passed


# -- named elements ------------------------------------------------------------------

def test_theta_normal_form():
    th = theta()
    assert th == (1 - p * q) * q * x * y - p * q * z
    assert len(th.terms) == 2


def test_theta_at_pq_one():
    alg = HeisenbergAlgebra(p, p.inverse())
    assert theta(alg) == -alg.z


def test_omega_one_one():
    assert omega(1, 1) == (y * x - p.inverse() * x * y) * z


@pytest.mark.parametrize("r,s", [(1, 1), (1, 2), (2, 3), (3, 5)])
def test_omega_central_exactly_under_dependence(r, s):
    assert is_central(omega(r, s), OneParam(r, s))
    assert not is_central(omega(r, s))


def test_omega_commutator_with_x():
    r, s = 2, 3
    om = omega(r, s)
    # generically [Omega, x] = (q^r p^-s - 1) x Omega
    assert commutator(om, x) == (q**r * p**-s - 1) * (x * om)


def test_central_witness_names_generator():
    name, c = central_witness(z)
    assert name == "x" and c == (p.inverse() - 1) * x * z
    assert not is_central(z)


def test_normality():
    assert check_normal(theta(), {"x": q, "y": q.inverse(), "z": 1})
    assert check_normal(z, {"x": p.inverse(), "y": p, "z": 1})
    for lam in (1, q, p, p * q):
        assert not check_normal(x + y, {"x": lam, "y": lam, "z": lam})


@given(pbw_elements())
def test_theta_normal_on_random_elements(f):
    # theta g = sigma(g) theta for the automorphism x -> q x, y -> q^-1 y
    sigma = f._new({(i, j, k): c * q ** (i - j) for (i, j, k), c in f.terms.items()})
    assert theta() * f == sigma * theta()


# -- morphisms ---------------------------------------------------------------------

def test_all_morphisms_verify():
    assert verify_morphism(identity_morphism(H))
    assert verify_morphism(inverse_parameter_map())
    assert verify_morphism(swap_parameter_map())
    tau = equal_parameter_involution()
    assert verify_morphism(tau)
    alg = tau.source
    assert tau(theta(alg)) == alg.p * alg.q * alg.z


def test_inverse_parameter_map_squares_to_identity():
    phi = inverse_parameter_map()
    psi = inverse_parameter_map(phi.target)
    assert psi.target == H
    assert phi.then(psi).is_identity()


def test_broken_morphism_detected():
    phi = inverse_parameter_map()
    bad = type(phi)(phi.source, phi.target, dict(phi.images, z=phi.target.z))
    assert not verify_morphism(bad)


@given(pbw_elements(max_terms=2), pbw_elements(max_terms=2))
def test_morphisms_are_multiplicative(f, g):
    for phi in (inverse_parameter_map(), swap_parameter_map()):
        assert phi(f * g) == phi(f) * phi(g)


def test_downup():
    assert verify_downup()
    assert verify_downup(HeisenbergAlgebra(1, 1))
    first, _ = downup_residues(alpha=p + q)
    assert first == (p.inverse() - p) * (x * y * x)


def test_zhang_twist():
    for name, residue in zhang_twist_relations().items():
        assert not residue, name
    assert zhang_twist_product(H.one, x) == x


@given(pbw_elements(max_terms=2), pbw_elements(max_terms=2), pbw_elements(max_terms=2))
def test_zhang_twist_associative(f, g, h):
    tw = zhang_twist_product
    assert tw(tw(f, g), h) == tw(f, tw(g, h))


# -- roots of unity ------------------------------------------------------------------

def test_root_of_unity_centrality():
    spec = Quotient.cyclotomic(12, 4, 3)
    assert root_of_unity_centrality(3, 4, spec)
    assert not spec(pq_number(12))


def test_root_of_unity_rejects_wrong_orders():
    with pytest.raises(ValueError):
        root_of_unity_centrality(4, 4, Quotient.cyclotomic(12, 4, 3))


def test_classical_point_is_not_central():
    # with p = q = 1 the relation yx - xy = z keeps x from being central
    spec = Quotient.cyclotomic(1, 0, 0)
    assert not root_of_unity_centrality(1, 1, spec)


def test_large_powers_not_central_generically():
    assert not is_central(x**12)
    assert is_central(x**12, Quotient.cyclotomic(12, 4, 3))


@given(st.integers(min_value=1, max_value=12))
def test_generic_powers_never_central(n):
    assert not is_central(x**n)
