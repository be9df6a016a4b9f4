from itertools import product

import pytest
from hypothesis import given, strategies as st

from heisenweyl.freealg import (
    HPQ_ALPHABET,
    Alphabet,
    FreeElement,
    Letter,
    ParseError,
    RewriteSystem,
    UnknownGeneratorError,
    check_overlaps,
    hpq_rules,
    normalize,
    parse_expression,
    parse_scalar,
)
from heisenweyl.freealg.rewriting import RewriteRule
from heisenweyl.hpq import HeisenbergAlgebra
from heisenweyl.params import Scalar, pq_number

p, q = Scalar.p(), Scalar.q()
X, Y, Z = (Letter(n) for n in "xyz")
H = hpq_rules()


def parse(text):
    return parse_expression(text, HPQ_ALPHABET)


# -- parser --------------------------------------------------------------------

def test_parse_examples():
    assert len(parse("y*x - q*x*y - z").terms) == 3
    e = parse("(1-p*q)^(-1)*z")
    assert e.terms == {(Z,): (1 - p * q).inverse()}
    assert parse("y*x^2").terms == {(Y, X, X): Scalar(1)}


def test_parse_scalars():
    assert parse_scalar("[3]_{p,q}") == pq_number(3)
    assert parse_scalar("[-2]") == pq_number(-2)
    assert parse_scalar("[3]!") == pq_number(1) * pq_number(2) * pq_number(3)
    assert parse_scalar("p^(1/2)*p^(1/2)") == p
    assert parse_scalar("i^2") == -1
    assert parse_scalar("2/4") == Scalar(1) / 2


def test_juxtaposition_and_inverses():
    alpha = Alphabet(("x", "y", "z"), {"x", "z"})
    assert parse_expression("xy", alpha) == parse_expression("x*y", alpha)
    assert parse_expression("x*x^-1", alpha) == FreeElement.scalar(1)
    assert parse_expression("x^-2", alpha).terms == {(Letter("x", True),) * 2: Scalar(1)}


@pytest.mark.parametrize("text", ["", "x +", "(x", "x^", "x^y", "[p]", "2 $ 3"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse(text)


def test_unknown_generator():
    with pytest.raises(UnknownGeneratorError):
        parse("w")
    with pytest.raises(ParseError):
        parse("y^-1")


@given(st.lists(st.sampled_from("xyz"), min_size=1, max_size=6), st.integers(-3, 3))
def test_parse_roundtrip_words(letters, c):
    e = FreeElement({tuple(Letter(n) for n in letters): c})
    assert parse(str(e)) == e


# -- rewriting -----------------------------------------------------------------

def test_normalize_examples():
    assert normalize(parse("y*x"), H) == parse("q*x*y + z")
    assert normalize(parse("x"), H) == parse("x")
    expected = parse("q^2*x^2*y + (q + p^-1)*x*z")
    assert normalize(parse("y*x^2"), H) == expected
    assert str(normalize(parse("y*x^2"), H)) == "q^2*x^2*y + (q + p^-1)*x*z"


def test_rules_must_decrease():
    with pytest.raises(ValueError):
        RewriteSystem(HPQ_ALPHABET, [RewriteRule((X, Y), FreeElement._raw({(Y, X): Scalar(1)}))])


def test_overlaps_standard_system_resolve():
    assert check_overlaps(hpq_rules()) == []
    assert check_overlaps(hpq_rules(1, p=1)) == []


def test_overlap_at_zyx_when_pprime_is_p():
    found = check_overlaps(hpq_rules(p))
    assert len(found) == 1
    (ov,) = found
    assert ov.word == (Z, Y, X)
    # hand reduction of zyx both ways leaves (p^2 - 1) z^2
    assert ov.difference == FreeElement({(Z, Z): p**2 - 1})


def test_single_rule_has_no_overlaps():
    sys = RewriteSystem(HPQ_ALPHABET, [RewriteRule((Y, X), FreeElement._raw({(X, Y): q}))])
    assert check_overlaps(sys) == []


@given(st.sampled_from([p, p**2, q, p * q, Scalar(2)]))
def test_nonstandard_pprime_never_confluent(pprime):
    assert check_overlaps(hpq_rules(pprime))


# -- oracle: rewriting agrees with PBW multiplication -----------------------------

def _as_pbw_terms(e):
    out = {}
    for word, c in e.terms.items():
        names = "".join(a.name for a in word)
        key = (names.count("x"), names.count("y"), names.count("z"))
        assert names == "x" * key[0] + "y" * key[1] + "z" * key[2]
        out[key] = c
    return out


def test_rewriting_matches_pbw_up_to_degree_5():
    alg = HeisenbergAlgebra()
    gens = alg.gens()
    for n in range(1, 6):
        for letters in product("xyz", repeat=n):
            value = alg.one
            for a in letters:
                value = value * gens[a]
            word = FreeElement({tuple(Letter(a) for a in letters): 1})
            assert _as_pbw_terms(normalize(word, H)) == value.terms, "".join(letters)


@given(st.lists(st.sampled_from("xyz"), max_size=6), st.lists(st.sampled_from("xyz"), max_size=6))
def test_normal_forms_multiply(a, b):
    wa = FreeElement({tuple(map(Letter, a)): 1})
    wb = FreeElement({tuple(map(Letter, b)): 1})
    assert normalize(normalize(wa, H) * normalize(wb, H), H) == normalize(wa * wb, H)
