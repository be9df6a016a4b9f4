import sys

import sympy
from hypothesis import settings, strategies as st

from heisenweyl.hpq import HeisenbergAlgebra
from heisenweyl.params import Scalar

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

P, Q, T, U = sympy.symbols("p q t u")


def to_sympy(value):
    """Independent reading of a printed Scalar, for oracle comparisons."""
    text = str(value).replace("^", "**")
    return sympy.sympify(text, locals={"p": P, "q": Q, "t": T, "u": U, "i": sympy.I})


def sympy_equal(value, expected) -> bool:
    return sympy.simplify(to_sympy(value) - expected) == 0


def sympy_pq_number(n):
    return (Q**n - P**(-n)) / (Q - 1 / P)


small_ints = st.integers(min_value=-3, max_value=3)
exponents = st.integers(min_value=-2, max_value=2)


@st.composite
def laurent_scalars(draw, max_terms=3):
    """Small Laurent polynomials in p, q with integer coefficients."""
    total = Scalar(0)
    for _ in range(draw(st.integers(min_value=1, max_value=max_terms))):
        c = draw(small_ints)
        total = total + Scalar.monomial(draw(exponents), draw(exponents), c)
    return total


@st.composite
def nonzero_scalars(draw):
    s = draw(laurent_scalars())
    return s if s else Scalar(1)


@st.composite
def pbw_elements(draw, max_terms=3, max_exp=2, alg=None):
    alg = alg or HeisenbergAlgebra()
    terms = {}
    for _ in range(draw(st.integers(min_value=0, max_value=max_terms))):
        key = tuple(draw(st.integers(min_value=0, max_value=max_exp)) for _ in range(3))
        terms[key] = draw(st.integers(min_value=-2, max_value=2).filter(bool))
    return alg.element(terms)


@st.composite
def local_elements(draw, alg, max_terms=3):
    terms = {}
    for _ in range(draw(st.integers(min_value=0, max_value=max_terms))):
        key = (draw(exponents), draw(st.integers(min_value=0, max_value=2)), draw(exponents))
        terms[key] = draw(st.integers(min_value=-2, max_value=2).filter(bool))
    return alg.element(terms)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
