"""Acceptance criteria 1-13, each at its stated bound and tolerance.

Every criterion prints one ``PASS``/``FAIL`` line; the lines are repeated in
the terminal summary of a pytest run.  Run directly with
``python tests/test_acceptance.py`` for the lines alone.
"""

import random
import sys
import time
from fractions import Fraction

import pytest

from heisenweyl.freealg import check_overlaps, hpq_rules
from heisenweyl.gwa import aprs_as_gwa, apq_indep_gwa, hpq_as_gwa, tensor_power, verify_cross_identity
from heisenweyl.hpq import (
    check_normal,
    equal_parameter_involution,
    ident_by_multiplication,
    ident_closed_form,
    inverse_parameter_map,
    is_central,
    omega,
    root_of_unity_centrality,
    swap_parameter_map,
    theta,
    verify_downup,
    verify_morphism,
    zhang_twist_relations,
)
from heisenweyl.localize import (
    LocalizedHeisenberg,
    inner_residues,
    theta_factorization_residues,
    verify_virasoro,
)
from heisenweyl.params import OneParam, Quotient, Scalar, pq_factorial, pq_number
from heisenweyl.reps import (
    BModule,
    FockConfig,
    ZModuleVector,
    build_oscillator,
    bmodule_descent,
    fock_descent,
    monomials_up_to,
    verify_bmodule,
    verify_fock_relations,
    verify_oscillator,
    verify_oscillator_power,
    verify_virasoro_action,
)

p, q = Scalar.p(), Scalar.q()
RESULTS = {}
CRITERIA = {}


def criterion(number, title):
    def register(fn):
        CRITERIA[number] = (title, fn)
        return fn

    return register


def evaluate(number):
    title, fn = CRITERIA[number]
    start = time.perf_counter()
    passed, detail = fn()
    elapsed = time.perf_counter() - start
    line = f"{'PASS' if passed else 'FAIL'} criterion {number:2d}: {title} ({detail}; {elapsed:.1f}s)"
    RESULTS[number] = line
    print(line)
    return passed


def _failures(entries):
    return [e for e in entries if not e.passed]


# ---------------------------------------------------------------------------

@criterion(1, "(p,q)-number recurrences for |n| <= 100, p = q reduction for n <= 50")
def c1():
    bad = [n for n in range(-100, 101) if pq_number(n + 1) != p ** (-n) + q * pq_number(n)]
    bad += [n for n in range(-100, 101) if pq_number(n + 1) != q**n + p.inverse() * pq_number(n)]
    qnum = lambda n: (q**n - q ** (-n)) / (q - q.inverse())  # noqa: E731
    bad_q = [n for n in range(0, 51) if pq_number(n, q, q) != qnum(n)]
    return not bad and not bad_q, f"recurrence failures {bad}, p=q failures {bad_q}"


@criterion(2, "reordering identities for 1 <= n <= 30, closed form vs repeated multiplication")
def c2():
    bad = [(n, w) for w in ("ident1", "ident2") for n in range(1, 31)
           if ident_closed_form(n, w) != ident_by_multiplication(n, w)]
    return not bad, f"60 cases, failures {bad}"


@criterion(3, "overlaps resolve iff p' = p^-1; witness zyx for p' = p")
def c3():
    standard = check_overlaps(hpq_rules())
    other = check_overlaps(hpq_rules(p))
    words = ["".join(a.name for a in ov.word) for ov in other]
    return not standard and words == ["zyx"], f"p'=p^-1: {len(standard)} unresolved, p'=p: {words}"


@criterion(4, "theta normal; Omega central exactly when q^r = p^s")
def c4():
    normal = check_normal(theta(), {"x": q, "y": q.inverse(), "z": 1})
    pairs = [(1, 1), (1, 2), (2, 3), (3, 5)]
    central = {rs: is_central(omega(*rs), OneParam(*rs)) for rs in pairs}
    generic = {rs: is_central(omega(*rs)) for rs in pairs}
    ok = normal and all(central.values()) and not any(generic.values())
    return ok, f"theta normal {normal}, central under dependence {central}, central generically {generic}"


@criterion(5, "p = u^4, q = u^3 mod Phi_12: z^3, x^12, y^12 central and [12] = 0")
def c5():
    spec = Quotient.cyclotomic(12, 4, 3)
    central = root_of_unity_centrality(3, 4, spec)
    vanishes = not spec(pq_number(12))
    return central and vanishes, f"central {central}, [12] vanishes {vanishes}"


@criterion(6, "isomorphisms, tau with tau(theta) = pq z, down-up and Zhang-twist relations")
def c6():
    tau = equal_parameter_involution()
    alg = tau.source
    phi = inverse_parameter_map()
    checks = {
        "inverse parameters": verify_morphism(phi),
        "swap": verify_morphism(swap_parameter_map()),
        "tau": verify_morphism(tau),
        "tau(theta)": tau(theta(alg)) == alg.p * alg.q * alg.z,
        "inverse map twice": phi.then(inverse_parameter_map(phi.target)).is_identity(),
        "down-up": verify_downup(),
        "zhang": not any(zhang_twist_relations().values()),
    }
    return all(checks.values()), ", ".join(f"{k} {v}" for k, v in checks.items())


@criterion(7, "GWA presentations of H_{p,q}, A_{p,q} and A_p(r,s) for (r,s) in {(1,1),(1,2),(2,3)}")
def c7():
    entries = list(hpq_as_gwa()[1].values()) + list(apq_indep_gwa()[1].values())
    for rs in [(1, 1), (1, 2), (2, 3)]:
        entries += list(aprs_as_gwa(*rs)[1].values())
    bad = _failures(entries)
    return not bad, f"{len(entries)} relations, failures {[e.check for e in bad]}"


@criterion(8, "[y_i x_j, y_j x_i] = delta_ij (z_j w_i^-1 - z_i w_j^-1) for n = 2, 3")
def c8():
    bad = []
    for n in (2, 3):
        data = tensor_power(n, 2, 3)
        bad += [(n, i, j) for i in range(1, n + 1) for j in range(1, n + 1)
                if not verify_cross_identity(i, j, data, 2, 3)]
    return not bad, f"failing (n, i, j): {bad}"


@criterion(9, "Virasoro relation for |n|,|m| <= 8 (generic and q^2 = p^3) and on the module for |n|,|m| <= 5")
def c9():
    spec = OneParam(2, 3)
    algebras = [LocalizedHeisenberg(), LocalizedHeisenberg(spec.p, spec.q)]
    bad = [(n, m) for alg in algebras for n in range(-8, 9) for m in range(-8, 9)
           if not verify_virasoro(n, m, alg)]
    module = BModule()
    bad_module = [(n, m) for n in range(-5, 6) for m in range(-5, 6)
                  if not verify_virasoro_action(n, m, 12, module)]
    return not bad and not bad_module, f"algebra failures {bad}, module failures {bad_module}"


@criterion(10, "inner derivation t and conjugation by a; x(y - t) = (1-pq)^-1 q^-1 theta")
def c10():
    bad = [(rs, name) for rs in [(1, 1), (1, 2), (2, 3)]
           for name, res in inner_residues(*rs).items() if res]
    bad += [name for name, res in theta_factorization_residues().items() if res]
    return not bad, f"failures {bad}"


@criterion(11, "Fock relations on monomials of degree <= 6; descent equals prod [m_i]!")
def c11():
    bad, descents = [], 0
    for n, r, s in [(1, 1, 1), (1, 2, 3), (2, 2, 3), (3, 1, 2)]:
        bad += [(n, r, s, e.check) for e in _failures(verify_fock_relations(n, r, s, 6))]
        cfg = FockConfig(n, r, s)
        spec = OneParam(r, s)
        for m in monomials_up_to(n, 6):
            expected = Scalar.t(0)
            for e in m:
                expected = expected * pq_factorial(e, spec.p, spec.q)
            value = fock_descent(m, cfg)
            descents += 1
            if value != expected or not value:
                bad.append((n, r, s, m))
    return not bad, f"{descents} descents, failures {bad}"


@criterion(12, "oscillator relations at N = 64 below 1e-9, power relation below 1e-8")
def c12():
    # 50 significant digits: float64 cannot meet an absolute 1e-9 once [k] ~ 1e14
    res = verify_oscillator(build_oscillator(64, 1.3, 1.7, dps=50), tol=1e-9)
    res += verify_oscillator_power(64, 1.2, 2, 3, tol=1e-8, dps=50)
    worst = max(r.absolute for r in res)
    return all(r.passed for r in res), f"largest absolute residual {worst:.2e}"


@criterion(13, "module relation for |k| <= 20; descent from 50 random vectors")
def c13():
    bad = [e.params["k"] for e in _failures(verify_bmodule(20))]
    rng = random.Random(20261018)
    zeros = 0
    for _ in range(50):
        terms = {rng.randint(-10, 10): Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 9))
                 for _ in range(rng.randint(1, 6))}
        _, coeff = bmodule_descent(ZModuleVector(terms))
        zeros += not coeff
    return not bad and not zeros, f"relation failures {bad}, vanishing descents {zeros}"


# ---------------------------------------------------------------------------

LITERAL_CROSS = (
    "distinct components do not commute under [y_i x_j, y_j x_i]; the commutator is "
    "p (1 - pq)^-1 (z_j w_i^-1 - z_i w_j^-1), so the identity as stated fails"
)


@pytest.mark.parametrize(
    "number",
    [pytest.param(8, marks=pytest.mark.xfail(strict=True, reason=LITERAL_CROSS)) if n == 8 else n
     for n in range(1, 14)],
)
def test_criterion(number):
    assert evaluate(number)


if __name__ == "__main__":
    outcomes = [evaluate(n) for n in sorted(CRITERIA)]
    sys.exit(0 if all(outcomes) else 1)
