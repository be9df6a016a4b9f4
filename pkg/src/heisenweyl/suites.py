"""Named verification suites.

A suite expands to a list of tasks ``(function, kwargs)``; each function is
module level (so tasks can run in worker processes) and returns a list of
:class:`~heisenweyl.report.Entry`.  Defaults reproduce the acceptance run.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .freealg import check_overlaps, hpq_rules, parse_scalar
from .gwa import (
    TensorModel,
    cross_commutator,
    aprs_as_gwa,
    apq_indep_gwa,
    hpq_as_gwa,
    hpq_gwa_data,
    pbw_to_gwa,
    tensor_power,
    tensor_relations,
    verify_cross_identity,
    verify_cross_identity_corrected,
)
from .hpq import (
    HeisenbergAlgebra,
    central_witness,
    check_normal,
    downup_residues,
    equal_parameter_involution,
    identity_morphism,
    inverse_parameter_map,
    omega,
    quommutator,
    root_of_unity_centrality,
    swap_parameter_map,
    theta,
    verify_ident,
    zhang_twist_relations,
)
from .localize import (
    LocalizedHeisenberg,
    idealizer_generator_check,
    left_ideal_contains_product,
    quantum_weyl_residue,
    sigma_power_matches,
    theta_factorization_residues,
    verify_inner,
    virasoro_residue,
)
from .params import Numeric, OneParam, Quotient, Scalar, pq_number, specialize
from .report import Entry, VerificationReport, run_check
from .reps import (
    BModule,
    ZModuleVector,
    bmodule_descent,
    build_oscillator,
    fock_descent,
    fock_descent_expected,
    monomials_up_to,
    verify_bmodule,
    verify_fock_relations,
    verify_oscillator,
    verify_oscillator_power,
    verify_virasoro_action,
)

SUITES = (
    "numbers",
    "identities",
    "diamond",
    "center",
    "roots",
    "morphisms",
    "gwa",
    "tensor",
    "virasoro",
    "inner",
    "fock",
    "oscillator",
    "bmodule",
)

CENTER_PAIRS = ((1, 1), (1, 2), (2, 3), (3, 5))
APRS_PAIRS = ((1, 1), (1, 2), (2, 3))
FOCK_CONFIGS = ((1, 1, 1), (1, 2, 3), (2, 2, 3), (3, 1, 2))


@dataclass
class SuiteConfig:
    suite: str
    mode: object = None  # None (generic) or a specialisation
    degree: int = 6
    ident_range: int = 30
    number_range: int = 100
    qnumber_range: int = 50
    vira: int = 8
    vira_module: int = 5
    window: int = 12
    module_window: int = 20
    matrix: int = 64
    tau: float = 1.2
    dps: int = 50  # decimal digits for the oscillator matrices
    tensor_sizes: tuple = (2, 3)
    descent_samples: int = 50
    seed: int = 0
    pprime: str = "p^-1"
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.suite != "all" and self.suite not in SUITES:
            raise ValueError(f"unknown suite {self.suite!r}")
        for name in ("degree", "ident_range", "number_range", "qnumber_range", "vira",
                     "vira_module", "window", "module_window", "matrix", "descent_samples", "dps"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.matrix < 3:
            raise ValueError("matrix size must be at least 3")


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------

def _zero(residue):
    return (not residue, residue)


def _residue_entries(suite, anchor, params, residues):
    return [run_check(suite, name, anchor, params, lambda d=d: _zero(d)) for name, d in residues.items()]


def _spec_label(spec):
    return "generic" if spec is None else str(spec)


def _algebra_for(spec, local=False):
    cls = LocalizedHeisenberg if local else HeisenbergAlgebra
    if spec is None:
        return cls()
    if isinstance(spec, OneParam):
        return cls(spec.p, spec.q)
    raise ValueError(f"mode {spec} is not supported by this suite")


# ---------------------------------------------------------------------------
# tasks
# ---------------------------------------------------------------------------

def task_numbers(limit, qlimit):
    p, q = Scalar.p(), Scalar.q()
    anchor = "(p,q)-number recurrences"

    def first_bad(pred, rng):
        for n in rng:
            if not pred(n):
                return False, f"n={n}"
        return True, None

    rng = range(-limit, limit + 1)
    qp = Scalar.q()
    entries = [
        run_check("numbers", "[n+1] = p^-n + q[n]", anchor, {"range": limit},
                  lambda: first_bad(lambda n: pq_number(n + 1) == p ** (-n) + q * pq_number(n), rng)),
        run_check("numbers", "[n+1] = q^n + p^-1[n]", anchor, {"range": limit},
                  lambda: first_bad(lambda n: pq_number(n + 1) == q ** n + p ** -1 * pq_number(n), rng)),
        run_check("numbers", "fraction form", anchor, {"range": limit},
                  lambda: first_bad(lambda n: pq_number(n) * (q - p ** -1) == q ** n - p ** (-n), rng)),
        run_check("numbers", "[n] at p=q is (q^n - q^-n)/(q - q^-1)", "one-parameter q-number",
                  {"range": qlimit},
                  lambda: first_bad(
                      lambda n: pq_number(n, qp, qp) == (qp ** n - qp ** (-n)) / (qp - qp ** -1),
                      range(0, qlimit + 1))),
    ]
    return entries


def task_identities(n_max, which, spec):
    alg = _algebra_for(spec)
    out = []
    for n in range(1, n_max + 1):
        e = verify_ident(n, which, alg)
        e.params["mode"] = _spec_label(spec)
        out.append(e)
    return out


def task_diamond(pprime):
    anchor = "overlap resolution of the reordering rules"
    value = {"p^-1": Scalar.p(-1), "p": Scalar.p()}.get(pprime)
    if value is None:
        value = parse_scalar(pprime)
    sys = hpq_rules(p_prime=value)

    def check():
        found = check_overlaps(sys)
        if not found:
            return True, None
        return False, "; ".join(str(o) for o in found)

    return [run_check("diamond", "overlaps resolve", anchor, {"pprime": str(value)}, check)]


def task_center(spec):
    H = HeisenbergAlgebra()
    entries = []
    if spec is None:
        th = theta(H)
        entries.append(run_check(
            "center", "theta normal with twist (q, q^-1, 1)", "normal element", {},
            lambda: check_normal(th, {"x": H.q, "y": H.q.inverse(), "z": 1})))
        entries.append(run_check(
            "center", "theta = -pq (yx - p^-1 xy)", "normal element", {},
            lambda: _zero(th + H.p * H.q * quommutator(H.y, H.x, H.p.inverse()))))
        for r, s in CENTER_PAIRS:
            om = omega(r, s, H)
            entries.append(run_check(
                "center", "omega central when q^r = p^s", "central element", {"r": r, "s": s},
                lambda om=om, r=r, s=s: _witness_none(central_witness(om, OneParam(r, s)))))
            entries.append(run_check(
                "center", "omega not central for independent p, q", "central element", {"r": r, "s": s},
                lambda om=om: (central_witness(om) is not None, "omega commutes with x, y, z")))
        return entries
    if not isinstance(spec, OneParam):
        raise ValueError("center suite needs generic or oneparam mode")
    om = omega(spec.r, spec.s, H)
    entries.append(run_check(
        "center", "omega central when q^r = p^s", "central element", {"r": spec.r, "s": spec.s},
        lambda: _witness_none(central_witness(om, spec))))
    return entries


def _witness_none(w):
    if w is None:
        return True, None
    name, comm = w
    return False, f"[omega, {name}] = {comm}"


def _order(image, limit):
    for k in range(1, limit + 1):
        if image ** k == 1:
            return k
    raise ValueError(f"{image} has no order up to {limit}")


def task_roots(spec):
    if spec is None:
        spec = Quotient.cyclotomic(12, 4, 3)
    if not isinstance(spec, Quotient):
        raise ValueError("roots suite needs a cyclotomic mode")
    limit = 4 * len(spec.modulus) ** 2
    n, m = _order(spec.p_image, limit), _order(spec.q_image, limit)
    N = n * m // gcd(n, m)
    params = {"mode": str(spec), "n": n, "m": m}
    return [
        run_check("roots", "z^n, x^mn, y^mn central", "central powers at roots of unity", params,
                  lambda: root_of_unity_centrality(n, m, spec)),
        run_check("roots", f"[{N}] = 0", "(p,q)-number vanishing", params,
                  lambda: (not specialize(pq_number(N), spec), specialize(pq_number(N), spec))),
    ]


def task_morphisms():
    H = HeisenbergAlgebra()
    entries = []
    maps = {
        "H_{p,q} -> H_{p^-1,q^-1}": inverse_parameter_map(H),
        "H_{p,q} -> H_{q,p}": swap_parameter_map(H),
        "involution of H_{q,q}": equal_parameter_involution(),
        "identity": identity_morphism(H),
    }
    for name, phi in maps.items():
        entries.extend(_residue_entries("morphisms", "algebra map", {"map": name}, {
            f"{name}: {rel}": d for rel, d in phi.relation_images().items()
        }))
    inv = maps["involution of H_{q,q}"]
    A = inv.source
    entries.append(run_check("morphisms", "tau(theta) = pq z", "algebra map", {},
                             lambda: _zero(inv(theta(A)) - A.p * A.q * A.z)))
    back = inverse_parameter_map(maps["H_{p,q} -> H_{p^-1,q^-1}"].target)
    entries.append(run_check("morphisms", "inverse-parameter map squared is the identity", "algebra map", {},
                             lambda: maps["H_{p,q} -> H_{p^-1,q^-1}"].then(back).is_identity()))
    first, second = downup_residues(H)
    entries.extend(_residue_entries("morphisms", "down-up relations", {}, {
        "y x^2 - (p^-1 + q) xyx + p^-1 q x^2 y": first,
        "y^2 x - (p^-1 + q) yxy + p^-1 q x y^2": second,
    }))
    one = HeisenbergAlgebra(1, 1)
    f1, f2 = downup_residues(one)
    entries.extend(_residue_entries("morphisms", "down-up relations", {"p": 1, "q": 1}, {
        "down-up 1 at p=q=1": f1, "down-up 2 at p=q=1": f2,
    }))
    entries.extend(_residue_entries("morphisms", "graded twist", {}, zhang_twist_relations(H)))
    return entries


def task_gwa_models():
    entries = []
    _, checks = hpq_as_gwa()
    entries.extend(checks.values())
    _, checks = apq_indep_gwa()
    entries.extend(checks.values())
    for r, s in APRS_PAIRS:
        _, checks = aprs_as_gwa(r, s)
        entries.extend(checks.values())
    return entries


def task_gwa_functor(bound):
    H = HeisenbergAlgebra()
    D = hpq_gwa_data()
    mons = [H.monomial(i, j, k) for i in range(bound + 1) for j in range(bound + 1) for k in range(bound + 1)
            if i + j + k <= bound]

    def check():
        for a in mons:
            for b in mons:
                if pbw_to_gwa(a * b, D) != pbw_to_gwa(a, D) * pbw_to_gwa(b, D):
                    return False, f"{a} * {b}"
        return True, None

    return [run_check("gwa", "PBW products match GWA products", "H_{p,q} as D(rho, yx)",
                      {"degree": bound}, check)]


def task_tensor(n, r, s):
    data = tensor_power(n, r, s)
    model = TensorModel(data, r, s)
    params = {"n": n, "r": r, "s": s}
    entries = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            entries.append(run_check(
                "tensor", f"[y{i}x{j},y{j}x{i}] = delta (z{j}w{i}^-1 - z{i}w{j}^-1)",
                "commutator identity as displayed", params,
                lambda i=i, j=j: (verify_cross_identity(i, j, data, r, s),
                                  f"[y{i}x{j},y{j}x{i}] = {cross_commutator(i, j, data, r, s)}")))
            entries.append(run_check(
                "tensor", f"[y{i}x{j},y{j}x{i}] = (1 - delta) p(1 - pq)^-1 (z{j}w{i}^-1 - z{i}w{j}^-1)",
                "commutator identity forced by the relations", params,
                lambda i=i, j=j: verify_cross_identity_corrected(i, j, data, r, s)))
    rels = tensor_relations(n, r, s, cross=None)
    entries.extend(_residue_entries("tensor", "relations of A_p^n(r,s)", params,
                                    {name: model.evaluate(e) for name, e in rels.items()}))
    return entries


def task_virasoro_row(n, bound, spec):
    alg = _algebra_for(spec, local=True)
    out = []
    for m in range(-bound, bound + 1):
        e = run_check("virasoro", "p^(n-m) L_n L_m - q^(m-n) L_m L_n = [m-n] L_(m+n)",
                      "Virasoro-type relation in the localization",
                      {"n": n, "m": m, "mode": _spec_label(spec)},
                      lambda m=m: _zero(virasoro_residue(n, m, alg)))
        out.append(e)
    return out


def task_virasoro_module_row(n, bound, window):
    module = BModule()
    return [
        run_check("virasoro", "relation as operators on v_k", "Virasoro-type action on M",
                  {"n": n, "m": m, "K": window},
                  lambda m=m: verify_virasoro_action(n, m, window, module))
        for m in range(-bound, bound + 1)
    ]


def task_inner():
    entries = []
    for r, s in ((1, 1), (2, 3), (3, 5)):
        entries.extend(verify_inner(r, s))
        spec = OneParam(r, s)
        entries.append(run_check("inner", "p^s = q^r makes a-conjugation sigma^r", "conjugation by a",
                                 {"r": r, "s": s}, lambda r=r, s=s, spec=spec: sigma_power_matches(r, s, spec)))
    entries.extend(_residue_entries("inner", "factorization of theta", {}, theta_factorization_residues()))
    entries.append(run_check("inner", "(z^-1 y) x - pq x (z^-1 y) = 1", "quantum Weyl subring", {},
                             lambda: _zero(quantum_weyl_residue())))
    entries.append(run_check("inner", "(z^-1 y) x^n (z^-1 y) in B (z^-1 y)", "idealizer", {"bound": 8},
                             lambda: idealizer_generator_check(8)))
    entries.append(run_check("inner", "(z^-1 y) x not in B (z^-1 y)", "idealizer", {},
                             lambda: not left_ideal_contains_product(LocalizedHeisenberg().x)))
    return entries


def task_fock(n, r, s, degree):
    entries = verify_fock_relations(n, r, s, degree)
    cfg = (n, r, s)
    mons = list(monomials_up_to(n, degree))

    def descent():
        for m in mons:
            got = fock_descent(m, cfg)
            if not got or got != fock_descent_expected(m, cfg):
                return False, f"m={m}: {got}"
        return True, None

    entries.append(run_check("fock", "descent coefficient is prod [m_i]! and nonzero", "Fock action",
                             {"n": n, "r": r, "s": s, "D": degree}, descent))
    return entries


def task_oscillator(spec, size, tau, dps):
    if spec is None:
        spec = Numeric(1.3, 1.7)
    if not isinstance(spec, Numeric):
        raise ValueError("oscillator suite needs a numeric mode")
    p, q = spec.p, spec.q
    if isinstance(p, complex) or isinstance(q, complex):
        if p.imag or q.imag:
            raise ValueError("oscillator suite needs real p, q")
        p, q = p.real, q.real
    mats = build_oscillator(size, p, q, dps)
    entries = []
    for res in verify_oscillator(mats, 1e-9):
        entries.append(_residual_entry(res, {"N": size, "p": p, "q": q, "dps": dps}, 1e-9))
    for res in verify_oscillator_power(size, tau, 2, 3, 1e-8, dps):
        entries.append(_residual_entry(res, {"N": size, "tau": tau, "r": 2, "s": 3, "dps": dps}, 1e-8))
    return entries


def _residual_entry(res, params, tol):
    params = dict(params, relative=f"{res.relative:.3e}", absolute=f"{res.absolute:.3e}")
    return run_check("oscillator", res.relation, "truncated oscillator matrices", params,
                     lambda: (res.passed, f"absolute residual {res.absolute:.3e} >= {tol}"))


def task_bmodule(window, samples, seed):
    entries = verify_bmodule(window)
    rng = random.Random(seed)
    module = BModule()
    vectors = []
    for _ in range(samples):
        size = rng.randint(1, 6)
        terms = {rng.randint(-10, 10): Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
                 for _ in range(size)}
        vectors.append(ZModuleVector(terms))

    def descent():
        for v in vectors:
            _, coeff = bmodule_descent(v, module)
            if not coeff:
                return False, str(v)
        return True, None

    entries.append(run_check("bmodule", "descent reaches a nonzero multiple of v_0", "action on v_k",
                             {"samples": samples, "seed": seed}, descent))
    return entries


# ---------------------------------------------------------------------------
# expansion and execution
# ---------------------------------------------------------------------------

def tasks_for(cfg: SuiteConfig, suite: str | None = None) -> list:
    suite = suite or cfg.suite
    if suite == "all":
        out = []
        for name in SUITES:
            out.extend(tasks_for(_all_cfg(cfg), name))
        return out
    spec = cfg.mode
    if suite == "numbers":
        return [(task_numbers, dict(limit=cfg.number_range, qlimit=cfg.qnumber_range))]
    if suite == "identities":
        _algebra_for(spec)
        return [(task_identities, dict(n_max=cfg.ident_range, which=w, spec=spec)) for w in ("ident1", "ident2")]
    if suite == "diamond":
        return [(task_diamond, dict(pprime=cfg.pprime))]
    if suite == "center":
        return [(task_center, dict(spec=spec))]
    if suite == "roots":
        return [(task_roots, dict(spec=spec))]
    if suite == "morphisms":
        return [(task_morphisms, {})]
    if suite == "gwa":
        return [(task_gwa_models, {}), (task_gwa_functor, dict(bound=3))]
    if suite == "tensor":
        return [(task_tensor, dict(n=n, r=2, s=3)) for n in cfg.tensor_sizes]
    if suite == "virasoro":
        specs = [spec] if spec is not None else [None, OneParam(2, 3)]
        for s in specs:
            _algebra_for(s, local=True)
        out = [(task_virasoro_row, dict(n=n, bound=cfg.vira, spec=s))
               for s in specs for n in range(-cfg.vira, cfg.vira + 1)]
        out += [(task_virasoro_module_row, dict(n=n, bound=cfg.vira_module, window=cfg.window))
                for n in range(-cfg.vira_module, cfg.vira_module + 1)]
        return out
    if suite == "inner":
        return [(task_inner, {})]
    if suite == "fock":
        return [(task_fock, dict(n=n, r=r, s=s, degree=cfg.degree)) for n, r, s in FOCK_CONFIGS]
    if suite == "oscillator":
        return [(task_oscillator, dict(spec=spec, size=cfg.matrix, tau=cfg.tau, dps=cfg.dps))]
    if suite == "bmodule":
        return [(task_bmodule, dict(window=cfg.module_window, samples=cfg.descent_samples, seed=cfg.seed))]
    raise ValueError(f"unknown suite {suite!r}")


def _all_cfg(cfg):
    # each suite falls back to its own default mode under "all"
    return SuiteConfig(**{**cfg.__dict__, "suite": "all", "mode": None})


def _run(task):
    fn, kwargs = task
    return fn(**kwargs)


def run_suite(cfg: SuiteConfig, jobs: int = 1) -> VerificationReport:
    tasks = tasks_for(cfg)
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run, tasks))
    else:
        results = [_run(t) for t in tasks]
    report = VerificationReport(cfg.suite)
    for entries in results:
        report.extend(entries)
    return report


__all__ = ["SUITES", "SuiteConfig", "Entry", "run_suite", "tasks_for"]
