"""``heisenweyl`` command line.

Exit codes: 0 when everything passes, 1 when a verification fails, 2 for
usage, parse and specialisation errors.
"""

from __future__ import annotations

import argparse
import sys

from .freealg import Alphabet, FreeElement, Letter, ParseError, parse_expression, parse_scalar
from .gwa import TensorModel, apq_gwa_data, evaluate, hpq_gwa_data, tensor_power
from .hpq import HeisenbergAlgebra
from .localize import LocalizedHeisenberg
from .params import Numeric, OneParam, Quotient, Scalar, SpecializationError
from .suites import SUITES, SuiteConfig, run_suite


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# parameter modes
# ---------------------------------------------------------------------------

def parse_mode(text: str | None):
    """``generic``, ``oneparam:R,S``, ``cyclotomic:N:EP,EQ`` or ``numeric:P,Q``."""
    if text is None or text == "generic":
        return None
    kind, _, rest = text.partition(":")
    try:
        if kind == "oneparam":
            r, s = (int(v) for v in rest.split(","))
            return OneParam(r, s)
        if kind == "cyclotomic":
            n, _, imgs = rest.partition(":")
            ep, eq = (int(v) for v in imgs.split(","))
            return Quotient.cyclotomic(int(n), ep, eq)
        if kind == "numeric":
            p, q = (complex(v.replace("i", "j")) for v in rest.split(","))
            p = p.real if not p.imag else p
            q = q.real if not q.imag else q
            return Numeric(p, q)
    except ValueError as err:
        raise UsageError(f"bad mode {text!r}: {err}") from None
    raise UsageError(f"unknown mode {text!r}")


def format_value(v) -> str:
    if isinstance(v, complex) and not v.imag:
        v = v.real
    if isinstance(v, float):
        return str(int(v)) if v.is_integer() else repr(v)
    if isinstance(v, complex):
        return repr(v)
    return str(v)


def _factor(s: str) -> str:
    try:
        float(s)
        return s
    except ValueError:
        pass
    simple = s.lstrip("-").replace("^", "").replace("*", "").replace("_", "")
    return s if simple.isalnum() or s.lstrip("-").isdigit() else f"({s})"


def format_specialized(items) -> str:
    """``[(value, monomial)]`` with already specialised coefficients."""
    parts = []
    for v, mono in items:
        c = format_value(v)
        if mono == "1":
            body = _factor(c) if parts else c
        elif c == "1":
            body = mono
        elif c == "-1":
            body = f"-{mono}"
        else:
            body = f"{_factor(c)}*{mono}"
        parts.append(body)
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


# ---------------------------------------------------------------------------
# systems
# ---------------------------------------------------------------------------

HPQ_ALPHABET = Alphabet(("x", "y", "z"))
LOCAL_ALPHABET = Alphabet(("x", "y", "z"), frozenset({"x", "z"}))
APQ_ALPHABET = Alphabet(("x", "y", "z", "w"), frozenset({"z", "w"}))


class System:
    """An algebra that expressions can be evaluated in."""

    def __init__(self, name: str):
        self.name = name
        self.coeff_map = None
        if name == "hpq":
            self.alphabet = HPQ_ALPHABET
            alg = HeisenbergAlgebra()
            self.images = {Letter(n): g for n, g in alg.gens().items()}
            self.one = alg.one
        elif name == "local":
            self.alphabet = LOCAL_ALPHABET
            alg = LocalizedHeisenberg()
            self.images = {Letter(n): g for n, g in alg.gens().items()}
            self.images[Letter("x", True)] = alg.x_inv
            self.images[Letter("z", True)] = alg.z_inv
            self.one = alg.one
        elif name == "gwa:hpq":
            self.alphabet = HPQ_ALPHABET
            data = hpq_gwa_data()
            self.images = {Letter("x"): data.x(), Letter("y"): data.y(),
                           Letter("z"): data.base(data.ring.gen("z"))}
            self.one = data.one()
        elif name == "gwa:apq":
            self.alphabet = APQ_ALPHABET
            data = apq_gwa_data()
            self.images = {Letter("x"): data.x(), Letter("y"): data.y()}
            for g in ("z", "w"):
                self.images[Letter(g)] = data.base(data.ring.gen(g))
                self.images[Letter(g, True)] = data.base(data.ring.gen(g, -1))
            self.one = data.one()
        elif name.startswith("gwa:aprs:"):
            try:
                r, s = (int(v) for v in name[len("gwa:aprs:"):].split(","))
                spec = OneParam(r, s)
            except ValueError as err:
                raise UsageError(f"bad system {name!r}: {err}") from None
            self.alphabet = APQ_ALPHABET
            model = TensorModel(tensor_power(1, r, s), r, s)
            self.images = {
                Letter(letter.name[0], letter.inverse): img for letter, img in model.images().items()
            }
            self.one = model.data.one()
            self.coeff_map = spec
        else:
            raise UsageError(f"unknown system {name!r} (use hpq, local, gwa:hpq, gwa:apq, gwa:aprs:R,S)")

    def parse(self, text: str) -> FreeElement:
        return parse_expression(text, self.alphabet)

    def evaluate(self, expr: FreeElement):
        if self.coeff_map is not None:
            expr = FreeElement._raw({w: self.coeff_map(c) for w, c in expr.terms.items()})
        return evaluate(expr, self.images, self.one)


def render(elem, spec) -> str:
    """Normal form, with coefficients specialised when a mode is given."""
    if spec is None:
        return str(elem)
    if hasattr(elem, "sorted_terms") and hasattr(elem, "algebra"):
        from .hpq.algebra import format_pbw_monomial

        items = [(spec(c), format_pbw_monomial(k)) for k, c in elem.sorted_terms()]
    else:
        raise UsageError("--spec is only supported for hpq and local systems")
    items = [(v, m) for v, m in items if _nonzero(v)]
    if all(isinstance(v, Scalar) for v, _ in items):
        from .freealg import format_terms

        return format_terms(items)
    return format_specialized(items)


def _nonzero(v):
    if isinstance(v, complex):
        return abs(v) > 1e-12
    return bool(v)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_normalize(args, out):
    system = System(args.system)
    spec = parse_mode(args.spec)
    out.write(render(system.evaluate(system.parse(args.expr)), spec) + "\n")
    return 0


def cmd_mul(args, out):
    system = System(args.system)
    spec = parse_mode(args.spec)
    f = system.evaluate(system.parse(args.left))
    g = system.evaluate(system.parse(args.right))
    out.write(render(f * g, spec) + "\n")
    return 0


def cmd_commutator(args, out):
    system = System(args.system)
    spec = parse_mode(args.spec)
    f = system.evaluate(system.parse(args.left))
    g = system.evaluate(system.parse(args.right))
    lam = parse_scalar(args.lam) if args.lam else Scalar(1)
    if system.coeff_map is not None:
        lam = system.coeff_map(lam)
    out.write(render(f * g - (g * f) * lam, spec) + "\n")
    return 0


def cmd_eval(args, out):
    value = parse_scalar(args.expr)
    spec = parse_mode(args.spec)
    if spec is not None:
        value = spec(value)
    out.write(format_value(value) + "\n")
    return 0


def cmd_verify(args, out):
    mode = parse_mode(args.mode or args.spec)
    try:
        cfg = SuiteConfig(
            suite=args.suite,
            mode=mode,
            degree=args.degree,
            ident_range=args.range,
            vira=args.vira,
            window=args.window,
            module_window=args.module_window,
            matrix=args.matrix,
            dps=args.dps,
            pprime=args.pprime,
            seed=args.seed,
        )
        report = run_suite(cfg, jobs=args.jobs)
    except ValueError as err:
        raise UsageError(str(err)) from None
    for entry in report.entries:
        if args.verbose or not entry.passed:
            out.write(entry.line() + "\n")
    out.write(report.summary_line() + "\n")
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(report.to_jsonl())
    return 0 if report.all_passed() else 1


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="heisenweyl", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--system", default="hpq", help="hpq, local, gwa:hpq, gwa:apq or gwa:aprs:R,S")
        p.add_argument("--spec", help="generic, oneparam:R,S, cyclotomic:N:EP,EQ or numeric:P,Q")

    p = sub.add_parser("normalize", help="print the normal form of an expression")
    p.add_argument("expr")
    common(p)
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("mul", help="normal form of a product")
    p.add_argument("left")
    p.add_argument("right")
    common(p)
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("commutator", help="fg - lambda gf")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--lambda", dest="lam", help="scalar lambda (default 1)")
    common(p)
    p.set_defaults(func=cmd_commutator)

    p = sub.add_parser("eval", help="evaluate a scalar expression")
    p.add_argument("expr")
    p.add_argument("--spec", help="generic, oneparam:R,S, cyclotomic:N:EP,EQ or numeric:P,Q")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--mode", help="parameter mode (alias of --spec)")
    p.add_argument("--spec", help=argparse.SUPPRESS)
    p.add_argument("--system", help=argparse.SUPPRESS)
    p.add_argument("--report", help="write line-delimited JSON records here")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--degree", type=_positive, default=6, help="Fock degree bound")
    p.add_argument("--range", type=_positive, default=30, help="largest n for the reordering identities")
    p.add_argument("--vira", type=_positive, default=8, help="|n|, |m| bound for the Virasoro grid")
    p.add_argument("--window", type=_positive, default=12, help="|k| window for the action on v_k")
    p.add_argument("--module-window", type=_positive, default=20, help="|k| window for the module relation")
    p.add_argument("--matrix", type=_positive, default=64, help="oscillator matrix size")
    p.add_argument("--dps", type=_positive, default=50, help="decimal digits for the oscillator matrices")
    p.add_argument("--pprime", default="p^-1", help="z x -> p' x z coefficient for the diamond suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-v", "--verbose", action="store_true", help="print every entry")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except SpecializationError as err:
        factor = f" (offending factor: {err.factor})" if err.factor else ""
        sys.stderr.write(f"error: {err}{factor}\n")
        return 2
    except (ParseError, UsageError, ValueError, TypeError) as err:
        sys.stderr.write(f"error: {err}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
