"""Command-line surface: solve problems from JSON files, evaluate solutions,
run contour quadrature diagnostics, and compare solver output against the
classical-series oracles.

Exit codes: 0 success, 1 parse/schema errors, 2 solve-domain errors,
3 accuracy errors (quadrature tails, tolerance violations).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import factorial
from pathlib import Path

from .catalog import (
    ParameterError,
    bessel_j_series,
    bessel_log_second_series,
    hyp1f1_series,
    hyp2f1_series,
    struve_series,
)
from .logseries import (
    DomainError,
    LogSeries,
    NonIntegerExponentGap,
    evaluate,
    linear_combine,
)
from .mellin import (
    AccuracyError,
    ContourSpec,
    PoleError,
    catalog_family,
    contour_eval,
    fractional_power_coeff,
    residue_eval,
)
from .operators import SingularTerm
from .problem import ComplexRootsUnsupported, OdeProblem
from .scalars import parse_rational
from .solver import IndexMismatch, solve, solve_log_second


class ParseError(ValueError):
    """Problem file is not valid JSON or a value cannot be decoded."""


class SchemaError(ValueError):
    """Problem file JSON does not match the expected schema."""


_ALLOWED_KEYS = {"kind", "p", "q", "rhs", "series_cutoff"}
_RHS_KEYS = {"sigma", "power", "log_power", "coeff"}


def _scalar(value, where: str) -> Fraction:
    # rationals travel as strings (or ints) so nothing goes through floats
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError(
            f"{where}: write rationals as strings like \"-1/9\", not floats")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return parse_rational(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"{where}: {exc}") from exc
    raise ParseError(f"{where}: expected a rational, got {type(value).__name__}")


def _coeff_map(doc, name: str, low: int) -> dict:
    if not isinstance(doc, dict):
        raise SchemaError(f"'{name}' must be an object mapping index to rational")
    out = {}
    for key, value in doc.items():
        try:
            idx = int(key)
        except ValueError as exc:
            raise SchemaError(f"'{name}' key {key!r} is not an integer") from exc
        if idx < low:
            raise SchemaError(f"'{name}' index {idx} below minimum {low}")
        out[idx] = _scalar(value, f"{name}[{key}]")
    return out


def _rhs_series(doc, order: int) -> LogSeries:
    if not isinstance(doc, list) or not doc:
        raise SchemaError("'rhs' must be a non-empty list of term objects")
    series = None
    for pos, entry in enumerate(doc):
        where = f"rhs[{pos}]"
        if not isinstance(entry, dict):
            raise SchemaError(f"{where}: expected an object")
        unknown = set(entry) - _RHS_KEYS
        if unknown:
            raise SchemaError(f"{where}: unknown keys {sorted(unknown)}")
        sigma = _scalar(entry.get("sigma", 0), f"{where}.sigma")
        power = entry.get("power", 0)
        log_power = entry.get("log_power", 0)
        if not isinstance(power, int) or power < 0:
            raise SchemaError(f"{where}.power must be an integer >= 0")
        if not isinstance(log_power, int) or log_power < 0:
            raise SchemaError(f"{where}.log_power must be an integer >= 0")
        if "coeff" not in entry:
            raise SchemaError(f"{where}: missing required key 'coeff'")
        coeff = _scalar(entry["coeff"], f"{where}.coeff")
        term = LogSeries(sigma, order, {(power, log_power): coeff})
        try:
            series = term if series is None else linear_combine(1, series, 1, term)
        except NonIntegerExponentGap as exc:
            raise SchemaError(f"{where}: {exc}") from exc
    return series


def parse_problem(path) -> OdeProblem:
    """Load an OdeProblem from a JSON file (exact rationals throughout)."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("top level must be a JSON object")
    unknown = set(doc) - _ALLOWED_KEYS
    if unknown:
        raise SchemaError(f"unknown keys {sorted(unknown)}")
    if "kind" not in doc:
        raise SchemaError("missing required key 'kind'")
    kind = doc["kind"]
    if kind not in ("two_point", "three_point"):
        raise SchemaError("'kind' must be 'two_point' or 'three_point'")
    cutoff = doc.get("series_cutoff", 12)
    if not isinstance(cutoff, int) or cutoff < 1:
        raise SchemaError("'series_cutoff' must be a positive integer")
    p = _coeff_map(doc.get("p", {}), "p", -1)
    q = _coeff_map(doc.get("q", {}), "q", -2)   # missing q[-2] just means 0
    rhs = _rhs_series(doc["rhs"], cutoff) if "rhs" in doc else None
    try:
        return OdeProblem(kind, p, q, rhs=rhs, series_cutoff=cutoff)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def dump_problem(problem: OdeProblem, path) -> None:
    """Write a problem file that parse_problem reads back identically."""
    doc = {
        "kind": problem.kind,
        "p": {str(i): str(Fraction(v)) for i, v in sorted(problem.p_coeffs.items())},
        "q": {str(i): str(Fraction(v)) for i, v in sorted(problem.q_coeffs.items())},
        "series_cutoff": problem.series_cutoff,
    }
    if problem.rhs is not None:
        doc["rhs"] = [
            {"sigma": str(Fraction(problem.rhs.sigma)), "power": m,
             "log_power": k, "coeff": str(Fraction(c))}
            for (m, k), c in sorted(problem.rhs.coeffs.items())
        ]
    Path(path).write_text(json.dumps(doc, indent=2) + "\n")


# ----------------------------------------------------------------- helpers

def _to_float_problem(problem: OdeProblem) -> OdeProblem:
    rhs = problem.rhs
    if rhs is not None:
        rhs = LogSeries(float(rhs.sigma), rhs.order,
                        {mk: float(c) for mk, c in rhs.coeffs.items()})
    return OdeProblem(problem.kind,
                      {i: float(v) for i, v in problem.p_coeffs.items()},
                      {i: float(v) for i, v in problem.q_coeffs.items()},
                      rhs=rhs, series_cutoff=problem.series_cutoff)


def _print_series(f: LogSeries, meta: list, fmt: str, out) -> None:
    """Coefficient table: meta lines, then (m, log_power, coefficient) rows."""
    exact = f.mode == "exact"
    for key, value in meta:
        print(f"# {key}={value}", file=out)
    if fmt == "csv":
        if exact:
            print("m,log_power,coefficient_numerator,coefficient_denominator",
                  file=out)
        else:
            print("m,log_power,coefficient_float", file=out)
        for (m, k), c in sorted(f.coeffs.items()):
            if exact:
                c = Fraction(c)
                print(f"{m},{k},{c.numerator},{c.denominator}", file=out)
            else:
                print(f"{m},{k},{float(c)!r}", file=out)
    else:
        print(f"{'m':>4} {'k':>3}  coefficient", file=out)
        for (m, k), c in sorted(f.coeffs.items()):
            print(f"{m:>4} {k:>3}  {c}", file=out)


_FAMILY_CLI = {
    "exp": ("Exp", ()),
    "cos": ("TrigHyp", ("omega",)),
    "sin": ("TrigHyp", ("omega",)),
    "cosh": ("TrigHyp", ("omega",)),
    "sinh": ("TrigHyp", ("omega",)),
    "bessel": ("BesselRegular", ("nu",)),
    "bessel_irregular": ("BesselIrregular", ("nu",)),
    "bessel_log": ("BesselLogSecond", ("n",)),
    "hyp1f1": ("Hyp1F1Regular", ("a", "c")),
    "hyp1f1_irregular": ("Hyp1F1Irregular", ("a", "c")),
    "hyp2f1": ("Hyp2F1Regular", ("a", "b", "c")),
    "hyp2f1_irregular": ("Hyp2F1Irregular", ("a", "b", "c")),
    "struve": ("Struve", ("nu",)),
}


def _family_from_args(args) -> "CatalogFamily":
    tag, needed = _FAMILY_CLI[args.family]
    params = {}
    for name in needed:
        value = getattr(args, name, None)
        if value is None:
            raise ParameterError(f"--family {args.family} requires --{name}")
        params[name] = value
    if tag == "BesselLogSecond":
        n = params["n"]
        if n.denominator != 1:
            raise ParameterError("--n must be an integer")
        params["n"] = int(n)
    if tag == "TrigHyp":
        params["variant"] = args.family
    return catalog_family(tag, **params)


def _family_solver_series(args, order: int):
    """(solver LogSeries, oracle LogSeries) in the f-space of the family."""
    name = args.family
    fam = _family_from_args(args)
    if name == "exp":
        coeffs = {}
        for k in range(order + 1):
            data = fractional_power_coeff(fam, k)
            coeffs[(k, 0)] = data.coefficient * (1 if k % 2 == 0 else -1)
        got = LogSeries(0, order, coeffs)
        oracle = LogSeries(0, order,
                           {(k, 0): Fraction(1, factorial(k))
                            for k in range(order + 1)})
        return got, oracle
    if name in ("cos", "sin", "cosh", "sinh"):
        omega = args.omega
        q0 = omega * omega if name in ("cos", "sin") else -omega * omega
        prob = OdeProblem("two_point", {}, {0: q0}, series_cutoff=order)
        root = 2 if name in ("cos", "cosh") else 1
        sol = solve(prob, root, 1, 0, order=order)
        shift = 0 if name in ("cos", "cosh") else 1
        sign = -1 if name in ("cos", "sin") else 1
        coeffs = {}
        for k in range(order // 2 + 1):
            coeffs[(2 * k, 0)] = (sign ** k) * (omega ** (2 * k)) \
                / Fraction(factorial(2 * k + shift))
        oracle = LogSeries(0, order, coeffs)
        return sol.f, oracle
    if name == "bessel":
        nu = args.nu
        prob = OdeProblem("two_point", {-1: 1}, {-2: -nu * nu, 0: 1},
                          series_cutoff=order)
        return solve(prob, 1, 1, 0, order=order).f, bessel_j_series(nu, order)
    if name == "bessel_irregular":
        nu = args.nu
        prob = OdeProblem("two_point", {-1: 1}, {-2: -nu * nu, 0: 1},
                          series_cutoff=order)
        sol = solve(prob, 1, 0, 1, order=order)
        other = bessel_j_series(-nu, order)
        scale = Fraction(-1, 2) / nu
        oracle = LogSeries(-2 * nu, order,
                           {mk: scale * c for mk, c in other.coeffs.items()})
        return sol.f, oracle
    if name == "bessel_log":
        n = int(args.n)
        prob = OdeProblem("two_point", {-1: 1}, {-2: -n * n, 0: 1},
                          series_cutoff=order)
        sol = solve_log_second(prob, n, order=order)
        return sol.f, bessel_log_second_series(n, order)
    if name in ("hyp1f1", "hyp1f1_irregular"):
        a, c = args.a, args.c
        prob = OdeProblem("two_point", {-1: c, 0: -1}, {-1: -a},
                          series_cutoff=order)
        if name == "hyp1f1":
            return solve(prob, 1, 1, 0, order=order).f, hyp1f1_series(a, c, order)
        sol = solve(prob, 2, 1, 0, order=order)
        return sol.f, hyp1f1_series(a + 1 - c, 2 - c, order)
    if name in ("hyp2f1", "hyp2f1_irregular"):
        a, b, c = args.a, args.b, args.c
        prob = OdeProblem("three_point", {-1: c, 0: -(a + b + 1)},
                          {-1: -a * b}, series_cutoff=order)
        if name == "hyp2f1":
            return solve(prob, 1, 1, 0, order=order).f, hyp2f1_series(a, b, c, order)
        sol = solve(prob, 2, 1, 0, order=order)
        return sol.f, hyp2f1_series(a + 1 - c, b + 1 - c, 2 - c, order)
    if name == "struve":
        nu = args.nu
        rhs = LogSeries.monomial(1, nu - 1, order)
        prob = OdeProblem("two_point", {-1: 1}, {-2: -nu * nu, 0: 1},
                          rhs=rhs, series_cutoff=order)
        sol = solve(prob, 1, 0, 0, order=order)
        return sol.psi, struve_series(nu, order, scaled=True)
    raise ParameterError(name)  # pragma: no cover


# ---------------------------------------------------------------- commands

def cmd_solve(args) -> int:
    problem = parse_problem(args.problem)
    if args.dump_problem:
        dump_problem(problem, args.dump_problem)
    if args.mode == "float":
        problem = _to_float_problem(problem)
    c0, c1 = args.c0, args.c1
    if args.mode == "float":
        c0, c1 = float(c0), float(c1)
    sol = solve(problem, args.root, c0, c1, order=args.order)
    meta = [("lambda", sol.lam), ("sigma", sol.f.sigma), ("mode", sol.mode),
            ("iterations", sol.iterations_used),
            ("residual_leading_order", sol.residual_leading_order)]
    _print_series(sol.f, meta, args.format, sys.stdout)
    return 0


def cmd_eval(args) -> int:
    problem = parse_problem(args.problem)
    if args.mode == "float":
        problem = _to_float_problem(problem)
    c0, c1 = args.c0, args.c1
    if args.mode == "float":
        c0, c1 = float(c0), float(c1)
    sol = solve(problem, args.root, c0, c1, order=args.order)
    points = args.z or [0.5]
    if args.format == "csv":
        print("z,value")
        for z in points:
            print(f"{z!r},{evaluate(sol.psi, z)!r}")
    else:
        for z in points:
            print(f"psi({z}) = {evaluate(sol.psi, z):.12g}")
    return 0


def cmd_contour(args) -> int:
    family = _family_from_args(args)
    spec = ContourSpec(abscissa=args.abscissa, half_height=args.half_height,
                       step=args.step, branch=args.branch)
    points = args.z or [0.5]
    worst_tail = 0.0
    worst_imag = 0.0
    for z in points:
        res = contour_eval(family, z, spec, tol=args.tol, full_output=True)
        series = residue_eval(family, z)
        print(f"z={z}")
        print(f"  quadrature_value = {res.value:.10g}")
        print(f"  tail_estimate    = {res.tail_estimate:.3e}")
        print(f"  imag_magnitude   = {res.imag_magnitude:.3e}")
        print(f"  series_value     = {series:.10g}")
        print(f"  |difference|     = {abs(res.value - series):.3e}")
        worst_tail = max(worst_tail, res.tail_estimate)
        worst_imag = max(worst_imag, res.imag_magnitude)
    ok = worst_tail <= args.tol and worst_imag < 1e-8
    return 0 if ok else 3


def cmd_compare(args) -> int:
    got, oracle = _family_solver_series(args, args.order)
    diff = linear_combine(1, got, -1, oracle)
    worst = max((abs(c) for c in diff.coeffs.values()), default=0)
    print(f"max_coefficient_discrepancy = {worst}")
    ok = float(worst) <= args.tol
    family = _family_from_args(args)
    for z in args.z or []:
        series = residue_eval(family, z)
        try:
            quad = contour_eval(family, z, tol=args.tol)
            gap = abs(quad - series)
            print(f"z={z}: series={series:.12g} contour={quad:.12g} "
                  f"|diff|={gap:.3e}")
            ok = ok and gap <= args.tol
        except (AccuracyError, PoleError) as exc:
            print(f"z={z}: series={series:.12g} contour=FAILED ({exc})")
            ok = False
    return 0 if ok else 3


# ------------------------------------------------------------------ parser

def _add_series_flags(sub) -> None:
    sub.add_argument("--order", type=int, default=12)
    sub.add_argument("--root", type=int, choices=(1, 2), default=1)
    sub.add_argument("--c0", type=parse_rational, default=Fraction(0))
    sub.add_argument("--c1", type=parse_rational, default=Fraction(0))
    sub.add_argument("--mode", choices=("exact", "float"), default="exact")
    sub.add_argument("--format", choices=("table", "csv"), default="table")


def _add_family_flags(sub) -> None:
    sub.add_argument("--family", required=True, choices=sorted(_FAMILY_CLI))
    sub.add_argument("--nu", type=parse_rational)
    sub.add_argument("--a", type=parse_rational)
    sub.add_argument("--b", type=parse_rational)
    sub.add_argument("--c", type=parse_rational)
    sub.add_argument("--n", type=parse_rational)
    sub.add_argument("--omega", type=parse_rational, default=Fraction(1))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regsing",
        description="Series solutions of ODEs with a regular singular point, "
                    "with contour-integral cross checks.")
    subs = parser.add_subparsers(dest="command", required=True)

    solve_p = subs.add_parser("solve", help="solve a problem file")
    solve_p.add_argument("--problem", required=True)
    _add_series_flags(solve_p)
    solve_p.add_argument("--dump-problem", metavar="PATH",
                         help="write the parsed problem back to a JSON file")
    solve_p.set_defaults(func=cmd_solve)

    eval_p = subs.add_parser("eval", help="evaluate a solution at points")
    eval_p.add_argument("--problem", required=True)
    _add_series_flags(eval_p)
    eval_p.add_argument("--z", action="append", type=float)
    eval_p.set_defaults(func=cmd_eval)

    contour_p = subs.add_parser(
        "contour", help="vertical-line quadrature diagnostics for a family")
    _add_family_flags(contour_p)
    contour_p.add_argument("--z", action="append", type=float)
    contour_p.add_argument("--abscissa", type=float, default=0.5)
    contour_p.add_argument("--half-height", dest="half_height", type=float,
                           default=40.0)
    contour_p.add_argument("--step", type=float, default=0.05)
    contour_p.add_argument("--branch", choices=("principal", "lower"),
                           default="principal")
    contour_p.add_argument("--tol", type=float, default=1e-8)
    contour_p.set_defaults(func=cmd_contour)

    compare_p = subs.add_parser(
        "compare", help="compare solver output against the classical oracle")
    _add_family_flags(compare_p)
    compare_p.add_argument("--order", type=int, default=12)
    compare_p.add_argument("--tol", type=float, default=1e-8)
    compare_p.add_argument("--z", action="append", type=float,
                           help="also check series vs contour at these points")
    compare_p.set_defaults(func=cmd_compare)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help, 2 for usage errors; fold the latter
        # into the parse-error class
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except (ParseError, SchemaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (AccuracyError, PoleError) as exc:
        print(f"accuracy error: {exc}", file=sys.stderr)
        return 3
    except (ComplexRootsUnsupported, NonIntegerExponentGap, SingularTerm,
            IndexMismatch, DomainError, ParameterError, ValueError,
            ArithmeticError) as exc:
        print(f"solve error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
