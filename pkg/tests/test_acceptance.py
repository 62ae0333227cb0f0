"""Acceptance gate: nine capability criteria, one PASS/FAIL line each.

Run `pytest tests/test_acceptance.py -s` to see the verdict lines as they
print.  Criterion 7 documents a real limitation: the fixed vertical-line
trapezoid quadrature cannot reach 1e-8 for these integrands (slow or absent
modulus decay on the line, and a pole landing on a node for the 2F1 case),
so that test fails honestly with the measured discrepancies.
"""

import math
import random
import time
from fractions import Fraction as Fr

from regsing.catalog import (
    bessel_j_series,
    hyp1f1_series,
    hyp2f1_series,
    struve_prefactor,
)
from regsing.logseries import LogSeries, differentiate, evaluate
from regsing.mellin import (
    EULER_GAMMA,
    ContourSpec,
    PoleError,
    catalog_family,
    contour_eval,
    digamma,
    family_operator,
    fractional_power_coeff,
    residue_eval,
)
from regsing.problem import OdeProblem, map_gegenbauer, transform
from regsing.solver import (
    contraction_report,
    log_second_recurrence_streams,
    residual,
    solve,
    solve_log_second,
)

from test_mellin import ALL_FAMILIES
from test_problem import bessel_problem, confluent_problem, gauss_problem
from test_solver import struve_problem


def _verdict(num: int, ok: bool, detail: str) -> None:
    print(f"{'PASS' if ok else 'FAIL'} criterion {num}: {detail}")
    assert ok, f"criterion {num}: {detail}"


def test_criterion_1_bessel_regular_bit_exact():
    t0 = time.perf_counter()
    nu = Fr(1, 3)
    sol = solve(bessel_problem(nu), 1, 1, 0, order=12)
    elapsed = time.perf_counter() - t0
    exact = sol.f == bessel_j_series(nu, 12)
    _verdict(1, exact and elapsed < 1.0,
             f"Bessel nu=1/3 order-12 coefficients bit-exact "
             f"({elapsed * 1000:.0f} ms)")


def test_criterion_2_irregular_solution_and_wronskian():
    nu = Fr(1, 3)
    prob = bessel_problem(nu)
    first = solve(prob, 1, 1, 0, order=12)
    second = solve(prob, 1, 0, 1, order=12)     # c1 seed, f sits at z^{-2nu}
    via_root2 = solve(prob, 2, 1, 0, order=12)  # same series built at root 2
    scale = Fr(-1, 2) / nu
    other = bessel_j_series(-nu, 12)
    series_ok = all(
        second.f.coefficient(2 * v) == scale * other.coefficient(2 * v)
        for v in range(7))
    routes_ok = all(
        second.f.coefficient(2 * v) == scale * via_root2.f.coefficient(2 * v)
        for v in range(7))
    z = 0.5
    w = (evaluate(first.psi, z) * evaluate(differentiate(second.psi), z)
         - evaluate(differentiate(first.psi), z) * evaluate(second.psi, z))
    _verdict(2, series_ok and routes_ok and abs(w) > 1e-6,
             f"J_-nu-proportional series bit-exact both routes, "
             f"|W(0.5)| = {abs(w):.6f}")


def test_criterion_3_hypergeometric_random_triples():
    rng = random.Random(1347)

    def rational():
        return Fr(rng.randint(-9, 9), rng.randint(2, 7))

    def upper():
        # c > 1 keeps lambda = 0 the larger indicial root
        return 1 + Fr(rng.randint(1, 9), rng.choice([2, 3, 4, 5, 7]))

    ok = True
    for _ in range(3):
        a, c = rational(), upper()
        sol = solve(confluent_problem(a, c), 1, 1, 0, order=12)
        ok = ok and sol.f == hyp1f1_series(a, c, 12)
    for _ in range(3):
        a, b, c = rational(), rational(), upper()
        sol = solve(gauss_problem(a, b, c), 1, 1, 0, order=12)
        ok = ok and sol.f == hyp2f1_series(a, b, c, 12)
    _verdict(3, ok, "1F1 and 2F1 order-12 coefficients bit-exact for "
                    "three seeded random rational parameter sets each")


def test_criterion_4_log_stream_recurrence_and_digamma():
    n = 1
    sol = solve_log_second(bessel_problem(Fr(n)), n, order=8)
    c1s, c2s = sol.log_streams
    r1, r2 = log_second_recurrence_streams(n, len(c1s) - 1)
    streams_ok = tuple(c1s) == r1 and tuple(c2s) == r2
    m = 2
    ratio = float(c2s[m] / c1s[m])
    # c2/c1 = -(H_m - H_n + H_{m+n})/2, rewritten through digamma values
    psi_form = -(digamma(1.0 + m) + digamma(1.0 + m + n)
                 - digamma(1.0 + n) + EULER_GAMMA) / 2
    gap = abs(ratio - psi_form)
    _verdict(4, streams_ok and gap < 1e-12,
             f"n=1 log streams match recurrence exactly to order 8; "
             f"digamma combination at (n,m)=(1,2) off by {gap:.2e}")


def test_criterion_5_struve_particular_solution():
    sol = solve(struve_problem(Fr(0), cutoff=9), 1, 0, 0, order=9)
    pref = struve_prefactor(0)
    worst = 0.0
    for v in range(5):
        got = float(sol.psi.coefficient_at(2 * v + 1)) * pref
        want = (-1) ** v / (2.0 * 4.0 ** v * math.gamma(1.5 + v) ** 2)
        worst = max(worst, abs(got - want))
    _verdict(5, worst <= 1e-12,
             f"Struve nu=0 coefficients through order 8 within {worst:.2e} "
             f"of (-1)^v 2^{{-2v-1}}/Gamma(3/2+v)^2")


def test_criterion_6_residual_property_all_catalog_problems():
    N = 12
    runs = [
        ("bessel regular", solve(bessel_problem(Fr(1, 3), N), 1, 1, 0)),
        ("bessel irregular", solve(bessel_problem(Fr(1, 3), N), 1, 0, 1)),
        ("bessel log second", solve_log_second(bessel_problem(Fr(1), N), 1)),
        ("confluent", solve(confluent_problem(Fr(2, 3), Fr(7, 5)), 1, 1, 0,
                            order=N)),
        ("gauss", solve(gauss_problem(Fr(1, 2), Fr(1, 3), Fr(5, 4)), 1, 1, 0,
                        order=N)),
        ("gauss second root", solve(gauss_problem(Fr(1, 2), Fr(1, 3),
                                                  Fr(5, 4)), 2, 1, 0,
                                    order=N)),
        ("gegenbauer", solve(map_gegenbauer(Fr(1, 4), Fr(1, 3), N), 1, 1, 0)),
        ("cosine", solve(OdeProblem("two_point", {}, {0: 1},
                                    series_cutoff=N), 2, 1, 0)),
        ("hyperbolic sine", solve(OdeProblem("two_point", {}, {0: -1},
                                             series_cutoff=N), 1, 1, 0)),
        ("struve", solve(struve_problem(Fr(1, 3), N), 1, 0, 0)),
    ]
    clean = all(sol.residual_leading_order is None
                or sol.residual_leading_order >= N - 1
                for _, sol in runs)

    # a single perturbed coefficient at 1e-6 must surface in the residual
    nu = Fr(1, 3)
    prob = bessel_problem(nu, N)
    sol = runs[0][1]
    bad_coeffs = dict(sol.f.coeffs)
    bad_coeffs[(4, 0)] += Fr(1, 10 ** 6)
    from dataclasses import replace
    from regsing.logseries import shift_exponent
    bad_f = LogSeries(sol.f.sigma, sol.f.order, bad_coeffs)
    bad = replace(sol, f=bad_f, psi=shift_exponent(bad_f, sol.lam))
    lead = residual(prob, bad)
    detected = lead is not None and lead < nu + N - 1
    _verdict(6, clean and detected,
             f"back-substitution residual vanishes through order >= {N - 2} "
             f"on {len(runs)} catalog problems; 1e-6 perturbation detected "
             f"(residual drops to order {lead})")


CONTOUR_CASES = [
    ("Exp", catalog_family("Exp")),
    ("BesselRegular(0)", catalog_family("BesselRegular", nu=0)),
    ("Hyp1F1(1,3/2)", catalog_family("Hyp1F1Regular", a=1, c=Fr(3, 2))),
    ("Hyp2F1(1/2,1/3,5/4)", catalog_family("Hyp2F1Regular", a=Fr(1, 2),
                                           b=Fr(1, 3), c=Fr(5, 4))),
    ("Struve(0)", catalog_family("Struve", nu=0)),
]


def test_criterion_7_series_contour_agreement():
    t0 = time.perf_counter()
    finer = ContourSpec(half_height=80.0, step=0.025)
    worst_gap = 0.0
    worst_drift = 0.0
    for label, fam in CONTOUR_CASES:
        for z in (0.25, 0.5):
            series = residue_eval(fam, z)
            try:
                coarse = contour_eval(fam, z, full_output=True).value
                gap = abs(coarse - series)
            except PoleError as exc:
                coarse = None
                gap = math.inf
                print(f"  {label} z={z}: quadrature impossible ({exc})")
            try:
                fine = contour_eval(fam, z, finer, full_output=True).value
                drift = math.inf if coarse is None else abs(fine - coarse)
            except PoleError:
                drift = math.inf
            if coarse is not None:
                print(f"  {label} z={z}: series {series:.9g}, "
                      f"quadrature {coarse:.9g}, |diff| {gap:.3e}, "
                      f"refinement drift {drift:.3e}")
            worst_gap = max(worst_gap, gap)
            worst_drift = max(worst_drift, drift)
    elapsed = time.perf_counter() - t0
    ok = worst_gap <= 1e-8 and worst_drift < 1e-9 and elapsed < 10.0
    _verdict(7, ok,
             f"worst |series - quadrature| = {worst_gap:.3e} "
             f"(needs 1e-8), worst refinement drift = {worst_drift:.3e} "
             f"(needs 1e-9), runtime {elapsed:.2f}s; the fixed line "
             f"quadrature cannot meet these tolerances (see README), "
             f"residue summation does")


def test_criterion_8_contraction_diagnostic():
    r_bessel = contraction_report(transform(bessel_problem(Fr(1)), 1), 0.5)
    r_confl = contraction_report(
        transform(confluent_problem(Fr(1), Fr(3, 2)), 1), 0.5)
    _verdict(8, r_bessel < 1.0 and r_confl < 1.0,
             f"contraction factors at z0=0.5: Bessel nu=1 {r_bessel:.3f}, "
             f"confluent (1,3/2) {r_confl:.3f}")


def test_criterion_9_fractional_power_consistency():
    ok = True
    for fam in ALL_FAMILIES:
        seed, apply_one = family_operator(fam, order=24)
        current = seed
        for v in range(7):
            data = fractional_power_coeff(fam, v)
            ok = ok and current.coefficient_at(data.exponent, 0) == data.coefficient
            ok = ok and current.coefficient_at(data.exponent, 1) == data.log_coefficient
            current = apply_one(current)
    _verdict(9, ok,
             f"closed-form integer powers v <= 6 equal iterated operator "
             f"application exactly for {len(ALL_FAMILIES)} family instances")
