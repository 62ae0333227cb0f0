"""Self-checks for the reference series (these are the oracles other tests
trust, so they are validated against classical identities only)."""

import math
from fractions import Fraction as Fr

import pytest

from regsing.catalog import (
    ParameterError,
    bessel_j_series,
    bessel_log_second_series,
    harmonic,
    hyp1f1_series,
    hyp2f1_series,
    log_second_c1,
    log_second_c2,
    pochhammer,
    struve_prefactor,
    struve_series,
)
from regsing.logseries import LogSeries, differentiate, linear_combine, shift_exponent


def test_pochhammer_factorial():
    assert pochhammer(Fr(1), 4) == 24
    assert pochhammer(Fr(1, 2), 2) == Fr(3, 4)
    assert pochhammer(Fr(3), 0) == 1


def test_pochhammer_recurrence():
    for a in (Fr(2, 3), Fr(-5, 2), Fr(4)):
        for m in range(5):
            assert pochhammer(a, m + 1) == pochhammer(a, m) * (a + m)


def test_harmonic():
    assert harmonic(0) == 0
    assert harmonic(1) == 1
    assert harmonic(4) == Fr(25, 12)


def test_hyp2f1_geometric():
    s = hyp2f1_series(Fr(1), Fr(1), Fr(1), 6)
    assert all(s.coefficient(n) == 1 for n in range(7))


def test_hyp1f1_telescoping():
    s = hyp1f1_series(Fr(1), Fr(2), 6)
    for n in range(7):
        assert s.coefficient(n) == Fr(1, math.factorial(n + 1))


def test_hyp2f1_contiguity():
    a, b, c = Fr(1, 2), Fr(1, 3), Fr(5, 4)
    s = hyp2f1_series(a, b, c, 10)
    for n in range(10):
        r = s.coefficient(n + 1) / s.coefficient(n)
        assert r == (a + n) * (b + n) / ((c + n) * (1 + n))


def test_hyp2f1_terminates_for_gegenbauer_case():
    for n in (1, 2, 4):
        s = hyp2f1_series(Fr(-n), Fr(n + 1), Fr(1), 8)
        assert s.coefficient(n) != 0
        assert all(s.coefficient(m) == 0 for m in range(n + 1, 9))


def test_parameter_errors():
    with pytest.raises(ParameterError):
        hyp1f1_series(Fr(1), Fr(0), 4)
    with pytest.raises(ParameterError):
        hyp2f1_series(Fr(1), Fr(1), Fr(-2), 4)
    with pytest.raises(ParameterError):
        bessel_j_series(Fr(-2), 4)
    with pytest.raises(ParameterError):
        struve_series(Fr(-1, 2), 4)


def test_bessel_j_series_values():
    nu = Fr(1, 3)
    s = bessel_j_series(nu, 8)
    for k in range(5):
        expect = Fr((-1) ** k) / (math.factorial(k) * pochhammer(1 + nu, k) * 4**k)
        assert s.coefficient(2 * k) == expect
    assert s.coefficient(1) == 0 and s.coefficient(3) == 0


def test_bessel_j_matches_float_bessel():
    # normalized series times (z/2)^nu / Gamma(1+nu) is J_nu
    from scipy.special import jv
    nu, z = 1.0 / 3.0, 0.5
    s = bessel_j_series(Fr(1, 3), 30)
    from regsing.logseries import evaluate
    val = evaluate(s, z) * (z / 2) ** nu / math.gamma(1 + nu)
    assert val == pytest.approx(jv(nu, z), abs=1e-14)


def test_struve_leading_term():
    # true H_0 starts with (z/2)/Gamma(3/2)^2 = 2z/pi
    s = struve_series(Fr(0), 6, scaled=False)
    assert s.coefficient(0) == pytest.approx(2 / math.pi, rel=1e-14)
    assert s.sigma == 1


def test_struve_scaled_vs_unscaled():
    nu = Fr(1, 3)
    scaled = struve_series(nu, 8, scaled=True)
    true = struve_series(nu, 8, scaled=False)
    pref = struve_prefactor(nu)
    for v in range(5):
        assert float(scaled.coefficient(2 * v)) * pref == \
            pytest.approx(true.coefficient(2 * v), rel=1e-13)


def test_struve_unscaled_matches_classical_formula():
    nu, z = 0, 0.5
    s = struve_series(Fr(0), 12, scaled=False)
    for v in range(6):
        classical = (-1) ** v / (math.gamma(1.5 + v) * math.gamma(1.5 + nu + v)) \
            * 2.0 ** (-(2 * v + 1 + nu))
        assert s.coefficient(2 * v) == pytest.approx(classical, rel=1e-13)
    from scipy.special import struve
    from regsing.logseries import evaluate
    assert evaluate(s, z) == pytest.approx(struve(0, z), abs=1e-14)


def test_struve_satisfies_driven_bessel_equation():
    # psi'' + psi'/z + (1 - nu^2/z^2) psi = z^{nu-1}, symbolically, using
    # only series primitives (no solver)
    nu = Fr(1, 3)
    psi = struve_series(nu, 10, scaled=True)
    d1 = differentiate(psi)
    d2 = differentiate(d1)
    lhs = linear_combine(1, d2, 1, shift_exponent(d1, -1))
    lhs = linear_combine(1, lhs, 1, psi)
    lhs = linear_combine(1, lhs, -nu * nu, shift_exponent(psi, -2))
    want = LogSeries.monomial(1, nu - 1, lhs.order)
    assert lhs == want


def test_log_second_closed_forms_frozen_values():
    assert log_second_c1(1, 0) == Fr(1, 4) and log_second_c2(1, 0) == 0
    assert log_second_c1(1, 1) == Fr(1, 8) and log_second_c2(1, 1) == Fr(-3, 32)
    assert log_second_c1(1, 2) == Fr(1, 48) and log_second_c2(1, 2) == Fr(-7, 288)


def test_log_second_series_layout():
    s = bessel_log_second_series(1, 8)
    assert s.sigma == -2
    assert s.coefficient(0, 0) == Fr(-1, 2)            # seed z^-2/(-2)
    assert s.coefficient(2, 1) == Fr(1, 4)             # log z / 4
    assert s.coefficient(2, 0) == 0
    assert s.coefficient(4, 1) == Fr(-1, 32)           # -z^2 log z / 32
    assert s.coefficient(4, 0) == Fr(3, 128)
    assert s.coefficient(6, 1) == Fr(1, 48) / 16       # (+1)^2 4^-2 c1(2)
    assert s.coefficient(6, 0) == Fr(-7, 288) / 16


def test_log_second_series_n0():
    s = bessel_log_second_series(0, 4)
    assert s.sigma == 0
    assert s.coefficient(0, 1) == 1 and s.coefficient(0, 0) == 0
    # m=1 slot: -(1/4)(log z - 1) z^2
    assert s.coefficient(2, 1) == Fr(-1, 4)
    assert s.coefficient(2, 0) == Fr(1, 4)


def test_log_second_satisfies_bessel_equation():
    # the n=1 second solution must satisfy psi'' + psi'/z + (1 - 1/z^2) psi = 0
    # symbolically through the visible grid (psi = z^n f here: lam = n = 1,
    # base exponent of f is -2n, so psi runs from z^-1)
    n = 1
    f = bessel_log_second_series(n, 10)
    psi = shift_exponent(f, n)
    d1 = differentiate(psi)
    d2 = differentiate(d1)
    lhs = linear_combine(1, d2, 1, shift_exponent(d1, -1))
    lhs = linear_combine(1, lhs, 1, psi)
    lhs = linear_combine(1, lhs, -n * n, shift_exponent(psi, -2))
    assert lhs.is_zero()
