"""The integral operator L, its integration-constant kernel f0, and the
integro-differential operator A.

    L g = int z^-alpha ( int z^alpha g dz ) dz
    A f = L( sum_i C_i z^i f' + sum_i D_i z^{i-1} f [- z f''] )

L is a right inverse of f -> f'' + (alpha/z) f', so the transformed equation
becomes (1 + A) f = L(z^-lambda F) + f0 (two_point; the three_point scaling
is z^-lambda-1 F).  Everything is composed from the series primitives, so the
log bookkeeping of the resonant cases is inherited rather than special-cased:

    L z^p            = z^{p+2} / ((p+2)(alpha+p+1))      generic
    L z^{-2}         = log(z) / (alpha-1)                (alpha != 1)
    L z^{-2}         = log(z)^2 / 2                      (alpha = 1)
    L z^{-1-alpha}   = z^{1-alpha} (log(z)/(1-alpha) - 1/(1-alpha)^2)
    L z^m log z      = z^{m+2} (log(z)/((m+2)(alpha+m+1))
                       - (alpha+2m+3)/((m+2)^2 (alpha+m+1)^2))

In exact-rational mode every monomial has a well-defined image.  SingularTerm
fires only in float mode when an exponent sits too close to a resonance for
the branch to be decided reliably.
"""

from __future__ import annotations

from .logseries import (
    LogSeries,
    differentiate,
    integrate,
    linear_combine,
    mul_poly,
    shift_exponent,
)
from .problem import OperatorSpec
from .scalars import Scalar, is_exact


class SingularTerm(ArithmeticError):
    """Float-mode exponent within 1e-12 of a resonance: the log-vs-power
    branch cannot be decided, which signals a wrong index or an equation
    violating the regular-singularity hypothesis."""


def _resonance_guard(g: LogSeries) -> None:
    if is_exact(g.sigma):
        return
    for (m, _k) in g.coeffs:
        p = g.sigma + m
        if 0 < abs(p + 1) < 1e-12:
            raise SingularTerm(
                f"exponent {p} within 1e-12 of the resonant value -1")


def apply_L(spec: OperatorSpec, f: LogSeries) -> LogSeries:
    """L f, term-exact, raising the base exponent by 2."""
    inner = shift_exponent(f, spec.alpha)
    _resonance_guard(inner)
    mid = shift_exponent(integrate(inner), -spec.alpha)
    _resonance_guard(mid)
    return integrate(mid)


def make_f0(spec: OperatorSpec, c0: Scalar, c1: Scalar, order: int = 12) -> LogSeries:
    """Kernel of L: f0 = c0 + c1 * int z^-alpha dz.

    alpha != 1: f0 = c0 + c1 z^{1-alpha}/(1-alpha); alpha = 1: c0 + c1 log z.
    """
    a = spec.alpha
    if a == 1:
        return LogSeries(0, order, {(0, 0): c0, (0, 1): c1})
    if not is_exact(a) and abs(a - 1) < 1e-12:
        raise SingularTerm(f"alpha {a} within 1e-12 of 1: f0 branch undecidable")
    tail = LogSeries.monomial(c1 / (1 - a), 1 - a, order) if c1 != 0 else None
    head = LogSeries.monomial(c0, 0, order) if c0 != 0 else None
    if head is None and tail is None:
        return LogSeries.zero(order)
    if tail is None:
        return head
    if head is None:
        return tail
    return linear_combine(1, head, 1, tail)  # NonIntegerExponentGap if 1-alpha isn't an integer


def apply_A(spec: OperatorSpec, f: LogSeries) -> LogSeries:
    """A f = L( C(z) f' + D(z)/z f [- z f''] ), composed from series primitives."""
    df = differentiate(f)
    c_poly = list(enumerate(spec.c_coeffs))
    d_poly = list(enumerate(spec.d_coeffs))
    integrand = linear_combine(
        1, mul_poly(df, c_poly),
        1, shift_exponent(mul_poly(f, d_poly), -1))
    if spec.has_z_d2_term:
        integrand = linear_combine(
            1, integrand,
            1, mul_poly(differentiate(df), [(1, -1)]))
    return apply_L(spec, integrand)
