"""Neumann-series solves, the logarithmic second solution, residual and
contraction diagnostics.

The transformed equation is (1 + A) f = g with g = L(z^-lambda F) + f0
(three_point: z^-lambda-1 F), so f = sum_j (-A)^j g.  A raises the minimal
power by at least 1, hence J = N applications pin every coefficient up to
order N exactly; there is no convergence failure at fixed order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .logseries import (
    LogSeries,
    differentiate,
    linear_combine,
    mul_poly,
    shift_exponent,
    truncate,
    weighted_norm_estimate,
)
from .operators import SingularTerm, apply_A, apply_L, make_f0
from .problem import OdeProblem, OperatorSpec, indicial, transform
from .scalars import Scalar, as_int


class IndexMismatch(ArithmeticError):
    """The c1 seed hit an unrecoverable singular term: the chosen index and
    the equation are inconsistent (only reachable in float mode)."""


@dataclass(frozen=True)
class Solution:
    lam: Scalar
    f: LogSeries                    # solution of (1+A) f = g
    psi: LogSeries                  # assembled psi = z^lambda f
    iterations_used: int
    residual_leading_order: int | None   # exponent above psi's base, None if clean
    mode: str
    log_streams: tuple[tuple[Fraction, ...], tuple[Fraction, ...]] | None = None


def _neg(f: LogSeries) -> LogSeries:
    return LogSeries(f.sigma, f.order, {mk: -c for mk, c in f.coeffs.items()})


def neumann_apply_resolvent(spec: OperatorSpec, g: LogSeries, order: int) -> LogSeries:
    """sum_{j} (-A)^j g, exact through `order` above g's base exponent."""
    total, _ = _neumann(spec, g, order)
    return total


def _neumann(spec: OperatorSpec, g: LogSeries, order: int) -> tuple[LogSeries, int]:
    # terminates early once a term starts beyond the horizon; tracks the
    # number of applications of A for diagnostics
    n = min(order, g.order)
    total = truncate(g, n)
    term = total
    horizon = g.sigma + n
    used = 0
    for _ in range(n):
        if term.is_zero():
            break
        term = _neg(apply_A(spec, term))
        used += 1
        if term.is_zero() or min(term.sigma + m for m, _ in term.coeffs) > horizon:
            break
        total = linear_combine(1, total, 1, term)
    return total, used


def solve(problem: OdeProblem, root_choice: int, c0: Scalar, c1: Scalar,
          order: int | None = None) -> Solution:
    """Truncated solution psi = z^lambda f for the chosen indicial root.

    c0 and c1 seed the complementary solution through f0; a problem rhs
    contributes the particular part L(z^-lambda F) (three_point:
    z^-lambda-1 F).  Superposition holds exactly in rational mode.
    """
    n = problem.series_cutoff if order is None else order
    spec = transform(problem, root_choice)
    g = None
    if c0 != 0 or c1 != 0:
        g = make_f0(spec, c0, c1, order=n)
    if problem.rhs is not None and not problem.rhs.is_zero():
        shift = -spec.lam - (1 if problem.kind == "three_point" else 0)
        part = apply_L(spec, shift_exponent(problem.rhs, shift))
        g = part if g is None else linear_combine(1, g, 1, part)
    if g is None:
        g = LogSeries.zero(n)
    try:
        f, used = _neumann(spec, g, n)
    except SingularTerm as exc:
        if c1 != 0:
            raise IndexMismatch(
                f"c1 seed at root {spec.lam} produced {exc}") from exc
        raise
    psi = shift_exponent(f, spec.lam)
    sol = Solution(lam=spec.lam, f=f, psi=psi, iterations_used=used,
                   residual_leading_order=None, mode=psi.mode)
    rel = _relative_residual_order(problem, sol)
    return Solution(lam=sol.lam, f=sol.f, psi=sol.psi,
                    iterations_used=sol.iterations_used,
                    residual_leading_order=rel, mode=sol.mode)


def residual(problem: OdeProblem, sol: Solution) -> Scalar | None:
    """Absolute z-exponent of the lowest nonvanishing coefficient left after
    substituting the truncated psi back into the equation, or None if the
    substitution vanishes identically on the visible grid (terminating
    solutions).  Success contract: at least lambda + N - 1.
    """
    pad = problem.series_cutoff + 3
    f = truncate(sol.f, sol.f.order + pad)   # the truncation itself, exactly
    psi = shift_exponent(f, sol.lam)
    d1 = differentiate(psi)
    d2 = differentiate(d1)
    if problem.kind == "two_point":
        # R = psi'' + p psi' + q psi - F, p = sum_{i>=-1} p_i z^i
        p_poly = [(i + 1, problem.p(i)) for i in range(-1, problem.series_cutoff + 1)]
        q_poly = [(i + 2, problem.q(i)) for i in range(-2, problem.series_cutoff)]
        r = linear_combine(1, d2, 1, shift_exponent(mul_poly(d1, p_poly), -1))
        r = linear_combine(1, r, 1, shift_exponent(mul_poly(psi, q_poly), -2))
    else:
        # R = z(1-z) psi'' + p psi' + q psi - F, p = z sum p_i z^i, q = z sum q_i z^i
        p_poly = [(i + 1, problem.p(i)) for i in range(-1, problem.series_cutoff + 1)]
        q_poly = [(i + 2, problem.q(i)) for i in range(-2, problem.series_cutoff)]
        r = mul_poly(d2, [(1, 1), (2, -1)])
        r = linear_combine(1, r, 1, mul_poly(d1, p_poly))
        r = linear_combine(1, r, 1, shift_exponent(mul_poly(psi, q_poly), -1))
    if problem.rhs is not None and not problem.rhs.is_zero():
        r = linear_combine(1, r, -1, truncate(problem.rhs, r.order))
    if r.mode == "exact":
        nonzero = [r.sigma + m for (m, _k), c in r.coeffs.items() if c != 0]
    else:
        scale = max((abs(float(c)) for c in sol.f.coeffs.values()), default=1.0)
        tol = 1e-10 * max(1.0, scale)
        nonzero = [r.sigma + m for (m, _k), c in r.coeffs.items() if abs(float(c)) > tol]
    return min(nonzero) if nonzero else None


def _relative_residual_order(problem: OdeProblem, sol: Solution) -> int | None:
    lead = residual(problem, sol)
    if lead is None:
        return None
    rel = as_int(lead - sol.lam - sol.f.sigma)
    return rel


def log_second_recurrence_streams(n: int, m_max: int) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Iterate the log-case recurrences from the base step
    c1(0) = 1/(4^n n!^2), c2(0) = 0:

        c1(m+1) = c1(m)/((1+m)(1+m+n))
        c2(m+1) = c2(m)/((1+m)(1+m+n)) - c1(m)(2+2m+n)/(2(1+m)^2(1+m+n)^2)
    """
    fact = 1
    for j in range(1, n + 1):
        fact *= j
    c1 = Fraction(1, 4**n * fact * fact)
    c2 = Fraction(0)
    c1s, c2s = [c1], [c2]
    for m in range(m_max):
        den = Fraction((1 + m) * (1 + m + n))
        c2 = c2 / den - c1 * (2 + 2 * m + n) / (2 * den**2)
        c1 = c1 / den
        c1s.append(c1)
        c2s.append(c2)
    return tuple(c1s), tuple(c2s)


def solve_log_second(problem: OdeProblem, n: int, order: int | None = None) -> Solution:
    """Second solution in the integer-gap (resonant) case, via the generic
    pipeline: the c1 seed is z^{-2n}/(-2n) (log z when n = 0) and the log
    branch of L fires at the resonant step.  The recurrence-iterated
    coefficient streams ride along for cross-checking.
    """
    idx = indicial(problem)
    gap = as_int(idx.delta_lambda)
    if gap is None:
        raise ValueError(f"gap {idx.delta_lambda} is not an integer")
    if gap != 2 * n:
        raise ValueError(f"expected gap 2n = {2 * n}, problem has {gap}")
    N = problem.series_cutoff if order is None else order
    sol = solve(problem, 1, 0, 1, order=N)
    streams = log_second_recurrence_streams(n, max(0, (N - 2 * n) // 2))
    return Solution(lam=sol.lam, f=sol.f, psi=sol.psi,
                    iterations_used=sol.iterations_used,
                    residual_leading_order=sol.residual_leading_order,
                    mode=sol.mode, log_streams=streams)


def contraction_report(spec: OperatorSpec, z0: float) -> float:
    """Empirical contraction factor: max norm ratio ||A f||/||f|| over the
    probe basis {1, z, z^2} (+ log z when alpha is a positive integer),
    in the weighted sup-norm with weight |z|^alpha on (0, z0]."""
    if not 0 < z0 < 1:
        raise ValueError("need 0 < z0 < 1")
    probes = [LogSeries.monomial(1, 0, 8),
              LogSeries.monomial(1, 1, 8),
              LogSeries.monomial(1, 2, 8)]
    a_int = as_int(spec.alpha)
    if a_int is not None and a_int >= 1:
        probes.append(LogSeries.monomial(1, 0, 8, log_power=1))
    worst = 0.0
    for f in probes:
        num = weighted_norm_estimate(apply_A(spec, f), spec.alpha, z0)
        den = weighted_norm_estimate(f, spec.alpha, z0)
        worst = max(worst, num / den)
    return worst
