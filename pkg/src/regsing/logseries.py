"""Truncated generalized power series with log factors.

A LogSeries represents

    f(z) = sum_{m=0..order} sum_{k=0..K} c[m,k] * z**(sigma+m) * log(z)**k

where sigma is a real base exponent (Fraction when possible) and the c[m,k]
are exact rationals or floats (see scalars).  order = N is an exactness
horizon: coefficients for m <= N are complete, nothing is known above it.
Every operation computes the correct horizon of its result, so a solve at
order N and one at order N+5 agree on all coefficients up to N.

Values are immutable by convention: no operation mutates an input, and the
coeffs dict must not be touched after construction.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .scalars import Scalar, as_int, is_exact


class NonIntegerExponentGap(ValueError):
    """Two series whose base exponents do not differ by an integer."""


class DomainError(ValueError):
    """Evaluation point outside the series' real domain (z <= 0)."""


def _gap(sigma_f: Scalar, sigma_g: Scalar) -> int | None:
    """Integer gap sigma_g - sigma_f, or None."""
    d = sigma_g - sigma_f
    n = as_int(d)
    if n is not None:
        return n
    if isinstance(d, float) and abs(d - round(d)) < 1e-9:
        return round(d)
    return None


class LogSeries:
    __slots__ = ("sigma", "order", "coeffs")

    def __init__(self, sigma: Scalar, order: int, coeffs: dict[tuple[int, int], Scalar]):
        if order < 0:
            raise ValueError("order must be >= 0")
        clean = {}
        for (m, k), c in coeffs.items():
            if not (0 <= m <= order) or k < 0:
                raise ValueError(f"coefficient index ({m},{k}) outside grid")
            if c != 0:
                clean[(m, k)] = c
        self.sigma = sigma
        self.order = order
        self.coeffs = clean

    @classmethod
    def zero(cls, order: int, sigma: Scalar = 0) -> "LogSeries":
        return cls(sigma, order, {})

    @classmethod
    def monomial(cls, coeff: Scalar, sigma: Scalar, order: int, log_power: int = 0) -> "LogSeries":
        """coeff * z**sigma * log(z)**log_power as a series of the given order."""
        return cls(sigma, order, {(0, log_power): coeff})

    @property
    def max_log_power(self) -> int:
        return max((k for (_, k) in self.coeffs), default=0)

    @property
    def mode(self) -> str:
        if is_exact(self.sigma) and all(is_exact(c) for c in self.coeffs.values()):
            return "exact"
        return "float"

    def coefficient(self, m: int, k: int = 0) -> Scalar:
        return self.coeffs.get((m, k), 0)

    def coefficient_at(self, exponent: Scalar, k: int = 0) -> Scalar:
        """Coefficient of z**exponent * log(z)**k; exponent is absolute."""
        m = _gap(self.sigma, exponent)
        if m is None or not (0 <= m <= self.order):
            return 0
        return self.coeffs.get((m, k), 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self):
        """Sorted (m, k, coeff) triples."""
        for (m, k) in sorted(self.coeffs):
            yield m, k, self.coeffs[(m, k)]

    def __eq__(self, other):
        """Content equality: same terms at the same absolute exponents.

        The order horizon is an annotation, not content; zero series of any
        base exponent compare equal.
        """
        if not isinstance(other, LogSeries):
            return NotImplemented
        if self.coeffs != other.coeffs:
            return False
        return not self.coeffs or self.sigma == other.sigma

    def __hash__(self):
        return hash((self.sigma, frozenset(self.coeffs.items())))

    def __repr__(self):
        parts = []
        for m, k, c in self.terms():
            p = self.sigma + m
            s = f"{c}"
            if p != 0:
                s += f"*z^{p}"
            if k:
                s += f"*log(z)^{k}" if k > 1 else "*log(z)"
            parts.append(s)
        body = " + ".join(parts) if parts else "0"
        return f"LogSeries({body}; order={self.order})"


def truncate(f: LogSeries, order: int) -> LogSeries:
    """Restrict the exactness horizon (or pad it upward with unknowns)."""
    if order >= f.order:
        return LogSeries(f.sigma, order, f.coeffs)
    kept = {mk: c for mk, c in f.coeffs.items() if mk[0] <= order}
    return LogSeries(f.sigma, order, kept)


def shift_exponent(f: LogSeries, delta: Scalar) -> LogSeries:
    """Multiply by z**delta (exact: only the base exponent moves)."""
    return LogSeries(f.sigma + delta, f.order, f.coeffs)


def linear_combine(a: Scalar, f: LogSeries, b: Scalar, g: LogSeries) -> LogSeries:
    """a*f + b*g on the aligned exponent grid.

    The base exponents must differ by an integer; the result is based at the
    smaller one.  The horizon is the smaller of the two aligned horizons
    (indices above it could receive contributions from an unknown tail).
    """
    gap = _gap(f.sigma, g.sigma)
    if gap is None:
        raise NonIntegerExponentGap(
            f"cannot align base exponents {f.sigma} and {g.sigma}")
    if gap >= 0:
        sigma, off_f, off_g = f.sigma, 0, gap
    else:
        sigma, off_f, off_g = g.sigma, -gap, 0
    order = min(off_f + f.order, off_g + g.order)
    out: dict[tuple[int, int], Scalar] = {}
    if a != 0:
        for (m, k), c in f.coeffs.items():
            if off_f + m <= order:
                out[(off_f + m, k)] = a * c
    if b != 0:
        for (m, k), c in g.coeffs.items():
            mm = off_g + m
            if mm <= order:
                out[(mm, k)] = out.get((mm, k), 0) + b * c
    return LogSeries(sigma, order, out)


def mul_poly(f: LogSeries, poly: list[tuple[int, Scalar]]) -> LogSeries:
    """f times a Laurent-free polynomial given as (power, coeff) pairs.

    Powers must be non-negative integers.  The result is based at
    sigma + min(power) and keeps f's order: coefficients above it would
    need unknown terms of f.
    """
    if not poly:
        raise ValueError("poly must be nonempty")
    for d, _ in poly:
        if d < 0 or d != int(d):
            raise ValueError("poly powers must be non-negative integers")
    dmin = min(d for d, _ in poly)
    out: dict[tuple[int, int], Scalar] = {}
    for d, p in poly:
        if p == 0:
            continue
        off = d - dmin
        for (m, k), c in f.coeffs.items():
            mm = m + off
            if mm <= f.order:
                out[(mm, k)] = out.get((mm, k), 0) + p * c
    return LogSeries(f.sigma + dmin, f.order, out)


def differentiate(f: LogSeries) -> LogSeries:
    """Term rule d/dz [z^p log^k z] = p z^{p-1} log^k z + k z^{p-1} log^{k-1} z."""
    out: dict[tuple[int, int], Scalar] = {}
    for (m, k), c in f.coeffs.items():
        p = f.sigma + m
        if p != 0:
            out[(m, k)] = out.get((m, k), 0) + c * p
        if k > 0:
            out[(m, k - 1)] = out.get((m, k - 1), 0) + c * k
    return LogSeries(f.sigma - 1, f.order, out)


def integrate(f: LogSeries) -> LogSeries:
    """Indefinite integral, integration constant zero.

    For p = sigma+m != -1:
        int z^p log^k z dz = z^{p+1} sum_{j=0..k} (-1)^j k!/(k-j)! / (p+1)^{j+1} log^{k-j} z
    (integration by parts, j=0 term is the familiar z^{p+1} log^k z/(p+1)).
    For p = -1: int z^{-1} log^k z dz = log^{k+1} z / (k+1), raising K.
    """
    out: dict[tuple[int, int], Scalar] = {}
    for (m, k), c in f.coeffs.items():
        p = f.sigma + m
        if p == -1:
            key = (m, k + 1)
            out[key] = out.get(key, 0) + c * _inv(k + 1, c)
        else:
            fall = 1  # k!/(k-j)! running product
            for j in range(k + 1):
                if j > 0:
                    fall *= k - j + 1
                w = c * fall * _invpow(p + 1, j + 1, c)
                if j % 2:
                    w = -w
                key = (m, k - j)
                out[key] = out.get(key, 0) + w
    return LogSeries(f.sigma + 1, f.order, out)


def _inv(x: Scalar, like: Scalar) -> Scalar:
    # reciprocal matching the coefficient's mode
    if isinstance(like, float) or isinstance(x, float):
        return 1.0 / x
    return Fraction(1, 1) / Fraction(x)


def _invpow(x: Scalar, j: int, like: Scalar) -> Scalar:
    return _inv(x, like) ** j


def evaluate(f: LogSeries, z: float) -> float:
    """Float value of the truncated sum at a point z > 0."""
    if z <= 0:
        raise DomainError(f"series evaluation needs z > 0, got {z}")
    lz = math.log(z)
    total = 0.0
    for k in range(f.max_log_power + 1):
        # Horner in z for the log^k slice
        acc = 0.0
        for m in range(f.order, -1, -1):
            acc = acc * z + float(f.coeffs.get((m, k), 0))
        total += acc * lz**k
    return total * z ** float(f.sigma)


def weighted_norm_estimate(f: LogSeries, alpha: Scalar, z0: float, samples: int = 1000) -> float:
    """Estimate of sup over 0 < z <= z0 of |z|^alpha |f(z)|.

    Sampled on a geometric grid of `samples` points ending exactly at z0.
    Diagnostic only: tight enough for contraction reports, not a certified
    bound.
    """
    if not 0 < z0 < 1:
        raise ValueError("need 0 < z0 < 1")
    a = float(alpha)
    ratio = (1e-9) ** (1.0 / (samples - 1))  # grid spans [z0*1e-9, z0]
    best = 0.0
    z = z0
    for _ in range(samples):
        v = abs(z**a * evaluate(f, z))
        if v > best:
            best = v
        z *= ratio
    return best
