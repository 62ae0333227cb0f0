"""A particular solution of the driven Bessel equation: the Struve function.

With a right-hand side the resolvent identity becomes
(1 + A) f = L(z^{-lambda} F) + f0, so an inhomogeneous problem needs no
seeds at all: the forcing term generates the whole series.  Driving the
Bessel operator with z^{nu - 1} produces the Struve function H_nu up to
its conventional prefactor 2^{1-nu} / (sqrt(pi) Gamma(1/2 + nu)), which is
kept outside the series so the coefficients stay rational.
"""

import math
from fractions import Fraction as Fr

from regsing import (
    LogSeries,
    OdeProblem,
    evaluate,
    solve,
    struve_prefactor,
    struve_series,
)

nu = Fr(1, 3)
cutoff = 14
rhs = LogSeries.monomial(1, nu - 1, cutoff)
prob = OdeProblem("two_point", {-1: 1}, {-2: -nu * nu, 0: 1},
                  rhs=rhs, series_cutoff=cutoff)

sol = solve(prob, 1, 0, 0, order=cutoff)   # no seeds: pure particular part
print(f"driven Bessel equation, forcing z^(nu-1), nu = {nu}")
print("  exponent   coefficient")
for (m, k), c in sorted(sol.psi.coeffs.items()):
    print(f"  z^{sol.psi.sigma + m!s:<8} {c}")

print(f"\nmatches the scaled Struve series "
      f"(-1)^v 4^(-v) / ((2nu+1) (3/2)_v (3/2+nu)_v): "
      f"{sol.psi == struve_series(nu, cutoff, scaled=True)}")

z = 0.5
pref = struve_prefactor(nu)
print(f"\nprefactor 2^(1-nu)/(sqrt(pi) Gamma(1/2+nu)) = {pref:.12f}")
value = pref * evaluate(sol.psi, z)
print(f"H_nu({z}) = {value:.12f}")

# classical coefficient check: H_nu = sum (-1)^v (z/2)^(2v+1+nu)
#                                     / (Gamma(3/2+v) Gamma(3/2+nu+v))
classical = sum((-1) ** v * (z / 2) ** (2 * v + 1 + float(nu))
                / (math.gamma(1.5 + v) * math.gamma(1.5 + float(nu) + v))
                for v in range(8))
print(f"classical series sum: {classical:.12f}")
print(f"difference: {abs(value - classical):.2e}")
