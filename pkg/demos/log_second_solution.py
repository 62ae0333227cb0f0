"""The logarithmic second solution at an integer-order Bessel point.

When the two indicial roots differ by an even integer 2n, the naive second
series collapses onto the first and a log z term appears.  The resolvent
pipeline handles this without special-casing the solver: the c1 seed
z^{-2n}/(-2n) hits the resonant step inside the double integration operator,
which emits the log branch, and the iteration then carries two coefficient
streams (plain and log) side by side.

An independent cross-check: iterating the two-term recurrence

    c1(m+1) = c1(m) / ((1+m)(1+m+n))
    c2(m+1) = c2(m) / ((1+m)(1+m+n)) - c1(m)(2+2m+n) / (2(1+m)^2 (1+m+n)^2)

from c1(0) = 1/(4^n n!^2), c2(0) = 0 gives the same rationals, and the
ratio c2/c1 reproduces the classical digamma combination.
"""

from fractions import Fraction as Fr

from regsing import (
    EULER_GAMMA,
    OdeProblem,
    digamma,
    log_second_recurrence_streams,
    solve_log_second,
)

n = 1
prob = OdeProblem("two_point", {-1: 1}, {-2: -n * n, 0: 1}, series_cutoff=10)
sol = solve_log_second(prob, n, order=10)

print(f"second Bessel solution for integer order n = {n}")
print("  m   k   coefficient of z^(n+m) log^k z")
for (m, k), c in sorted(sol.f.coeffs.items()):
    print(f"  {m:2d}  {k}   {c}")

c1s, c2s = sol.log_streams
r1, r2 = log_second_recurrence_streams(n, len(c1s) - 1)
print(f"\npipeline log streams equal the recurrence iteration: "
      f"{tuple(c1s) == r1 and tuple(c2s) == r2}")

print("\n  m   c1(m)      c2(m)        c2/c1")
for m, (a, b) in enumerate(zip(c1s, c2s)):
    print(f"  {m}   {str(a):10s} {str(b):12s} {b / a}")

# c2/c1 = -(H_m - H_n + H_{m+n})/2, which is the digamma combination
# -(psi(1+m) + psi(1+m+n) - psi(1+n) + gamma)/2
m = 2
ratio = float(c2s[m] / c1s[m])
psi_form = -(digamma(1.0 + m) + digamma(1.0 + m + n)
             - digamma(1.0 + n) + EULER_GAMMA) / 2
print(f"\ndigamma form at m = {m}: {psi_form:.15f}")
print(f"rational stream ratio:  {ratio:.15f}")
print(f"difference: {abs(ratio - psi_form):.2e}")
