"""Confluent and Gauss hypergeometric series from the generic solver.

The confluent equation z psi'' + (c - z) psi' - a psi = 0, rewritten in the
normalized form psi'' + (p(z)/z) psi' + (q(z)/z^2) psi = 0, has
p = c - z and q = -a z.  The Gauss equation brings in the extra -z f''
correction term (the "three point" kind here, since z = 1 is also singular).
Both produce their classical coefficient formulas bit-exactly, at either
indicial root, and the Gegenbauer equation maps onto the Gauss case by
moving the interval [-1, 1] to [0, 1].
"""

from fractions import Fraction as Fr

from regsing import (
    OdeProblem,
    hyp1f1_series,
    hyp2f1_series,
    map_gegenbauer,
    solve,
)


def confluent_problem(a, c, cutoff=12):
    return OdeProblem("two_point", {-1: c, 0: -1}, {-1: -a},
                      series_cutoff=cutoff)


def gauss_problem(a, b, c, cutoff=12):
    return OdeProblem("three_point", {-1: c, 0: -(a + b + 1)}, {-1: -a * b},
                      series_cutoff=cutoff)


a, c = Fr(2, 3), Fr(7, 5)
sol = solve(confluent_problem(a, c), 1, 1, 0, order=8)
print(f"1F1({a}; {c}; z) coefficients (a)_n / ((c)_n n!):")
for (m, k), v in sorted(sol.f.coeffs.items()):
    print(f"  n={m}: {v}")
print(f"bit-exact vs the Pochhammer formula: "
      f"{sol.f == hyp1f1_series(a, c, 8)}")

# second solution: root 2 gives z^{1-c} 1F1(a+1-c; 2-c; z)
second = solve(confluent_problem(a, c), 2, 1, 0, order=8)
primed = hyp1f1_series(a + 1 - c, 2 - c, 8)
print(f"second root {second.lam} = 1 - c, primed-parameter series: "
      f"{second.f == primed}")

ga, gb, gc = Fr(1, 2), Fr(1, 3), Fr(5, 4)
gauss = solve(gauss_problem(ga, gb, gc), 1, 1, 0, order=8)
print(f"\n2F1({ga}, {gb}; {gc}; z) matches (a)_n (b)_n / ((c)_n n!): "
      f"{gauss.f == hyp2f1_series(ga, gb, gc, 8)}")

# Gegenbauer with integer degree terminates: the polynomial case shows up
# as a residual of None (back-substitution vanishes identically)
beta, deg = Fr(1, 2), 3
geg = solve(map_gegenbauer(beta, deg), 1, 1, 0, order=10)
print(f"\nGegenbauer degree {deg}, beta = {beta}: polynomial solution")
for (m, k), v in sorted(geg.f.coeffs.items()):
    if v:
        print(f"  z^{m}: {v}")
print(f"residual: {geg.residual_leading_order} "
      f"(None means it terminated and solves the equation exactly)")
print(f"equals 2F1({-deg}, {deg + 2 * beta + 1}; {beta + 1}; z): "
      f"{geg.f == hyp2f1_series(Fr(-deg), deg + 2 * beta + 1, beta + 1, 10)}")
