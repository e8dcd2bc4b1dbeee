"""Exact rational power series: the Catalan generating function and
Lagrange inversion.

Run:  python demos/demo_series_identities.py
"""

from spinfh.series import (
    SeriesQ,
    catalan_series,
    elem_identity_value,
    lagrange_coefficient,
    solve_fixed_point,
)

# c(x) solves c^2 - c + x = 0 with no constant term; its coefficients are
# the Catalan numbers.
c = catalan_series(10)
print("c(x) coefficients:", [int(c.coefficient(k)) for k in range(10)])
print("c^2 - c + x == 0:", (c * c - c + SeriesQ.x(10)).is_zero())

# Lagrange inversion: w = x/(1-w) is again c(x), and the inversion formula
# reads off its coefficients one at a time.
phi = SeriesQ([1, -1], 12).inverse()
w = solve_fixed_point(phi, 12)
print("\nfixed point of w = x*(1-w)^(-1) equals c(x):",
      all(w.coefficient(k) == c.coefficient(k) for k in range(10)))
print("[x^5] via inversion formula:",
      lagrange_coefficient(phi, SeriesQ.x(12), 5))

# The identity behind the generator theorem: the middle coefficient of
# (1 - c(x))^(2r) alternates between -2 and 2.
print("\n[x^r](1-c)^(2r) for r = 1..10:",
      [elem_identity_value(r) for r in range(1, 11)])
