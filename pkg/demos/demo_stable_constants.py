"""Stable structure constants: graded products, closed forms, polynomials.

Run:  python demos/demo_stable_constants.py
"""

from spinfh import Partition
from spinfh.fh import (
    fit_structure_poly,
    graded_product,
    one_part_coeff,
    structure_value,
    triangularity_check,
    union_coeff,
)

P = Partition

# Top-degree structure constants do not depend on the degree n; they define
# a graded commutative algebra on the class-sum symbols.
g = graded_product(P([2]), P([2]))
print("d_(2) * d_(2) =", {tuple(k): v for k, v in sorted(g.coords.items())})

g = graded_product(P([4, 2]), P([2, 2]))
print("d_(4,2) * d_(2,2) =", {tuple(k): v for k, v in sorted(g.coords.items())})

# Two closed forms pin parts of every such product: the union coefficient
# is a product of binomials, and one-part products have a factorial formula.
print("\nunion coefficient for (4,2) u (2,2):", union_coeff(P([4, 2]), P([2, 2])))
print("one-part coefficient f_{(2),(2)}^{(4)}:", one_part_coeff(P([2]), 2, P([4])))

# Away from top degree the constants are polynomials in n; the engine
# evaluates them at any degree and can fit the polynomial exactly in the
# binomial basis C(x, k).
print("\ncoefficient of d_(2) in [d_(2)(n)]^2:")
for n in range(3, 9):
    print(f"  n={n}: {structure_value(P([2]), P([2]), P([2]), n)}")
fit = fit_structure_poly(P([2]), P([2]), P([2]))
print("fitted polynomial (binomial basis):", fit.poly.to_json())

# Products of one-part classes expand triangularly in dominance order,
# which is why the one-part classes generate the whole graded algebra.
for lam in (P([2, 2]), P([4, 2]), P([2, 2, 2])):
    print(f"triangularity at {tuple(lam)}:", triangularity_check(lam))
