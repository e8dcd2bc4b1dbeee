"""Odd Jucys-Murphy elements and the Catalan numbers hiding inside them.

Run:  python demos/demo_jm_catalan.py
"""

from spinfh import Partition
from spinfh.groupalgebra import decompose_central, elem_mul, top_degree
from spinfh.jm import (
    a_coefficient_targeted,
    a_coefficients,
    formula_a,
    jm_element,
    jm_square,
)
from spinfh.partitions import catalan

P = Partition

# The squares of the odd JM elements have a closed form; check one.
m3 = jm_element(3, 5)
assert jm_square(3, 5) == elem_mul(m3, m3)
print("M_3^2 at n=5 has", len(jm_square(3, 5).terms), "terms")

# Top-degree coefficients of the elementary symmetric functions in the
# squares are signed products of Catalan numbers.
for r, n in ((1, 5), (2, 6), (3, 9)):
    coords = a_coefficients(r, n).coords
    print(f"\ne_{r}* =", {tuple(k): v for k, v in sorted(coords.items())})
    for lam, c in sorted(coords.items()):
        assert c == formula_a(lam)

# A single coefficient can be extracted at larger degrees without ever
# building the full support.
print("\ntargeted extractions:")
print("  A_(8)  at n=9 :", a_coefficient_targeted(P([8]), 9), "= -C_5 =", -catalan(5))
print("  A_(4,4) at n=10:", a_coefficient_targeted(P([4, 4]), 10), "= (-C_3)^2")
