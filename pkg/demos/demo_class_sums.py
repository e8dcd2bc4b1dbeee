"""Walk through split conjugacy classes and their exact class-sum products.

Run:  python demos/demo_class_sums.py
"""

from spinfh import Partition, SPIN, ORDINARY
from spinfh import class_sum, decompose_central, elem_mul, enumerate_class
from spinfh.spingroup import distinguished_element

P = Partition


def show(coords):
    return " + ".join(f"{c}*d{list(nu)}" for nu, c in sorted(coords.items()))


# The distinguished element anchoring the class of modified type (2,2) in
# degree 6 is a product of two consecutive 3-cycles.
t = distinguished_element(P([2, 2]), 6)
print("distinguished element of type (2,2) at n=6:", t.perm, "sign", t.sign)

# Every member of an even split class is reached by conjugation from the
# anchor, with a definite sign relative to the frozen canonical lift.
members = enumerate_class(P([2]), 6).members
print(f"\nclass of type (2) at n=6 has {len(members)} members; first three:")
for m in members[:3]:
    print("  ", m.perm, "sign", m.sign)

# The square of that class sum decomposes exactly over the even center.
d2 = class_sum(P([2]), 6, SPIN)
print("\n[d_(2)(6)]^2 =", show(decompose_central(elem_mul(d2, d2))))

# The ordinary symmetric-group analogue for comparison.
c2 = class_sum(P([2]), 6, ORDINARY)
print("[c_(2)(6)]^2 =", show(decompose_central(elem_mul(c2, c2))))

# A mixed product at degree 8. Note the sign pattern relating the two.
d4, d2 = class_sum(P([4]), 8, SPIN), class_sum(P([2]), 8, SPIN)
print("\nd_(4)(8) d_(2)(8) =", show(decompose_central(elem_mul(d4, d2))))
c4, c2 = class_sum(P([4]), 8, ORDINARY), class_sum(P([2]), 8, ORDINARY)
print("c_(4)(8) c_(2)(8) =", show(decompose_central(elem_mul(c4, c2))))
