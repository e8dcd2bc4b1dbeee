"""Exact arithmetic in spin symmetric group superalgebras.

Split conjugacy class sums, their stable structure constants, odd
Jucys-Murphy elements, and the Catalan-number identities tying them
together, all over exact integers and rationals.
"""

from .partitions import (
    IntegerValuedPoly,
    Partition,
    SplitStatus,
    catalan,
    classify_split,
    ivp_fit,
    modified_type,
    p_poly,
)
from .series import (
    SeriesQ,
    catalan_series,
    elem_identity_value,
    lagrange_coefficient,
)
from .clifford import Multivector, lift_word, mv_mul, oracle_product_sign
from .spingroup import (
    ClassEnumeration,
    SpinElement,
    conjugate,
    cycle,
    distinguished_element,
    enumerate_class,
    moved_points,
    spin_mul,
)
from .groupalgebra import (
    ORDINARY,
    SPIN,
    AlgebraElement,
    StructureTable,
    class_sum,
    decompose_central,
    elem_mul,
    is_even_central,
    structure_constants,
    top_degree,
)
from .fh import (
    FHVector,
    fit_structure_poly,
    graded_product,
    h_membership,
    iota_compare,
    one_part_coeff,
    triangularity_check,
    union_coeff,
    verify_p2,
)
from .jm import (
    ACoefficients,
    a_coefficient_targeted,
    a_coefficients,
    catalan_theorem_check,
    center_generation_check,
    elementary_jm,
    jm_element,
    jm_square,
)

__version__ = "0.1.0"
