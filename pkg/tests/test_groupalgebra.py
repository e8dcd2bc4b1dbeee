"""Sparse algebra arithmetic, class sums, central decomposition, products."""

import random
from itertools import permutations

import pytest

from spinfh.clifford import compose
from spinfh.errors import NotCentralError, OddPartError, ResourceCapError
from spinfh.groupalgebra import (
    ORDINARY,
    SPIN,
    AlgebraElement,
    class_sum,
    decompose_central,
    elem_mul,
    is_even_central,
    reconstruct_central,
    structure_constants,
    top_degree,
)
from spinfh.jm import elementary_jm
from spinfh.partitions import Partition, class_size
from spinfh.spingroup import cycle, spin_identity

SEED = 20240811

P = Partition


def test_class_sum_examples():
    assert class_sum(P([]), 5, SPIN) == AlgebraElement.identity(5, SPIN)
    d = class_sum(P([2]), 4, SPIN)
    assert len(d.terms) == 8 and all(c in (1, -1) for c in d.terms.values())
    c = class_sum(P([2]), 6, ORDINARY)
    assert len(c.terms) == 40 and all(v == 1 for v in c.terms.values())
    assert class_sum(P([4, 4]), 6, SPIN).is_zero()
    with pytest.raises(OddPartError):
        class_sum(P([1]), 5, SPIN)


def test_ordinary_class_sum_counts():
    for lam in (P([2]), P([4]), P([2, 1]), P([1, 1])):
        for n in range(2, 8):
            assert len(class_sum(lam, n, ORDINARY).terms) == class_size(lam, n)


def test_elem_mul_unit_laws():
    a = class_sum(P([2]), 5, SPIN)
    one = AlgebraElement.identity(5, SPIN)
    assert elem_mul(a, one) == a
    assert elem_mul(one, a) == a


def test_example_31_squares():
    d2 = class_sum(P([2]), 6, SPIN)
    got = decompose_central(elem_mul(d2, d2))
    assert got == {P([2, 2]): 2, P([4]): -5, P([2]): 8, P([]): 40}
    c2 = class_sum(P([2]), 6, ORDINARY)
    got = decompose_central(elem_mul(c2, c2))
    assert got == {P([2, 2]): 2, P([4]): 5, P([2]): 10, P([1, 1]): 8, P([]): 40}


def test_example_31_mixed_products():
    # the paper's printed (4)x(2) rows carry misprints in three entries;
    # these corrected values are pinned by brute force and closed forms
    got = decompose_central(
        elem_mul(class_sum(P([4]), 8, SPIN), class_sum(P([2]), 8, SPIN))
    )
    assert got == {P([4]): 15, P([2]): -60, P([2, 2]): -18, P([6]): -7, P([4, 2]): 1}
    got = decompose_central(
        elem_mul(class_sum(P([4]), 8, ORDINARY), class_sum(P([2]), 8, ORDINARY))
    )
    assert got == {
        P([4]): 25,
        P([2]): 60,
        P([3, 1]): 16,
        P([1, 1]): 32,
        P([2, 2]): 18,
        P([6]): 7,
        P([4, 2]): 1,
    }


def test_ordinary_coefficients_brute_force():
    # independent pair counts for disputed entries of the (4)x(2) product:
    # factorizations target = (5-cycle) o (3-cycle) in S_8
    from spinfh.groupalgebra import perms_of_modified_type
    from spinfh.partitions import modified_type
    from spinfh.spingroup import distinguished_perm, inverse_perm

    fives = list(perms_of_modified_type(P([4]), 8))

    def count_on(nu):
        w = distinguished_perm(nu, 8)
        return sum(
            1
            for a in fives
            if modified_type(compose(inverse_perm(a), w)) == P([2])
        )

    assert count_on(P([4, 2])) == 1
    # by hand: the two 3-cycles must share exactly one point, giving
    # 3 shared choices x C(5,2) outside pairs x 2 orientations = 60
    assert count_on(P([2])) == 60
    assert count_on(P([3, 1])) == 16
    assert count_on(P([1, 1])) == 32


def test_structure_constants_commute():
    for lam, mu, n in [
        (P([2]), P([4]), 8),
        (P([2]), P([2, 2]), 8),
        (P([2, 2]), P([4]), 9),
    ]:
        t1 = structure_constants(lam, mu, n, SPIN).entries
        t2 = structure_constants(mu, lam, n, SPIN).entries
        assert t1 == t2


def test_structure_constants_vanishing_bound():
    table = structure_constants(P([2]), P([2, 2]), 8, SPIN)
    for nu in table.entries:
        assert nu.size <= 6
        assert nu.size + nu.length <= 8


def test_decompose_central_errors():
    t1 = AlgebraElement.generator(1, 5)
    with pytest.raises(NotCentralError):
        decompose_central(t1)
    # uniform coefficients but incomplete class support
    partial = AlgebraElement(5, SPIN, {cycle([1, 2, 3], 5).perm: 1})
    with pytest.raises(NotCentralError):
        decompose_central(partial)


def test_decompose_reconstruct_roundtrip():
    rng = random.Random(SEED)
    lams = [P([]), P([2]), P([4]), P([2, 2])]
    for _ in range(10):
        coords = {lam: rng.randint(-5, 5) for lam in lams}
        coords = {k: v for k, v in coords.items() if v}
        el = reconstruct_central(coords, 7, SPIN)
        assert decompose_central(el) == coords


def test_is_even_central():
    assert is_even_central(class_sum(P([2, 2]), 7, SPIN))
    assert not is_even_central(AlgebraElement.generator(1, 5))
    assert is_even_central(elementary_jm(2, 5))


def test_top_degree():
    d2 = class_sum(P([2]), 6, SPIN)
    sq = elem_mul(d2, d2)
    top = decompose_central(top_degree(sq))
    assert top == {P([2, 2]): 2, P([4]): -5}
    assert top_degree(d2) == d2
    zero = AlgebraElement.zero(6, SPIN)
    assert top_degree(zero) == zero


def test_ordinary_agrees_with_naive_convolution():
    rng = random.Random(SEED)
    n = 5
    perms = list(permutations(range(1, n + 1)))
    for _ in range(10):
        a_terms = {rng.choice(perms): rng.randint(-3, 3) for _ in range(6)}
        b_terms = {rng.choice(perms): rng.randint(-3, 3) for _ in range(6)}
        a = AlgebraElement(n, ORDINARY, a_terms)
        b = AlgebraElement(n, ORDINARY, b_terms)
        naive: dict = {}
        for pa, ca in a.terms.items():
            for pb, cb in b.terms.items():
                q = compose(pa, pb)
                naive[q] = naive.get(q, 0) + ca * cb
        naive = {k: v for k, v in naive.items() if v}
        assert elem_mul(a, b).terms == naive


def test_spin_product_bilinearity_and_scalar():
    a = class_sum(P([2]), 5, SPIN)
    b = class_sum(P([2]), 5, SPIN)
    two_a = a.scale(2)
    assert elem_mul(two_a, b) == elem_mul(a, b).scale(2)
    s = AlgebraElement.from_spin(spin_identity(5)).scale(-1)
    assert elem_mul(a, s) == a.scale(-1)


def test_resource_cap():
    a = class_sum(P([2]), 6, SPIN)
    with pytest.raises(ResourceCapError):
        elem_mul(a, a, cap=10)


def test_variant_mismatch_rejected():
    a = class_sum(P([2]), 5, SPIN)
    b = class_sum(P([2]), 5, ORDINARY)
    with pytest.raises(ValueError):
        elem_mul(a, b)


def test_structure_table_serialization():
    table = structure_constants(P([2]), P([2]), 6, SPIN)
    data = table.to_json()
    assert data["variant"] == "spin"
    assert data["entries"]["[2,2]"] == 2
    csv = table.to_csv()
    assert csv.splitlines()[0] == "nu,coefficient"
    assert "\"[4]\",-5" in csv
