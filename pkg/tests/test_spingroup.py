"""Signed permutations: products, cycles, conjugation, class enumeration."""

import random
from itertools import permutations

import pytest

from spinfh.clifford import compose, oracle_product_sign
from spinfh.errors import DoesNotFitError, OddPartError
from spinfh.partitions import Partition, class_size, modified_type
from spinfh.spingroup import (
    SpinElement,
    chi,
    cocycle,
    conjugate,
    conjugate_via_mul,
    cycle,
    distinguished_element,
    enumerate_class,
    identity_perm,
    moved_points,
    perm_cycles,
    spin_generator,
    spin_identity,
    spin_inverse,
    spin_mul,
    transposition_perm,
)

SEED = 20240811


def test_spin_mul_examples():
    n = 6
    c12 = cycle([1, 2], n)
    assert spin_mul(c12, c12) == SpinElement(n, identity_perm(n), -1)
    lhs = spin_mul(cycle([1, 2], n), cycle([1, 3], n))
    rhs = cycle([1, 3, 2], n)
    assert lhs == SpinElement(n, rhs.perm, -rhs.sign)
    a = cycle([2, 5, 3], n)
    assert spin_mul(a, spin_identity(n)) == a
    assert spin_mul(spin_identity(n), a) == a


def test_cocycle_matches_oracle_exhaustive_small():
    for n in (2, 3, 4):
        perms = list(permutations(range(1, n + 1)))
        for a in perms:
            for b in perms:
                assert cocycle(a, b) == oracle_product_sign(a, b)[1]


def test_cocycle_matches_oracle_random():
    rng = random.Random(SEED)
    for n in (5, 6, 7, 8):
        perms = list(permutations(range(1, n + 1)))
        for _ in range(150):
            a, b = rng.choice(perms), rng.choice(perms)
            assert cocycle(a, b) == oracle_product_sign(a, b)[1]


def test_associativity_exhaustive_n4():
    perms = list(permutations(range(1, 5)))
    els = [SpinElement(4, p, 1) for p in perms]
    for x in els:
        for y in els:
            xy = spin_mul(x, y)
            for z in els:
                assert spin_mul(xy, z) == spin_mul(x, spin_mul(y, z))


def test_associativity_random_n8():
    rng = random.Random(SEED)
    perms = list(permutations(range(1, 9)))
    for _ in range(200):
        x = SpinElement(8, rng.choice(perms), rng.choice((1, -1)))
        y = SpinElement(8, rng.choice(perms), rng.choice((1, -1)))
        z = SpinElement(8, rng.choice(perms), rng.choice((1, -1)))
        assert spin_mul(spin_mul(x, y), z) == spin_mul(x, spin_mul(y, z))


def test_projection_is_homomorphism():
    rng = random.Random(SEED)
    perms = list(permutations(range(1, 8)))
    for _ in range(200):
        a, b = rng.choice(perms), rng.choice(perms)
        x, y = SpinElement(7, a, 1), SpinElement(7, b, -1)
        assert spin_mul(x, y).perm == compose(a, b)


def test_cycle_examples():
    assert cycle([1], 4) == SpinElement(4, identity_perm(4), -1)
    t1t2 = spin_mul(spin_generator(1, 4), spin_generator(2, 4))
    assert cycle([1, 2, 3], 4) == t1t2


def test_cycle_rotation_identity():
    rng = random.Random(SEED)
    for _ in range(200):
        n = rng.randint(3, 8)
        m = rng.randint(2, n)
        idx = rng.sample(range(1, n + 1), m)
        a = cycle(idx, n)
        b = cycle(idx[1:] + idx[:1], n)
        assert b == SpinElement(n, a.perm, a.sign * (-1) ** (m - 1))


def test_cycle_staircase_identity():
    # [i, i+1, ..., i+j-1] equals t_i...t_{i+j-2} up to the sign forced by
    # the generator-word definition of the cycles: (-1)^(j(j+1)/2)
    for n in (5, 8):
        for i in range(1, n):
            for j in range(2, n - i + 2):
                el = cycle(list(range(i, i + j)), n)
                w = spin_identity(n)
                for k in range(i, i + j - 1):
                    w = spin_mul(w, spin_generator(k, n))
                sign = -1 if (j * (j + 1) // 2) & 1 else 1
                assert el == SpinElement(n, w.perm, w.sign * sign)


def test_cycle_merge_identity():
    rng = random.Random(SEED)
    for _ in range(200):
        n = rng.randint(3, 8)
        tot = rng.randint(2, n)
        pts = rng.sample(range(1, n + 1), tot)
        cut = rng.randint(1, tot - 1)
        head, i_list, j_list = pts[0], pts[1 : cut + 1], pts[cut + 1 :]
        lhs = spin_mul(cycle([head] + i_list, n), cycle([head] + j_list, n))
        rhs = cycle([head] + j_list + i_list, n)
        assert lhs == SpinElement(n, rhs.perm, -rhs.sign)


def test_cycle_matches_generator_word_definition():
    # [i1,...,im] = x_{i1} x_{im} ... x_{i2} x_{i1} with
    # x_i = t_i ... t_{N-2} t_{N-1} t_{N-2} ... t_i in ambient N = n + 1
    rng = random.Random(SEED)

    def x_el(i, big_n):
        word = list(range(i, big_n)) + list(range(big_n - 2, i - 1, -1))
        w = spin_identity(big_n)
        for k in word:
            w = spin_mul(w, spin_generator(k, big_n))
        return w

    for n in (3, 4, 5):
        big_n = n + 1
        for _ in range(40):
            m = rng.randint(2, n)
            idx = rng.sample(range(1, n + 1), m)
            prod = x_el(idx[0], big_n)
            for k in reversed(idx[1:]):
                prod = spin_mul(prod, x_el(k, big_n))
            prod = spin_mul(prod, x_el(idx[0], big_n))
            emb = cycle(idx, big_n)
            assert prod == emb


def test_cycle_input_validation():
    with pytest.raises(ValueError):
        cycle([1, 1], 4)
    with pytest.raises(ValueError):
        cycle([0, 2], 4)


def test_distinguished_element():
    el = distinguished_element(Partition([2]), 3)
    assert el == cycle([1, 2, 3], 3)
    el = distinguished_element(Partition([2, 2]), 6)
    assert el == spin_mul(cycle([1, 2, 3], 6), cycle([4, 5, 6], 6))
    assert distinguished_element(Partition([]), 4) == spin_identity(4)
    with pytest.raises(DoesNotFitError):
        distinguished_element(Partition([4]), 4)
    with pytest.raises(OddPartError):
        distinguished_element(Partition([3]), 6)


def test_conjugate_examples():
    n = 6
    s = transposition_perm(1, 2, n)
    x = cycle([3, 4, 5], n)
    assert conjugate(s, x) == x
    x = cycle([1, 3], n)
    minus = cycle([2, 3], n)
    assert conjugate(s, x) == SpinElement(n, minus.perm, -minus.sign)
    assert conjugate(identity_perm(n), x) == x


def test_conjugate_matches_direct_multiplication():
    rng = random.Random(SEED)
    for _ in range(250):
        n = rng.randint(2, 7)
        perms = list(permutations(range(1, n + 1)))
        s, p = rng.choice(perms), rng.choice(perms)
        x = SpinElement(n, p, rng.choice((1, -1)))
        assert conjugate(s, x) == conjugate_via_mul(s, x)


def test_spin_inverse():
    rng = random.Random(SEED)
    perms = list(permutations(range(1, 7)))
    for _ in range(100):
        x = SpinElement(6, rng.choice(perms), rng.choice((1, -1)))
        assert spin_mul(x, spin_inverse(x)) == spin_identity(6)


def test_enumerate_class_counts():
    assert len(enumerate_class(Partition([]), 5).members) == 1
    assert len(enumerate_class(Partition([2]), 4).members) == 8
    assert len(enumerate_class(Partition([2]), 6).members) == 40
    assert enumerate_class(Partition([4, 4]), 6).members == ()
    with pytest.raises(OddPartError):
        enumerate_class(Partition([1]), 5)


def test_enumerate_class_members_sorted_and_typed():
    ce = enumerate_class(Partition([2, 2]), 7)
    perms = [m.perm for m in ce.members]
    assert perms == sorted(perms)
    assert all(modified_type(p) == Partition([2, 2]) for p in perms)
    assert len(perms) == class_size(Partition([2, 2]), 7)


def test_embedding_consistency():
    for lam in (Partition([2]), Partition([4]), Partition([2, 2])):
        for n in range(lam.size + lam.length, 8):
            big = enumerate_class(lam, n + 1).members
            small = enumerate_class(lam, n).members
            sub = [
                SpinElement(n, m.perm[:n], m.sign)
                for m in big
                if m.perm[n] == n + 1
            ]
            assert sub == list(small)


def test_class_size_falling_factorial_law():
    for lam in (Partition([2]), Partition([4]), Partition([2, 2]), Partition([4, 2])):
        base = lam.size + lam.length
        ks = set()
        for n in range(base, base + 4):
            size = len(enumerate_class(lam, n).members)
            ff = 1
            for t in range(base):
                ff *= n - t
            assert size and ff % size == 0
            ks.add(ff // size)
        assert len(ks) == 1


def test_moved_points():
    n = 6
    assert moved_points([spin_identity(n)]) == set()
    assert moved_points([cycle([1, 2, 3], n)]) == {1, 2, 3}
    assert moved_points([cycle([1, 2], n), cycle([4, 5], n)]) == {1, 2, 4, 5}


def test_degree_subadditivity():
    rng = random.Random(SEED)
    for _ in range(300):
        n = rng.randint(3, 8)
        perms = list(permutations(range(1, n + 1)))
        a, b = rng.choice(perms), rng.choice(perms)
        x, y = SpinElement(n, a, 1), SpinElement(n, b, 1)
        xy = spin_mul(x, y)
        la, mb, nc = modified_type(a), modified_type(b), modified_type(xy.perm)
        assert nc.size <= la.size + mb.size
        assert (nc.size == la.size + mb.size) == (
            moved_points([xy]) == moved_points([x, y])
        )


def test_spin_element_json():
    el = cycle([1, 2], 3)
    data = el.to_json()
    assert data == {"n": 3, "perm": [2, 1, 3], "sign": -1}
    assert SpinElement.from_json(data) == el


def test_chi_is_ambient_independent():
    p5 = (2, 3, 1, 4, 5)
    p7 = (2, 3, 1, 4, 5, 6, 7)
    assert chi(p5) == chi(p7)
    assert perm_cycles(p5) == perm_cycles(p7)
