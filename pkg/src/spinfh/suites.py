"""Named verification suites shared by the CLI and the test suite.

Each suite returns a JSON-friendly report dict with a boolean "passed"
field; randomized suites record their seed for replay.
"""

from __future__ import annotations

import random
from itertools import permutations as iter_permutations

from . import clifford, fh, jm, series
from .groupalgebra import (
    ORDINARY,
    SPIN,
    AlgebraElement,
    class_sum,
    decompose_central,
    elem_mul,
    top_degree,
)
from .partitions import (
    Partition,
    SplitStatus,
    catalan,
    class_size,
    classify_split,
    even_partitions_of,
    modified_type,
    partitions_of,
)
from .spingroup import (
    SpinElement,
    chi,
    cocycle,
    conjugate,
    conjugate_via_mul,
    cycle,
    enumerate_class,
    identity_perm,
    moved_points,
    spin_generator,
    spin_identity,
    spin_mul,
    transposition_perm,
)

PAPER_D2_SQUARED_6 = {
    Partition([2, 2]): 2,
    Partition([4]): -5,
    Partition([2]): 8,
    Partition([]): 40,
}
PAPER_C2_SQUARED_6 = {
    Partition([2, 2]): 2,
    Partition([4]): 5,
    Partition([2]): 10,
    Partition([1, 1]): 8,
    Partition([]): 40,
}
# The source prints 13d(4) - 35d(2) - 18d(2,2) - 7d(6) + 2d(4,2) and
# 25c(4) + 35c(2) + 32c(3,1) + 32c(1,1) + 18c(2,2) + 7c(6) + 2c(4,2);
# several entries are misprints. The corrected values below are pinned by
# whole-group brute-force counting (including a by-hand count of 60 for the
# (2) entry), by the source's own closed forms (the union formula and the
# one-part reduction), and by an independent Clifford-only pipeline; see the
# repository notes for the analysis.
CORRECT_D4_D2_8 = {
    Partition([4]): 15,
    Partition([2]): -60,
    Partition([2, 2]): -18,
    Partition([6]): -7,
    Partition([4, 2]): 1,
}
CORRECT_C4_C2_8 = {
    Partition([4]): 25,
    Partition([2]): 60,
    Partition([3, 1]): 16,
    Partition([1, 1]): 32,
    Partition([2, 2]): 18,
    Partition([6]): 7,
    Partition([4, 2]): 1,
}
PRINTED_D4_D2_8 = {
    Partition([4]): 13,
    Partition([2]): -35,
    Partition([2, 2]): -18,
    Partition([6]): -7,
    Partition([4, 2]): 2,
}
PRINTED_C4_C2_8 = {
    Partition([4]): 25,
    Partition([2]): 35,
    Partition([3, 1]): 32,
    Partition([1, 1]): 32,
    Partition([2, 2]): 18,
    Partition([6]): 7,
    Partition([4, 2]): 2,
}


def _fmt(coords: dict) -> dict:
    return {str(k.to_json()).replace(" ", ""): v for k, v in sorted(coords.items())}


def suite_relations(seed: int = 12345) -> dict:
    """Defining relations, oracle agreement, associativity, cycle identities."""
    rng = random.Random(seed)
    checks: dict[str, bool] = {}

    # Clifford model relations for all applicable index pairs, n <= 10
    ok = True
    for n in range(2, 11):
        for i in range(1, n - 1):
            ok &= clifford.lift_word([i, i + 1, i], n) == clifford.lift_word(
                [i + 1, i, i + 1], n
            )
        for i in range(1, n):
            ok &= clifford.lift_word([i, i], n).terms == {0: -2}
            for j in range(1, n):
                if abs(i - j) > 1:
                    ok &= clifford.lift_word([j, i], n) == -clifford.lift_word(
                        [i, j], n
                    )
    checks["clifford_relations"] = ok

    # engine cocycle vs oracle: exhaustive n <= 4, random n = 5..8
    ok = True
    for n in (2, 3, 4):
        perms = list(iter_permutations(range(1, n + 1)))
        for a in perms:
            for b in perms:
                st, s = clifford.oracle_product_sign(a, b)
                ok &= cocycle(a, b) == s
    for n in (5, 6, 7, 8):
        perms = list(iter_permutations(range(1, n + 1)))
        for _ in range(120):
            a, b = rng.choice(perms), rng.choice(perms)
            ok &= cocycle(a, b) == clifford.oracle_product_sign(a, b)[1]
    checks["engine_matches_oracle"] = ok

    # associativity: exhaustive n = 4, random n <= 8
    ok = True
    perms4 = list(iter_permutations(range(1, 5)))
    for a in perms4:
        for b in perms4:
            c_ab = cocycle(a, b)
            ab = clifford.compose(a, b)
            for c in perms4:
                lhs = c_ab * cocycle(ab, c)
                rhs = cocycle(b, c) * cocycle(a, clifford.compose(b, c))
                ok &= lhs == rhs
    for n in (6, 8):
        perms = list(iter_permutations(range(1, n + 1)))
        for _ in range(300):
            a, b, c = rng.choice(perms), rng.choice(perms), rng.choice(perms)
            x, y = SpinElement(n, a, 1), SpinElement(n, b, 1)
            z = SpinElement(n, c, 1)
            ok &= spin_mul(spin_mul(x, y), z) == spin_mul(x, spin_mul(y, z))
    checks["associativity"] = ok

    # projection is a homomorphism
    ok = True
    perms6 = list(iter_permutations(range(1, 7)))
    for _ in range(200):
        a, b = rng.choice(perms6), rng.choice(perms6)
        x, y = SpinElement(6, a, 1), SpinElement(6, b, 1)
        ok &= spin_mul(x, y).perm == clifford.compose(a, b)
    checks["projection_homomorphism"] = ok

    # cycle identities: rotation, staircase (definition-consistent sign),
    # disjoint merge; sampled n <= 8
    ok = True
    for _ in range(250):
        n = rng.randint(3, 8)
        m = rng.randint(2, n)
        idx = rng.sample(range(1, n + 1), m)
        a = cycle(idx, n)
        b = cycle(idx[1:] + idx[:1], n)
        ok &= b == SpinElement(n, a.perm, a.sign * (-1) ** (m - 1))
    for n in (5, 8):
        for i in range(1, n):
            for j in range(2, n - i + 2):
                el = cycle(list(range(i, i + j)), n)
                w = spin_identity(n)
                for k in range(i, i + j - 1):
                    w = spin_mul(w, spin_generator(k, n))
                sign = -1 if (j * (j + 1) // 2) & 1 else 1
                ok &= el == SpinElement(n, w.perm, w.sign * sign)
    for _ in range(250):
        n = rng.randint(3, 8)
        tot = rng.randint(2, n)
        pts = rng.sample(range(1, n + 1), tot)
        cut = rng.randint(1, tot - 1)
        head, i_list, j_list = pts[0], pts[1 : cut + 1], pts[cut + 1 :]
        lhs = spin_mul(cycle([head] + i_list, n), cycle([head] + j_list, n))
        rhs = cycle([head] + j_list + i_list, n)
        ok &= lhs == SpinElement(n, rhs.perm, -rhs.sign)
    checks["cycle_identities"] = ok

    # conjugation sign rule against direct multiplication
    ok = True
    for _ in range(250):
        n = rng.randint(2, 7)
        perms = list(iter_permutations(range(1, n + 1)))
        s, p = rng.choice(perms), rng.choice(perms)
        x = SpinElement(n, p, rng.choice((1, -1)))
        ok &= conjugate(s, x) == conjugate_via_mul(s, x)
    checks["conjugation_rule"] = ok

    # faithfulness: distinct signed elements are never positive multiples
    # of one another, comparing gcd-normalized lifts
    import math as _math

    ok = True
    for n in (4, 5, 6):
        seen: set[tuple] = set()
        for p in iter_permutations(range(1, n + 1)):
            mv = clifford.canonical_lift(p)
            g = _math.gcd(*(abs(c) for c in mv.terms.values()))
            for s in (1, -1):
                key = tuple(sorted((m, s * c // g) for m, c in mv.terms.items()))
                ok &= key not in seen
                seen.add(key)
    checks["faithful_model"] = ok

    # degree subadditivity and its equality condition
    ok = True
    for _ in range(300):
        n = rng.randint(3, 8)
        perms = list(iter_permutations(range(1, n + 1)))
        a, b = rng.choice(perms), rng.choice(perms)
        x, y = SpinElement(n, a, 1), SpinElement(n, b, 1)
        xy = spin_mul(x, y)
        la, mb, nc = modified_type(a), modified_type(b), modified_type(xy.perm)
        ok &= nc.size <= la.size + mb.size
        equal = nc.size == la.size + mb.size
        ok &= equal == (moved_points([xy]) == moved_points([x, y]))
    checks["degree_subadditivity"] = ok

    return {"suite": "relations", "seed": seed, "passed": all(checks.values()), "details": checks}


def suite_classes(seed: int = 12345) -> dict:
    """Class enumeration, embedding consistency, size law, split criterion."""
    checks: dict[str, bool] = {}
    grid = [
        Partition([2]),
        Partition([4]),
        Partition([2, 2]),
        Partition([6]),
        Partition([4, 2]),
        Partition([2, 2, 2]),
    ]
    ok = True
    for lam in grid:
        for n in range(1, 10):
            members = enumerate_class(lam, n).members
            ok &= len(members) == class_size(lam, n)
            ok &= all(modified_type(m.perm) == lam for m in members)
    checks["sizes_and_types"] = ok

    ok = True
    for lam in grid[:4]:
        for n in range(lam.size + lam.length, 9):
            big = enumerate_class(lam, n + 1).members
            small = enumerate_class(lam, n).members
            sub = [
                SpinElement(n, m.perm[:n], m.sign)
                for m in big
                if m.perm[n] == n + 1
            ]
            ok &= sub == list(small)
    checks["embedding_consistency"] = ok

    # |D_lam(n)| * k = n(n-1)...(n - |lam| - len(lam) + 1) for constant k
    ok = True
    for lam in grid:
        base = lam.size + lam.length
        ks = []
        for n in range(base, base + 4):
            size = len(enumerate_class(lam, n).members)
            ff = 1
            for t in range(base):
                ff *= n - t
            ok &= size > 0 and ff % size == 0
            ks.append(ff // size)
        ok &= len(set(ks)) == 1
    checks["falling_factorial_law"] = ok

    # split classification vs brute-force double-cover orbits (n = 4, 5)
    ok = True
    for n in (4, 5):
        elements = [
            SpinElement(n, p, s)
            for p in iter_permutations(range(1, n + 1))
            for s in (1, -1)
        ]
        gens = [transposition_perm(i, i + 1, n) for i in range(1, n)]
        unvisited = {(x.perm, x.sign) for x in elements}
        orbit_of: dict[tuple, int] = {}
        orbit_id = 0
        while unvisited:
            start = unvisited.pop()
            orbit_id += 1
            frontier = [SpinElement(n, start[0], start[1])]
            orbit_of[start] = orbit_id
            while frontier:
                nxt = []
                for x in frontier:
                    for g in gens:
                        y = conjugate(g, x)
                        key = (y.perm, y.sign)
                        if key in unvisited:
                            unvisited.remove(key)
                            orbit_of[key] = orbit_id
                            nxt.append(y)
                frontier = nxt
        for lam in set(modified_type(p) for p in iter_permutations(range(1, n + 1))):
            fiber = {
                orbit_of[(p, s)]
                for p in iter_permutations(range(1, n + 1))
                if modified_type(p) == lam
                for s in (1, -1)
            }
            status = classify_split(lam, n)
            ok &= (len(fiber) == 2) == (
                status in (SplitStatus.EVEN_SPLIT, SplitStatus.ODD_SPLIT)
            )
    checks["split_criterion_brute_force"] = ok

    return {"suite": "classes", "seed": seed, "passed": all(checks.values()), "details": checks}


def suite_example31() -> dict:
    """The four displayed class-sum products at degrees 6 and 8."""
    d2 = class_sum(Partition([2]), 6, SPIN)
    spin_sq = decompose_central(elem_mul(d2, d2))
    c2 = class_sum(Partition([2]), 6, ORDINARY)
    ord_sq = decompose_central(elem_mul(c2, c2))
    d4 = class_sum(Partition([4]), 8, SPIN)
    d2_8 = class_sum(Partition([2]), 8, SPIN)
    spin_42 = decompose_central(elem_mul(d4, d2_8))
    c4 = class_sum(Partition([4]), 8, ORDINARY)
    c2_8 = class_sum(Partition([2]), 8, ORDINARY)
    ord_42 = decompose_central(elem_mul(c4, c2_8))
    checks = {
        "spin_d2_squared_6": spin_sq == PAPER_D2_SQUARED_6,
        "ordinary_c2_squared_6": ord_sq == PAPER_C2_SQUARED_6,
        "spin_d4_d2_8": spin_42 == CORRECT_D4_D2_8,
        "ordinary_c4_c2_8": ord_42 == CORRECT_C4_C2_8,
        # closed-form pins for the corrected entries
        "union_pin": fh.union_coeff(Partition([4]), Partition([2]))
        == spin_42[Partition([4, 2])]
        == ord_42[Partition([4, 2])],
        "one_part_pin": fh.one_part_coeff(Partition([4]), 2, Partition([6]))
        == spin_42[Partition([6])],
    }
    return {
        "suite": "example31",
        "passed": all(checks.values()),
        "details": checks,
        "computed": {
            "spin_d2_squared_6": _fmt(spin_sq),
            "ordinary_c2_squared_6": _fmt(ord_sq),
            "spin_d4_d2_8": _fmt(spin_42),
            "ordinary_c4_c2_8": _fmt(ord_42),
        },
        "note": (
            "the (4)x(2) rows as printed in the source differ in three entries; "
            "corrected values are pinned by brute-force counting and the "
            "source's own closed forms"
        ),
    }


def suite_example41() -> dict:
    """The first three elementary symmetric functions' top coefficients."""
    e1 = jm.a_coefficients(1, 5).coords
    e2 = jm.a_coefficients(2, 6).coords
    e3 = jm.a_coefficients(3, 9).coords
    checks = {
        "e1_top": e1 == {Partition([2]): -1},
        "e2_top": e2 == {Partition([2, 2]): 1, Partition([4]): -2},
        "e3_top": e3
        == {
            Partition([2, 2, 2]): -1,
            Partition([4, 2]): 2,
            Partition([6]): -5,
        },
    }
    return {
        "suite": "example41",
        "passed": all(checks.values()),
        "details": checks,
        "computed": {"e1": _fmt(e1), "e2": _fmt(e2), "e3": _fmt(e3)},
    }


def suite_catalan(r_max: int = 4, n_budget: int = 9) -> dict:
    """Catalan closed form and recursions, formula-level and computed."""
    checks: dict[str, bool] = {}
    ok = True
    for r in range(2, 31):
        rhs = 2 * catalan(r) + sum(
            catalan(r - s) * catalan(s + 1) for s in range(1, r - 1)
        )
        ok &= catalan(r + 1) == rhs
    checks["catalan_recursion"] = ok

    report = jm.catalan_theorem_check(r_max, n_budget)
    checks["computed_match_formula"] = all(row["match"] for row in report.rows)
    checks["formula_recursion_r20"] = report.recursion_ok
    checks["factorization"] = report.factorization_ok
    checks["targeted_A6"] = jm.a_coefficient_targeted(Partition([6]), 7) == -5
    checks["targeted_A8"] = jm.a_coefficient_targeted(Partition([8]), 9) == -14
    checks["targeted_A44"] = jm.a_coefficient_targeted(Partition([4, 4]), 10) == 4
    return {
        "suite": "catalan",
        "passed": all(checks.values()),
        "details": checks,
        "rows": report.rows,
    }


def suite_p2(r_max_formula: int = 10, r_max_computed: int = 3) -> dict:
    values = []
    ok = True
    for r in range(1, r_max_formula + 1):
        total, match = fh.verify_p2(r, "formula")
        values.append(total)
        ok &= match
    checks = {"formula": ok}
    ok = True
    for r in range(1, r_max_computed + 1):
        total, match = fh.verify_p2(r, "computed")
        ok &= match
    checks["computed"] = ok
    return {
        "suite": "p2",
        "passed": all(checks.values()),
        "details": checks,
        "values": values,
    }


def suite_lagrange(r_max: int = 30) -> dict:
    values = [series.elem_identity_value(r) for r in range(1, r_max + 1)]
    ok = all(v == 2 * (-1) ** r for r, v in enumerate(values, start=1))
    checks = {"alternating_two": ok}
    ok = series.catalan_series_matches(20)
    checks["series_matches_closed_form"] = ok
    c = series.catalan_series(12)
    checks["quadratic_relation"] = (
        c * c - c + series.SeriesQ.x(12)
    ).is_zero()
    phi = series.SeriesQ([1, -1], 16).inverse()
    f = series.SeriesQ.x(16)
    checks["inversion_examples"] = (
        series.lagrange_coefficient(phi, f, 3) == 2
        and series.lagrange_coefficient(phi, f, 2) == 1
        and series.lagrange_coefficient(series.SeriesQ.one(16), f, 1) == 1
    )
    ok = True
    for phi_coeffs in ([1, 1], [1, -1], [2, 0, 1], [1, 1, 1, 1], [3, -2, 1]):
        phi = series.SeriesQ(phi_coeffs, 12)
        if phi_coeffs in ([1, -1],):
            phi = phi.inverse()
        w = series.solve_fixed_point(phi, 12)
        for g_coeffs in ([0, 1], [0, 0, 1], [0, 1, 2, 3]):
            g = series.SeriesQ(g_coeffs, 12)
            gw = g.compose(w)
            for k in range(1, 12):
                ok &= series.lagrange_coefficient(phi, g, k) == gw.coefficient(k)
    checks["inversion_matches_fixed_point"] = ok
    return {
        "suite": "lagrange",
        "passed": all(checks.values()),
        "details": checks,
        "values": values[: min(10, len(values))],
    }


def suite_iota(max_total: int = 10) -> dict:
    ok = True
    tested = 0
    for m1 in range(2, max_total - 1, 2):
        for m2 in range(2, max_total - m1 + 1, 2):
            for lam in even_partitions_of(m1):
                for mu in even_partitions_of(m2):
                    ok &= fh.iota_compare(lam, mu)
                    tested += 1
    return {
        "suite": "iota",
        "passed": ok,
        "details": {"pairs_tested": tested},
    }


def suite_stability(max_total: int = 8) -> dict:
    """Top-degree constants stable in n; fitted polynomials integral with
    holdout validation."""
    ok_stable = True
    ok_fit = True
    ok_degree = True
    triples = 0
    for m1 in range(2, max_total - 1, 2):
        for m2 in range(m1, max_total - m1 + 1, 2):
            for lam in even_partitions_of(m1):
                for mu in even_partitions_of(m2):
                    m = lam.size + mu.size
                    for nu in even_partitions_of(m):
                        n0 = nu.size + nu.length
                        vals = {
                            fh.structure_value(lam, mu, nu, n, SPIN)
                            for n in range(n0, n0 + 4)
                        }
                        ok_stable &= len(vals) == 1
                        triples += 1
                    for size in range(0, m + 1, 2):
                        for nu in even_partitions_of(size):
                            try:
                                fit = fh.fit_structure_poly(lam, mu, nu)
                            except Exception:
                                ok_fit = False
                                continue
                            ok_degree &= fit.poly.degree <= fh.degree_bound(
                                lam, mu, nu
                            )
    return {
        "suite": "stability",
        "passed": ok_stable and ok_fit and ok_degree,
        "details": {
            "top_constant_stability": ok_stable,
            "fits_validated": ok_fit,
            "degree_bound": ok_degree,
            "top_triples": triples,
        },
    }


def suite_generators(n_max: int = 6, seed: int = 12345) -> dict:
    rng = random.Random(seed)
    checks: dict[str, bool] = {}
    ok = True
    for n in range(1, n_max + 1):
        ok &= jm.center_generation_check(n)
    checks["center_generation"] = ok

    # spanning: 2X - (-1)^r q e_r* lies in the product span, for random X
    ok = True
    for m in (2, 4, 6, 8):
        r = m // 2
        lams = list(even_partitions_of(m))
        e_star = {lam: jm.formula_a(lam) for lam in lams}
        for _ in range(20):
            x = {lam: rng.randint(-9, 9) for lam in lams}
            q = sum(c * fh.p_poly(lam)(-m) for lam, c in x.items())
            y = {
                lam: 2 * x[lam] - (-1) ** r * q * e_star[lam]
                for lam in lams
            }
            ok &= fh.h_membership(fh.FHVector(m, y))
    checks["generator_spanning"] = ok
    return {
        "suite": "generators",
        "seed": seed,
        "passed": all(checks.values()),
        "details": checks,
    }


SUITES = {
    "relations": lambda seed, **kw: suite_relations(seed),
    "classes": lambda seed, **kw: suite_classes(seed),
    "example31": lambda seed, **kw: suite_example31(),
    "example41": lambda seed, **kw: suite_example41(),
    "catalan": lambda seed, **kw: suite_catalan(
        kw.get("r_max") or 4, kw.get("budget") or 9
    ),
    "p2": lambda seed, **kw: suite_p2(kw.get("r_max") or 10, 3),
    "lagrange": lambda seed, **kw: suite_lagrange(kw.get("r_max") or 30),
    "iota": lambda seed, **kw: suite_iota(kw.get("budget") or 10),
    "stability": lambda seed, **kw: suite_stability(kw.get("budget") or 8),
    "generators": lambda seed, **kw: suite_generators(
        kw.get("budget") or 6, seed
    ),
}


def run_suite(name: str, seed: int = 12345, **kw) -> dict:
    if name == "all":
        reports = [SUITES[s](seed, **kw) for s in SUITES]
        return {
            "suite": "all",
            "seed": seed,
            "passed": all(r["passed"] for r in reports),
            "reports": reports,
        }
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](seed, **kw)
