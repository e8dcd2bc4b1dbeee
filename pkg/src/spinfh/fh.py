"""Stable structure constants and the graded multiplication they define.

Top-degree constants are n-independent, so they are computed once and for
all by signed enumeration of the support-additive factorizations of a
distinguished target: a factor below a single cycle corresponds to a
noncrossing partition of that cycle, and the complementary factor is
forced. Lower-degree coefficients are polynomials in n; their values are
obtained by the same kind of enumeration with a bounded number of extra
support points, each pattern weighted by a binomial in n, and the
polynomial is then fitted in the binomial basis with holdout validation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .clifford import compose
from .errors import DegreeExceededError, OddPartError
from .groupalgebra import ORDINARY, SPIN, _cycle_structures
from .jm import a_coefficients, formula_a
from .partitions import (
    EMPTY,
    IntegerValuedPoly,
    Partition,
    binom_int,
    even_partitions_of,
    ivp_fit,
    modified_type,
    p_poly,
    partitions_of,
)
from .spingroup import (
    Perm,
    cycles_to_perm,
    distinguished_perm,
    engine_mul,
    inverse_perm,
    perm_cycles,
)

# -- noncrossing splittings of a distinguished target -----------------------


def _noncrossing_partitions(points: tuple[int, ...]):
    """All noncrossing set partitions of a linearly ordered tuple."""
    if not points:
        yield ()
        return
    first, rest = points[0], points[1:]
    m = len(rest)
    for mask_size in range(m + 1):
        for chosen in combinations(range(m), mask_size):
            block = (first,) + tuple(rest[i] for i in chosen)
            # the unchosen points split into independent gaps between
            # consecutive chosen ones; blocks may not cross the chosen block
            gaps: list[tuple[int, ...]] = []
            prev = -1
            for idx in chosen + (m,):
                gaps.append(tuple(rest[i] for i in range(prev + 1, idx)))
                prev = idx
            def rec(gi: int, acc: tuple):
                if gi == len(gaps):
                    yield acc
                    return
                for sub in _noncrossing_partitions(gaps[gi]):
                    yield from rec(gi + 1, acc + sub)
            for tail in rec(0, ()):
                yield (block,) + tail


def _cycle_splittings(cyc: tuple[int, ...]) -> list[tuple[tuple, tuple]]:
    """All support-additive factorizations u * v of one cycle.

    Factors below a cycle are exactly the noncrossing partitions of its
    entries in cyclic order; each block becomes a cycle of u in the induced
    order and v is the complementary factor u^{-1} * cycle.
    """
    c = len(cyc)
    n_local = max(cyc)
    w = cycles_to_perm([cyc], n_local)
    out = []
    for part in _noncrossing_partitions(tuple(range(c))):
        u_cycles = tuple(
            tuple(cyc[i] for i in block) for block in part if len(block) > 1
        )
        u = cycles_to_perm(u_cycles, n_local)
        v = compose(inverse_perm(u), w)
        v_cycles = perm_cycles(v)
        u_size = sum(len(b) - 1 for b in u_cycles)
        v_size = sum(len(b) - 1 for b in v_cycles)
        if u_size + v_size != c - 1:
            raise AssertionError("noncrossing splitting lost additivity")
        out.append((u_cycles, v_cycles))
    return out


_bucket_cache: dict[Partition, dict] = {}


def _graded_bucket(nu: Partition) -> dict[tuple[Partition, Partition], list[int]]:
    """For one target type nu: signed and unsigned counts of factorizations
    of the distinguished element, grouped by the pair of factor types.

    Entry value is [spin_signed_count, plain_count]; the signed count is
    only accumulated when both factor types have even parts.
    """
    cached = _bucket_cache.get(nu)
    if cached is not None:
        return cached
    n_amb = nu.size + nu.length
    w_cycles = perm_cycles(distinguished_perm(nu, max(n_amb, 1)))
    per_cycle = [_cycle_splittings(cyc) for cyc in w_cycles]
    bucket: dict[tuple[Partition, Partition], list[int]] = {}

    def rec(i: int, a_cycles: tuple, b_cycles: tuple):
        if i == len(per_cycle):
            lam = Partition([len(c) - 1 for c in a_cycles])
            mu = Partition([len(c) - 1 for c in b_cycles])
            entry = bucket.setdefault((lam, mu), [0, 0])
            entry[1] += 1
            if lam.is_even() and mu.is_even():
                a_sorted = tuple(sorted(a_cycles))
                b_sorted = tuple(sorted(b_cycles))
                sign, cys = engine_mul(a_sorted, b_sorted)
                if cys != w_cycles:
                    raise AssertionError("factorization product mismatch")
                entry[0] += sign
            return
        for u_cycles, v_cycles in per_cycle[i]:
            rec(i + 1, a_cycles + u_cycles, b_cycles + v_cycles)

    rec(0, (), ())
    _bucket_cache[nu] = bucket
    return bucket


class FHVector:
    """A homogeneous element of the graded algebra of stable class sums."""

    __slots__ = ("grading", "coords")

    def __init__(self, grading: int, coords: dict[Partition, int]):
        self.grading = grading
        self.coords = {k: v for k, v in coords.items() if v != 0}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FHVector)
            and self.grading == other.grading
            and self.coords == other.coords
        )

    def __repr__(self) -> str:
        return f"FHVector(grading={self.grading}, coords={self.coords})"

    def to_json(self) -> dict:
        return {
            "grading": self.grading,
            "coords": {
                str(k.to_json()).replace(" ", ""): v
                for k, v in sorted(self.coords.items())
            },
        }


def graded_product(lam: Partition, mu: Partition) -> FHVector:
    """The stable top-degree product of two class sums: coefficients on all
    even-part types of size |lam| + |mu|. Independent of n by construction."""
    if not lam.is_even() or not mu.is_even():
        raise OddPartError("graded products are defined on even-part types")
    m = lam.size + mu.size
    coords: dict[Partition, int] = {}
    for nu in even_partitions_of(m):
        value = _graded_bucket(nu).get((lam, mu), [0, 0])[0]
        if value:
            coords[nu] = value
    return FHVector(m, coords)


def graded_product_ordinary(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """Top-degree structure constants of ordinary class sums (plain counts)."""
    m = lam.size + mu.size
    out: dict[Partition, int] = {}
    for nu in partitions_of(m):
        value = _graded_bucket(nu).get((lam, mu), [0, 0])[1]
        if value:
            out[nu] = value
    return out


def union_coeff(lam: Partition, mu: Partition) -> int:
    """Top-degree coefficient on the multiset union of the two types."""
    if not lam.is_even() or not mu.is_even():
        raise OddPartError("even parts required")
    out = 1
    for i in set(lam.parts) | set(mu.parts):
        out *= math.comb(lam.multiplicity(i) + mu.multiplicity(i), lam.multiplicity(i))
    return out


def one_part_coeff(lam: Partition, s: int, nu: Partition) -> int:
    """Closed form for the top-degree coefficient of a product with a
    one-part type (s): zero unless nu dominates lam + (s); single-row
    targets get the factorial formula, general targets reduce to it."""
    if s <= 0 or s % 2 != 0 or not lam.is_even() or not nu.is_even():
        raise OddPartError("even-part types and even s required")
    if nu.size != lam.size + s:
        return 0
    if not nu.dominates(lam.union(Partition([s]))):
        return 0
    if nu.length == 1:
        m = nu.size
        ell = lam.length
        if ell > s + 1:
            return 0
        denom = math.factorial(s + 1 - ell)
        for mult in lam.multiplicities().values():
            denom *= math.factorial(mult)
        num = (m + 1) * math.factorial(s)
        if num % denom:
            raise ArithmeticError("one-part closed form is not integral")
        return (-1) ** ell * (num // denom)
    total = 0
    for i in range(nu.length):
        nui = nu.parts[i]
        merged = lam.union(Partition([nui]))
        muu = merged.remove(nu)
        if muu is None:
            continue
        total += one_part_coeff(muu, s, Partition([nui]))
    return total


def h_membership(v: FHVector) -> bool:
    """Whether a homogeneous vector lies in the span of genuine graded
    products, by the signed multinomial evaluation at -grading."""
    m = v.grading
    total = 0
    for nu, a in v.coords.items():
        total += a * p_poly(nu)(-m)
    return total == 0


def verify_p2(r: int, a_source: str = "formula") -> tuple[int, bool]:
    """Evaluate the signed multinomial sum over all even types of size 2r
    and compare with 2*(-1)^r. Coefficients come from the Catalan product
    formula or from an actual extraction run."""
    if r < 1:
        raise ValueError("r must be positive")
    m = 2 * r
    if a_source == "formula":
        coeffs = {lam: formula_a(lam) for lam in even_partitions_of(m)}
    elif a_source == "computed":
        coeffs = a_coefficients(r, 3 * r).coords
        if set(coeffs) != set(even_partitions_of(m)):
            raise ValueError("extraction degree did not cover all types")
    else:
        raise ValueError(f"unknown source {a_source!r}")
    total = sum(c * p_poly(lam)(-m) for lam, c in coeffs.items())
    return total, total == 2 * (-1) ** r


def iota_compare(lam: Partition, mu: Partition) -> bool:
    """Check the sign law relating spin and ordinary top-degree constants:
    on every target type the spin constant is (-1)^(len lam + len mu - len nu)
    times the ordinary one, ordinary support stays on even types, and there
    are no cancellation anomalies."""
    if not lam.is_even() or not mu.is_even():
        raise OddPartError("even-part types required")
    m = lam.size + mu.size
    for nu in partitions_of(m):
        signed, plain = _graded_bucket(nu).get((lam, mu), [0, 0])
        if nu.is_even():
            expected = (-1) ** (lam.length + mu.length - nu.length) * plain
            if signed != expected:
                return False
        else:
            if plain != 0:
                return False
    return True


def triangularity_check(lam: Partition) -> bool:
    """Expand the product of the one-part types of lam and check dominance
    triangularity with a positive leading coefficient."""
    if not lam.is_even():
        raise OddPartError("even parts required")
    if lam.length == 0:
        return True
    coords: dict[Partition, int] = {Partition([lam.parts[0]]): 1}
    for s in lam.parts[1:]:
        nxt: dict[Partition, int] = {}
        for nu, c in coords.items():
            prod = graded_product(nu, Partition([s]))
            for rho, d in prod.coords.items():
                nxt[rho] = nxt.get(rho, 0) + c * d
        coords = {k: v for k, v in nxt.items() if v != 0}
    if coords.get(lam, 0) <= 0:
        return False
    return all(mu.dominates(lam) for mu in coords)


# -- polynomial structure constants -----------------------------------------

_extraction_cache: dict[tuple[Partition, Partition, Partition, str], list[int]] = {}


def _extraction_counts(
    lam: Partition, mu: Partition, nu: Partition, variant: str
) -> list[int]:
    """Signed pattern counts N_k: the coefficient of the distinguished target
    of type nu in the product of the two class sums at degree n equals
    sum_k N_k * C(n - |nu| - len(nu), k)."""
    key = (lam, mu, nu, variant)
    cached = _extraction_cache.get(key)
    if cached is not None:
        return cached
    m_pts = nu.size + nu.length
    kmax = mu.size + mu.length
    ambient = max(m_pts + kmax, 1)
    w = distinguished_perm(nu, ambient)
    w_cycles = perm_cycles(w)
    lengths = tuple(p + 1 for p in mu.parts)
    counts = [0] * (kmax + 1)
    for k in range(kmax + 1):
        j = kmax - k
        if j > m_pts:
            continue
        extras = tuple(range(m_pts + 1, m_pts + k + 1))
        for base in combinations(range(1, m_pts + 1), j):
            pts = tuple(sorted(base + extras))
            for cycs in _cycle_structures(pts, lengths):
                b = cycles_to_perm(cycs, ambient)
                a = compose(w, inverse_perm(b))
                if modified_type(a) != lam:
                    continue
                if variant == SPIN:
                    sign, cys = engine_mul(perm_cycles(a), cycs)
                    if cys != w_cycles:
                        raise AssertionError("extraction product mismatch")
                    counts[k] += sign
                else:
                    counts[k] += 1
    _extraction_cache[key] = counts
    return counts


def structure_value(
    lam: Partition, mu: Partition, nu: Partition, n: int, variant: str = SPIN
) -> int:
    """The class-sum coefficient a_{lam,mu}^{nu}(n), for any n >= |nu|+len(nu)."""
    if variant == SPIN and not (lam.is_even() and mu.is_even() and nu.is_even()):
        raise OddPartError("spin constants need even-part types")
    m_pts = nu.size + nu.length
    if n < m_pts:
        raise ValueError("constants are undetermined below |nu| + len(nu)")
    counts = _extraction_counts(lam, mu, nu, variant)
    return sum(c * binom_int(n - m_pts, k) for k, c in enumerate(counts) if c)


def degree_bound(lam: Partition, mu: Partition, nu: Partition) -> int:
    return max(
        0,
        lam.size + lam.length + mu.size + mu.length - nu.size - nu.length,
    )


@dataclass(frozen=True)
class FitResult:
    """A fitted polynomial structure constant with its holdout points."""

    lam: Partition
    mu: Partition
    nu: Partition
    variant: str
    poly: IntegerValuedPoly
    validated_on: tuple[int, int]

    def to_json(self) -> dict:
        return {
            "lambda": self.lam.to_json(),
            "mu": self.mu.to_json(),
            "nu": self.nu.to_json(),
            "variant": self.variant,
            "poly": self.poly.to_json(),
            "validated_on": list(self.validated_on),
        }


def fit_structure_poly(
    lam: Partition,
    mu: Partition,
    nu: Partition,
    n_range: tuple[int, int] | None = None,
    variant: str = SPIN,
) -> FitResult:
    """Fit the polynomial giving a_{lam,mu}^{nu}(n), holding out the last
    two sample points for validation."""
    bound = degree_bound(lam, mu, nu)
    n0 = max(nu.size + nu.length, 1)
    if n_range is None:
        n_range = (n0, n0 + bound + 2)
    lo, hi = n_range
    if lo < nu.size + nu.length:
        raise ValueError("fitting range starts below |nu| + len(nu)")
    if hi - lo < bound + 2:
        raise ValueError("fitting range shorter than degree bound + 3 points")
    points = [(n, structure_value(lam, mu, nu, n, variant)) for n in range(lo, hi + 1)]
    poly = ivp_fit(points, degree=bound)
    if poly.degree > bound:
        raise DegreeExceededError(
            f"fitted degree {poly.degree} exceeds bound {bound}"
        )
    return FitResult(lam, mu, nu, variant, poly, (hi - 1, hi))
