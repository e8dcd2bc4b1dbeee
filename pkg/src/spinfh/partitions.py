"""Partitions, modified cycle types, Catalan numbers and integer-valued polynomials.

Everything here is exact integer combinatorics: partitions are immutable
non-increasing tuples of positive integers, and polynomials are stored in
the binomial basis C(x,k) so that taking integer values at all integers is
a syntactic property of the coefficients.
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import InconsistentError, NonIntegralError, OddPartError


def binom_int(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) for any integer n and k >= 0.

    Negative n uses the generalized identity C(n,k) = (-1)^k C(k-n-1, k).
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if n < 0:
        return (-1) ** k * math.comb(k - n - 1, k)
    if k > n:
        return 0
    return math.comb(n, k)


class Partition:
    """An integer partition: a non-increasing tuple of positive parts."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(sorted((int(p) for p in parts), reverse=True))
        if any(p <= 0 for p in ps):
            raise ValueError("partition parts must be positive")
        object.__setattr__(self, "parts", ps)

    # -- basic statistics ------------------------------------------------

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicity(self, i: int) -> int:
        return sum(1 for p in self.parts if p == i)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    # -- predicates ------------------------------------------------------

    def is_even(self) -> bool:
        """True iff every part is even (vacuously true for the empty partition)."""
        return all(p % 2 == 0 for p in self.parts)

    def is_odd(self) -> bool:
        """True iff every part is odd."""
        return all(p % 2 == 1 for p in self.parts)

    def has_distinct_parts(self) -> bool:
        return len(set(self.parts)) == len(self.parts)

    def dominates(self, other: "Partition") -> bool:
        """Dominance order on partitions of equal size, padded with zeros."""
        if self.size != other.size:
            return False
        acc_s = acc_o = 0
        for i in range(max(self.length, other.length)):
            acc_s += self.parts[i] if i < self.length else 0
            acc_o += other.parts[i] if i < other.length else 0
            if acc_s < acc_o:
                return False
        return True

    # -- constructions ---------------------------------------------------

    def union(self, other: "Partition") -> "Partition":
        return Partition(self.parts + other.parts)

    def remove(self, other: "Partition") -> "Partition | None":
        """Multiset difference self - other, or None if other is not contained."""
        counts = self.multiplicities()
        for p in other.parts:
            if counts.get(p, 0) == 0:
                return None
            counts[p] -= 1
        rest: list[int] = []
        for p, m in counts.items():
            rest.extend([p] * m)
        return Partition(rest)

    # -- plumbing ----------------------------------------------------------

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __lt__(self, other: "Partition") -> bool:
        return (self.size, self.parts) < (other.size, other.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def to_json(self) -> list[int]:
        return list(self.parts)

    @staticmethod
    def from_json(data: Sequence[int]) -> "Partition":
        return Partition(data)


EMPTY = Partition(())


class SplitStatus(Enum):
    EVEN_SPLIT = "even_split"
    ODD_SPLIT = "odd_split"
    NON_SPLIT = "non_split"
    EMPTY_CLASS = "empty_class"


def modified_type(perm: Sequence[int]) -> Partition:
    """Modified cycle type of a permutation in one-line form.

    Each cycle of length m >= 2 contributes a part m - 1; fixed points
    contribute nothing.
    """
    n = len(perm)
    seen = [False] * n
    parts = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j] - 1
            length += 1
        if length > 1:
            parts.append(length - 1)
    return Partition(parts)


def classify_split(lam: Partition, n: int) -> SplitStatus:
    """Decide how the preimage of the class with modified type lam behaves in degree n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if lam.size + lam.length > n:
        return SplitStatus.EMPTY_CLASS
    if lam.is_even():
        return SplitStatus.EVEN_SPLIT
    if (
        lam.size % 2 == 1
        and lam.has_distinct_parts()
        and lam.size + lam.length in (n, n - 1)
    ):
        return SplitStatus.ODD_SPLIT
    return SplitStatus.NON_SPLIT


def catalan(r: int) -> int:
    """The r-th Catalan number with catalan(1) = 1, catalan(r) = C(2r-2, r-1)/r."""
    if r < 1:
        raise ValueError("r must be positive")
    return math.comb(2 * (r - 1), r - 1) // r


class IntegerValuedPoly:
    """A polynomial sum_k b_k C(x, k) with integer coefficients b_k.

    In this basis the polynomial takes integer values at every integer,
    and membership in the ring of such polynomials is just the syntactic
    check that each b_k is an integer.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        return sum(b * binom_int(x, k) for k, b in enumerate(self.coeffs))

    def __eq__(self, other) -> bool:
        return isinstance(other, IntegerValuedPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntegerValuedPoly") -> "IntegerValuedPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntegerValuedPoly(
            [x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)]
        )

    def __neg__(self) -> "IntegerValuedPoly":
        return IntegerValuedPoly([-c for c in self.coeffs])

    def __sub__(self, other: "IntegerValuedPoly") -> "IntegerValuedPoly":
        return self + (-other)

    def __repr__(self) -> str:
        return f"IntegerValuedPoly({list(self.coeffs)})"

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_json(self) -> dict:
        return {"binomial_coeffs": list(self.coeffs)}

    @staticmethod
    def from_json(data: dict) -> "IntegerValuedPoly":
        return IntegerValuedPoly(data["binomial_coeffs"])


def p_poly(nu: Partition) -> IntegerValuedPoly:
    """The signed multinomial polynomial attached to a partition with even parts.

    For nu with part multiplicities m_2, m_4, ... this is
    (-1)^len(nu) * x(x-1)...(x-len(nu)+1) / (m_2! m_4! ...),
    a single binomial-basis term (len(nu)! / prod m_i!) * C(x, len(nu)),
    up to sign.
    """
    if not nu.is_even():
        raise OddPartError(f"{nu!r} has an odd part")
    ell = nu.length
    denom = 1
    for m in nu.multiplicities().values():
        denom *= math.factorial(m)
    lead = (-1) ** ell * (math.factorial(ell) // denom)
    return IntegerValuedPoly([0] * ell + [lead])


def ivp_fit(
    points: Sequence[tuple[int, int]], degree: int | None = None
) -> IntegerValuedPoly:
    """Interpolate integer data by a polynomial in the binomial basis.

    Fits the first degree+1 points exactly (degree defaults to
    len(points)-1) and treats any remaining points as validation data.
    Raises NonIntegralError if a binomial coefficient comes out
    fractional and InconsistentError if a validation point mismatches.
    """
    if not points:
        raise ValueError("need at least one point")
    xs = [p[0] for p in points]
    if len(set(xs)) != len(xs):
        raise ValueError("abscissae must be distinct")
    d = len(points) - 1 if degree is None else degree
    if d < 0:
        raise ValueError("degree must be non-negative")
    if len(points) < d + 1:
        raise ValueError(f"need at least {d + 1} points for degree {d}")

    fit_pts = points[: d + 1]
    hold_pts = points[d + 1 :]

    # Solve sum_k b_k C(x_i, k) = v_i by Gaussian elimination over Q.
    rows = [
        [Fraction(binom_int(x, k)) for k in range(d + 1)] + [Fraction(v)]
        for x, v in fit_pts
    ]
    ncols = d + 1
    for col in range(ncols):
        pivot = next((r for r in range(col, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular interpolation system")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(len(rows)):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    sol = [rows[k][ncols] for k in range(ncols)]
    for b in sol:
        if b.denominator != 1:
            raise NonIntegralError(f"non-integer binomial coefficient {b}")
    poly = IntegerValuedPoly([int(b) for b in sol])
    for x, v in hold_pts:
        got = poly(x)
        if got != v:
            raise InconsistentError(f"holdout point ({x}, {v}) got {got}")
    return poly


# -- partition generators -------------------------------------------------


def partitions_of(m: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of m in reverse lexicographic order."""
    if m < 0:
        return
    if m == 0:
        yield EMPTY
        return
    top = m if max_part is None else min(m, max_part)

    def rec(rest: int, mx: int, acc: list[int]):
        if rest == 0:
            yield Partition(acc)
            return
        for p in range(min(rest, mx), 0, -1):
            yield from rec(rest - p, p, acc + [p])

    yield from rec(m, top, [])


def even_partitions_of(m: int) -> Iterator[Partition]:
    """All partitions of m with every part even."""
    if m % 2 != 0 or m < 0:
        return
    for lam in partitions_of(m // 2):
        yield Partition([2 * p for p in lam])


def even_partitions_fitting(n: int) -> list[Partition]:
    """All even-part partitions lam with lam.size + lam.length <= n, sorted."""
    out = [EMPTY]
    for m in range(2, n, 2):
        for lam in even_partitions_of(m):
            if lam.size + lam.length <= n:
                out.append(lam)
    return sorted(out)


def class_size(lam: Partition, n: int) -> int:
    """Number of permutations in S_n with modified cycle type lam."""
    if lam.size + lam.length > n:
        return 0
    # Cycle type: parts lam_i + 1 plus fixed points.
    mults: dict[int, int] = {}
    for p in lam.parts:
        mults[p + 1] = mults.get(p + 1, 0) + 1
    mults[1] = mults.get(1, 0) + (n - lam.size - lam.length)
    z = 1
    for i, m in mults.items():
        z *= i**m * math.factorial(m)
    return math.factorial(n) // z
