"""Sparse exact-integer arithmetic in the spin group algebra and in ZS_n.

Spin elements are stored as integer coefficients on the canonical basis
T_perm. Products run internally in the disjoint-cycle normal form, sweeping
one bracket 2-cycle at a time across the whole sparse support, and are
converted back through the memoized basis-change sign. The ordinary variant
is plain permutation convolution and serves as the comparison oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Iterator

from .clifford import compose
from .errors import (
    DoesNotFitError,
    NotCentralError,
    OddPartError,
    ResourceCapError,
)
from .partitions import Partition, class_size, modified_type
from .spingroup import (
    Perm,
    SpinElement,
    _mul_trans,
    chi,
    cycle_chain,
    cycles_to_perm,
    enumerate_class,
    identity_perm,
    perm_cycles,
    transposition_perm,
)

SPIN = "spin"
ORDINARY = "ordinary"

# Refuse products whose estimated support would exceed this many terms.
DEFAULT_TERM_CAP = 20_000_000


class AlgebraElement:
    """Sparse integer combination of permutations (spin or ordinary basis)."""

    __slots__ = ("n", "variant", "terms")

    def __init__(self, n: int, variant: str, terms: dict[Perm, int] | None = None):
        if variant not in (SPIN, ORDINARY):
            raise ValueError(f"unknown variant {variant!r}")
        self.n = n
        self.variant = variant
        self.terms = {p: c for p, c in (terms or {}).items() if c != 0}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(n: int, variant: str) -> "AlgebraElement":
        return AlgebraElement(n, variant)

    @staticmethod
    def identity(n: int, variant: str) -> "AlgebraElement":
        return AlgebraElement(n, variant, {identity_perm(n): 1})

    @staticmethod
    def from_spin(x: SpinElement) -> "AlgebraElement":
        return AlgebraElement(x.n, SPIN, {x.perm: x.sign})

    @staticmethod
    def generator(i: int, n: int) -> "AlgebraElement":
        return AlgebraElement(n, SPIN, {transposition_perm(i, i + 1, n): 1})

    # -- linear structure -------------------------------------------------

    def _check(self, other: "AlgebraElement"):
        if self.n != other.n or self.variant != other.variant:
            raise ValueError("mismatched degree or variant")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, 0) + c
        return AlgebraElement(self.n, self.variant, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.n, self.variant, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, k: int) -> "AlgebraElement":
        if k == 0:
            return AlgebraElement.zero(self.n, self.variant)
        return AlgebraElement(self.n, self.variant, {p: k * c for p, c in self.terms.items()})

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return elem_mul(self, other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and self.n == other.n
            and self.variant == other.variant
            and self.terms == other.terms
        )

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self) -> str:
        return (
            f"AlgebraElement(n={self.n}, variant={self.variant!r}, "
            f"terms={len(self.terms)})"
        )

    def support_types(self) -> set[Partition]:
        return {modified_type(p) for p in self.terms}


# -- conversion between the stored basis and the cycle normal form ---------


def to_cyc_terms(a: AlgebraElement) -> dict[Perm, int]:
    """Coefficients on the cycle-normal-form basis (spin variant only)."""
    return {p: c * chi(p) for p, c in a.terms.items()}


def from_cyc_terms(n: int, cyc_terms: dict[Perm, int]) -> AlgebraElement:
    return AlgebraElement(n, SPIN, {p: c * chi(p) for p, c in cyc_terms.items()})


def _sweep_bracket(terms: dict[Perm, int], a: int, b: int) -> dict[Perm, int]:
    """Multiply every cycle-basis term by the bracket [a, b], merging results."""
    out: dict[Perm, int] = {}
    for p, c in terms.items():
        s, _ = _mul_trans(perm_cycles(p), a, b)
        q = list(p)
        q[a - 1], q[b - 1] = q[b - 1], q[a - 1]
        qt = tuple(q)
        val = c if s > 0 else -c
        prev = out.get(qt)
        out[qt] = val if prev is None else prev + val
    return out


def cyc_mul_terms(
    terms: dict[Perm, int], factor: dict[Perm, int], n: int, cap: int = DEFAULT_TERM_CAP
) -> dict[Perm, int]:
    """Product of two sparse elements in cycle-basis coordinates."""
    if len(terms) * len(factor) > cap * 4:
        raise ResourceCapError(
            f"product of {len(terms)} x {len(factor)} terms exceeds the cap"
        )
    out: dict[Perm, int] = {}
    for pb, cb in factor.items():
        sign, chain = cycle_chain(perm_cycles(pb))
        cur = terms
        for a, b in chain:
            cur = _sweep_bracket(cur, a, b)
        coeff = cb * sign
        for p, c in cur.items():
            out[p] = out.get(p, 0) + coeff * c
        if len(out) > cap:
            raise ResourceCapError(f"product support exceeded {cap} terms")
    return {p: c for p, c in out.items() if c != 0}


def elem_mul(
    a: AlgebraElement, b: AlgebraElement, cap: int = DEFAULT_TERM_CAP
) -> AlgebraElement:
    """Exact sparse product, dispatching on the variant."""
    a._check(b)
    if a.is_zero() or b.is_zero():
        return AlgebraElement.zero(a.n, a.variant)
    if a.variant == ORDINARY:
        if len(a.terms) * len(b.terms) > cap * 4:
            raise ResourceCapError(
                f"product of {len(a.terms)} x {len(b.terms)} terms exceeds the cap"
            )
        out: dict[Perm, int] = {}
        for pb, cb in b.terms.items():
            for pa, ca in a.terms.items():
                q = compose(pa, pb)
                out[q] = out.get(q, 0) + ca * cb
            if len(out) > cap:
                raise ResourceCapError(f"product support exceeded {cap} terms")
        return AlgebraElement(a.n, ORDINARY, out)
    prod = cyc_mul_terms(to_cyc_terms(a), to_cyc_terms(b), a.n, cap)
    return from_cyc_terms(a.n, prod)


# -- class sums -------------------------------------------------------------


def _cycle_structures(
    points: tuple[int, ...], lengths: tuple[int, ...]
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All ways to arrange the given points into disjoint cycles of the given
    lengths, in canonical form (cycles min-first, ordered by minimum)."""
    if not lengths:
        yield ()
        return
    p0 = points[0]
    rest_points = points[1:]
    seen: set[int] = set()
    for i, length in enumerate(lengths):
        if length in seen:
            continue
        seen.add(length)
        rest_lengths = lengths[:i] + lengths[i + 1 :]
        for others in combinations(rest_points, length - 1):
            others_set = set(others)
            remaining = tuple(x for x in rest_points if x not in others_set)
            for arr in permutations(others):
                head = ((p0,) + arr,)
                for tail in _cycle_structures(remaining, rest_lengths):
                    yield head + tail


def perms_of_modified_type(lam: Partition, n: int) -> Iterator[Perm]:
    """All permutations of {1..n} with modified cycle type lam."""
    if lam.size + lam.length > n:
        return
    lengths = tuple(p + 1 for p in lam.parts)
    size = lam.size + lam.length
    for support in combinations(range(1, n + 1), size):
        for cycs in _cycle_structures(support, lengths):
            yield cycles_to_perm(cycs, n)


def class_sum(lam: Partition, n: int, variant: str) -> AlgebraElement:
    """The class sum of modified type lam: canonical-signed even split class
    members for the spin variant, an ordinary conjugacy class sum otherwise."""
    if variant == SPIN:
        if not lam.is_even():
            raise OddPartError(f"spin class sums need even parts, got {lam!r}")
        members = enumerate_class(lam, n).members
        return AlgebraElement(n, SPIN, {m.perm: m.sign for m in members})
    return AlgebraElement(n, ORDINARY, {p: 1 for p in perms_of_modified_type(lam, n)})


# -- central decomposition ---------------------------------------------------


def decompose_central(a: AlgebraElement) -> dict[Partition, int]:
    """Coordinates of an element in the class-sum basis of its variant.

    Raises NotCentralError when the element is not an exact integer
    combination of class sums (spin variant: even split class sums).
    """
    if a.is_zero():
        return {}
    if a.variant == SPIN:
        terms = to_cyc_terms(a)
    else:
        terms = a.terms
    by_type: dict[Partition, list[int]] = {}
    for p, c in terms.items():
        by_type.setdefault(modified_type(p), []).append(c)
    out: dict[Partition, int] = {}
    for lam, coeffs in sorted(by_type.items()):
        if a.variant == SPIN and not lam.is_even():
            raise NotCentralError(f"support contains non even-split type {lam!r}")
        first = coeffs[0]
        if any(c != first for c in coeffs):
            raise NotCentralError(f"non-constant coefficients on type {lam!r}")
        if len(coeffs) != class_size(lam, a.n):
            raise NotCentralError(f"support does not cover the class of {lam!r}")
        out[lam] = first
    return out


def reconstruct_central(
    coords: dict[Partition, int], n: int, variant: str
) -> AlgebraElement:
    out = AlgebraElement.zero(n, variant)
    for lam, c in coords.items():
        out = out + class_sum(lam, n, variant).scale(c)
    return out


@dataclass(frozen=True)
class StructureTable:
    """Decomposition of a product of two class sums at a fixed degree n."""

    lam: Partition
    mu: Partition
    n: int
    variant: str
    entries: dict[Partition, int]

    def to_json(self) -> dict:
        return {
            "lambda": self.lam.to_json(),
            "mu": self.mu.to_json(),
            "n": self.n,
            "variant": self.variant,
            "entries": {
                str(nu.to_json()).replace(" ", ""): c
                for nu, c in sorted(self.entries.items())
            },
        }

    def to_csv(self) -> str:
        lines = ["nu,coefficient"]
        for nu, c in sorted(self.entries.items()):
            lines.append(f"\"{nu.to_json()}\",{c}")
        return "\n".join(lines) + "\n"


def structure_constants(
    lam: Partition, mu: Partition, n: int, variant: str
) -> StructureTable:
    """Entries of class_sum(lam) * class_sum(mu) in the class-sum basis."""
    if lam.size + lam.length > n or mu.size + mu.length > n:
        raise DoesNotFitError("one of the classes is empty at this degree")
    prod = elem_mul(class_sum(lam, n, variant), class_sum(mu, n, variant))
    return StructureTable(lam, mu, n, variant, decompose_central(prod))


# -- structural predicates ---------------------------------------------------


def is_even_central(a: AlgebraElement) -> bool:
    """True iff every term is an even permutation and a commutes with all
    generators of the spin algebra."""
    if a.variant != SPIN:
        raise ValueError("even centrality is a spin-variant notion")
    for p in a.terms:
        if modified_type(p).size % 2 != 0:
            return False
    for i in range(1, a.n):
        t = AlgebraElement.generator(i, a.n)
        if elem_mul(a, t) != elem_mul(t, a):
            return False
    return True


def top_degree(a: AlgebraElement) -> AlgebraElement:
    """Restriction to the terms of maximal modified-type size."""
    if a.is_zero():
        return a
    deg = {p: modified_type(p).size for p in a.terms}
    top = max(deg.values())
    return AlgebraElement(
        a.n, a.variant, {p: c for p, c in a.terms.items() if deg[p] == top}
    )
