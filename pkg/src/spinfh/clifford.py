"""Exact integer Clifford algebra used as the ground-truth sign oracle.

Generators c_1..c_n satisfy c_i^2 = -1 and c_i c_j = -c_j c_i. The group
generator t_i lifts to the unnormalized element tau_i = c_i - c_{i+1}, so a
word of length L lifts to 2^(L/2) times the true group lift; callers only
ever compare coefficients up to a power of two, which keeps every
coefficient an integer.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import InconsistentLiftError


def _basis_mul(s: int, t: int) -> tuple[int, int]:
    """Product of basis monomials e_s * e_t as (mask, sign).

    The sign counts the transpositions needed to interleave the two
    ascending index lists, plus one factor -1 per repeated index.
    """
    swaps = 0
    bits = t
    while bits:
        low = bits & -bits
        swaps += (s >> low.bit_length()).bit_count()
        bits ^= low
    swaps += (s & t).bit_count()
    return s ^ t, -1 if swaps & 1 else 1


class Multivector:
    """Sparse integer multivector over monomial bitmasks."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[int, int] | None = None):
        self.n = n
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}

    @staticmethod
    def scalar(n: int, value: int = 1) -> "Multivector":
        return Multivector(n, {0: value} if value else {})

    @staticmethod
    def generator(n: int, i: int) -> "Multivector":
        if not 1 <= i <= n:
            raise ValueError(f"generator index {i} out of range 1..{n}")
        return Multivector(n, {1 << (i - 1): 1})

    def __add__(self, other: "Multivector") -> "Multivector":
        if self.n != other.n:
            raise ValueError("ambient generator counts differ")
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Multivector(self.n, out)

    def __neg__(self) -> "Multivector":
        return Multivector(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def __mul__(self, other: "Multivector") -> "Multivector":
        return mv_mul(self, other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Multivector)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        return f"Multivector(n={self.n}, terms={dict(sorted(self.terms.items()))})"

    def is_zero(self) -> bool:
        return not self.terms

    def to_json(self) -> dict:
        return {str(m): c for m, c in sorted(self.terms.items())}


def mv_mul(a: Multivector, b: Multivector) -> Multivector:
    """Bilinear Clifford product of two multivectors with the same ambient n."""
    if a.n != b.n:
        raise ValueError("ambient generator counts differ")
    out: dict[int, int] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            mask, sign = _basis_mul(ma, mb)
            out[mask] = out.get(mask, 0) + sign * ca * cb
    return Multivector(a.n, out)


def lift_word(word: Iterable[int], n: int) -> Multivector:
    """Product of tau_i = c_i - c_{i+1} over a generator word.

    For a word of length L this equals 2^(L/2) times the normalized group
    lift when L is even; comparisons are made only up to powers of two.
    """
    result = Multivector.scalar(n, 1)
    for i in word:
        if not 1 <= i <= n - 1:
            raise ValueError(f"word letter {i} out of range 1..{n - 1}")
        tau = Multivector(n, {1 << (i - 1): 1, 1 << i: -1})
        result = mv_mul(result, tau)
    return result


# -- canonical reduced words ---------------------------------------------


def canonical_word(perm: Sequence[int]) -> tuple[int, ...]:
    """The frozen reduced word for a permutation, from its Lehmer code.

    Peeling the largest value m at position p contributes the descending
    run (m-1, m-2, ..., p); runs are emitted for m = 2, 3, ... in that
    order, so segments start at ever higher generators. Permutations that
    fix the top points get the same word at every ambient degree.
    """
    seq = list(perm)
    segments: list[list[int]] = []
    for m in range(len(seq), 1, -1):
        p = seq.index(m) + 1
        segments.append(list(range(m - 1, p - 1, -1)))
        del seq[p - 1]
    segments.reverse()
    return tuple(i for seg in segments for i in seg)


def word_to_perm(word: Iterable[int], n: int) -> tuple[int, ...]:
    """One-line form of s_{i1} o s_{i2} o ... (rightmost letter applied first)."""
    perm = list(range(1, n + 1))
    for i in word:
        # right multiplication by s_i swaps the entries at positions i, i+1
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """Composition p o q acting on {1..n}: apply q first, then p."""
    return tuple(p[q[i] - 1] for i in range(len(q)))


_lift_cache: dict[tuple[int, tuple[int, ...]], Multivector] = {}


def canonical_lift(perm: Sequence[int]) -> Multivector:
    """Memoized multivector lift of the canonical word of a permutation."""
    n = len(perm)
    key = (n, tuple(perm))
    cached = _lift_cache.get(key)
    if cached is None:
        cached = lift_word(canonical_word(perm), n)
        _lift_cache[key] = cached
    return cached


def oracle_product_sign(
    sigma: Sequence[int], tau: Sequence[int]
) -> tuple[tuple[int, ...], int]:
    """Ground-truth product in the double cover via canonical lifts.

    Multiplies the canonical lifts of sigma and tau and compares one shared
    nonzero monomial with the canonical lift of sigma*tau; the coefficient
    ratio must be +-2^k and its sign is the 2-cocycle value.
    """
    if len(sigma) != len(tau):
        raise ValueError("degrees differ")
    st = compose(sigma, tau)
    prod = mv_mul(canonical_lift(sigma), canonical_lift(tau))
    target = canonical_lift(st)
    mask = max(target.terms)
    c_target = target.terms[mask]
    c_prod = prod.terms.get(mask, 0)
    if c_prod == 0 or c_prod % c_target != 0:
        raise InconsistentLiftError("lift coefficients are not proportional")
    ratio = c_prod // c_target
    mag = abs(ratio)
    if mag & (mag - 1):
        raise InconsistentLiftError(f"coefficient ratio {ratio} is not a power of two")
    return st, (1 if ratio > 0 else -1)
