"""Signed permutations: the group-level layer of the spin group algebra.

A basis element is sign * T_perm where T_perm is the frozen canonical lift
(the reduced word from the Lehmer code, staircase segments in ascending
order). Products are evaluated through an internal normal form: every
basis element is, up to sign, a product of disjoint bracket cycles written
min-first and ordered by minimum. The rewriting rules for multiplying such
a product by a single bracket 2-cycle are:

    rotation            [i1,...,im] = (-1)^(m-1) [i2,...,im,i1]
    1-cycles            [i] = -1 (a scalar)
    shared first entry  [a,X][a,b] = -[a,b,X]
    shared second entry [b,Y][a,b] =  [b,a,Y]
    same cycle          [a,U,b,V][a,b] = (-1)^(|U|+1) [a,V][b,U]
    different cycles    [a,X][b,Y][a,b] = (-1)^|Y| [a,Y,b,X]

and disjoint cycles of lengths m, d commute up to (-1)^((m-1)(d-1)).
The conversion sign between the cycle normal form and the canonical
staircase lift is memoized per permutation; agreement of the whole engine
with the Clifford-algebra oracle is enforced by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .clifford import canonical_word, compose
from .errors import DoesNotFitError, OddPartError
from .partitions import Partition, modified_type

Perm = tuple[int, ...]
Cycles = tuple[tuple[int, ...], ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def inverse_perm(perm: Sequence[int]) -> Perm:
    out = [0] * len(perm)
    for i, v in enumerate(perm):
        out[v - 1] = i + 1
    return tuple(out)


def transposition_perm(a: int, b: int, n: int) -> Perm:
    out = list(range(1, n + 1))
    out[a - 1], out[b - 1] = b, a
    return tuple(out)


def _trim(perm: Sequence[int]) -> Perm:
    """Drop trailing fixed points so caches are shared across ambient degrees."""
    m = len(perm)
    while m > 0 and perm[m - 1] == m:
        m -= 1
    return tuple(perm[:m])


_cycle_cache: dict[Perm, Cycles] = {(): ()}


def perm_cycles(perm: Sequence[int]) -> Cycles:
    """Nontrivial cycles of a permutation, min-first, sorted by minimum."""
    key = _trim(perm)
    cached = _cycle_cache.get(key)
    if cached is not None:
        return cached
    m = len(key)
    seen = [False] * m
    cycles = []
    for start in range(m):
        if seen[start]:
            continue
        cyc = []
        j = start
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = key[j] - 1
        if len(cyc) > 1:
            cycles.append(tuple(cyc))
    result = tuple(cycles)
    _cycle_cache[key] = result
    return result


def cycles_to_perm(cycles: Iterable[Sequence[int]], n: int) -> Perm:
    out = list(range(1, n + 1))
    for cyc in cycles:
        for i, v in enumerate(cyc):
            out[v - 1] = cyc[(i + 1) % len(cyc)]
    return tuple(out)


def mtype_size(cycles: Cycles) -> int:
    """Sum of (length - 1) over cycles: the size of the modified type."""
    return sum(len(c) - 1 for c in cycles)


# -- the rewriting engine on signed products of disjoint cycles -----------


def _canon_cycle(cyc: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Rotate a cycle so its minimum comes first; each rotation of an
    m-cycle costs (-1)^(m-1)."""
    m = len(cyc)
    k = min(range(m), key=cyc.__getitem__)
    if k == 0:
        return 1, tuple(cyc)
    sign = -1 if ((m - 1) * k) & 1 else 1
    return sign, tuple(cyc[k:]) + tuple(cyc[:k])


def _sort_cycles(cys: list) -> tuple[int, Cycles]:
    """Sort disjoint min-first cycles by minimum; swapping two cycles of
    even length flips the sign."""
    sign = 1
    lst = list(cys)
    for i in range(1, len(lst)):
        j = i
        while j > 0 and lst[j - 1][0] > lst[j][0]:
            if not (len(lst[j - 1]) & 1) and not (len(lst[j]) & 1):
                sign = -sign
            lst[j - 1], lst[j] = lst[j], lst[j - 1]
            j -= 1
    return sign, tuple(lst)


def _mul_trans(cycles: Cycles, a: int, b: int) -> tuple[int, Cycles]:
    """Multiply a canonical product of disjoint cycles by the bracket [a, b].

    Returns (sign, canonical cycles of the product). a and b are the first
    and second entry of the bracket; the order matters for the sign.
    """
    ia = ib = -1
    for i, c in enumerate(cycles):
        if a in c:
            ia = i
        if b in c:
            ib = i
    sign = 1

    if ia < 0 and ib < 0:
        if a > b:
            sign = -sign
            a, b = b, a
        ssort, out = _sort_cycles(list(cycles) + [(a, b)])
        return sign * ssort, out

    if ia >= 0 and ib < 0:
        # [a, X][a, b] = -[a, b, X]
        c = cycles[ia]
        odd_mover = not (len(c) & 1)
        if odd_mover:
            for d in cycles[ia + 1 :]:
                if not (len(d) & 1):
                    sign = -sign
        k = c.index(a)
        if ((len(c) - 1) * k) & 1:
            sign = -sign
        rotated = c[k:] + c[:k]
        sign = -sign
        rs, newcyc = _canon_cycle((a, b) + rotated[1:])
        rest = [d for i, d in enumerate(cycles) if i != ia]
        ssort, out = _sort_cycles(rest + [newcyc])
        return sign * rs * ssort, out

    if ib >= 0 and ia < 0:
        # [b, Y][a, b] = [b, a, Y]
        c = cycles[ib]
        if not (len(c) & 1):
            for d in cycles[ib + 1 :]:
                if not (len(d) & 1):
                    sign = -sign
        k = c.index(b)
        if ((len(c) - 1) * k) & 1:
            sign = -sign
        rotated = c[k:] + c[:k]
        rs, newcyc = _canon_cycle((b, a) + rotated[1:])
        rest = [d for i, d in enumerate(cycles) if i != ib]
        ssort, out = _sort_cycles(rest + [newcyc])
        return sign * rs * ssort, out

    if ia == ib:
        # [a, U, b, V][a, b] = (-1)^(|U|+1) [a, V][b, U]
        c = cycles[ia]
        if not (len(c) & 1):
            for d in cycles[ia + 1 :]:
                if not (len(d) & 1):
                    sign = -sign
        k = c.index(a)
        if ((len(c) - 1) * k) & 1:
            sign = -sign
        rotated = c[k:] + c[:k]
        j = rotated.index(b)
        u = rotated[1:j]
        v = rotated[j + 1 :]
        if (len(u) + 1) & 1:
            sign = -sign
        parts = []
        for newcyc in ((a,) + v, (b,) + u):
            if len(newcyc) == 1:
                sign = -sign
            else:
                rs, cc = _canon_cycle(newcyc)
                sign *= rs
                parts.append(cc)
        rest = [d for i, d in enumerate(cycles) if i != ia]
        ssort, out = _sort_cycles(rest + parts)
        return sign * ssort, out

    # a and b lie in different cycles: [a, X][b, Y][a, b] = (-1)^|Y| [a, Y, b, X]
    ca, cb = cycles[ia], cycles[ib]
    pa, pb = not (len(ca) & 1), not (len(cb) & 1)
    for d in range(ia + 1, len(cycles)):
        if d != ib and pa and not (len(cycles[d]) & 1):
            sign = -sign
    for d in range(ib + 1, len(cycles)):
        if d != ia and pb and not (len(cycles[d]) & 1):
            sign = -sign
    if ia > ib and pa and pb:
        sign = -sign
    k = ca.index(a)
    if ((len(ca) - 1) * k) & 1:
        sign = -sign
    x = ca[k:] + ca[:k]
    k = cb.index(b)
    if ((len(cb) - 1) * k) & 1:
        sign = -sign
    y = cb[k:] + cb[:k]
    if (len(y) - 1) & 1:
        sign = -sign
    rs, newcyc = _canon_cycle((a,) + y[1:] + (b,) + x[1:])
    rest = [d for i, d in enumerate(cycles) if i not in (ia, ib)]
    ssort, out = _sort_cycles(rest + [newcyc])
    return sign * rs * ssort, out


def cycle_chain(cycles: Cycles) -> tuple[int, list[tuple[int, int]]]:
    """Decompose a product of cycles into ordered bracket 2-cycles.

    [c1,...,cm] = (-1)^(m(m-1)/2 - 1) [c1,c2][c2,c3]...[c_{m-1},c_m].
    """
    sign = 1
    chain: list[tuple[int, int]] = []
    for cyc in cycles:
        m = len(cyc)
        if (m * (m - 1) // 2 - 1) & 1:
            sign = -sign
        chain.extend((cyc[i], cyc[i + 1]) for i in range(m - 1))
    return sign, chain


def engine_mul(cycles_a: Cycles, cycles_b: Cycles) -> tuple[int, Cycles]:
    """Product (prod cycles_a) * (prod cycles_b) in normal form."""
    sign, chain = cycle_chain(cycles_b)
    cys = cycles_a
    for a, b in chain:
        s, cys = _mul_trans(cys, a, b)
        sign *= s
    return sign, cys


def engine_conjugate(cycles: Cycles, s: Sequence[int]) -> tuple[int, Cycles]:
    """Conjugate a product of disjoint cycles by (any lift of) a permutation.

    The sign is (-1) to the product of the modified-type sizes, times the
    canonicalization signs of the relabeled cycles.
    """
    size_x = mtype_size(cycles)
    size_s = mtype_size(perm_cycles(s))
    sign = -1 if (size_x * size_s) & 1 else 1
    relabeled = []
    for cyc in cycles:
        rs, cc = _canon_cycle(tuple(s[v - 1] for v in cyc))
        sign *= rs
        relabeled.append(cc)
    ssort, out = _sort_cycles(relabeled)
    return sign * ssort, out


# -- conversion between the cycle normal form and the canonical lift ------

_chi_cache: dict[Perm, int] = {(): 1}


def chi(perm: Sequence[int]) -> int:
    """Sign relating the two lifts: (cycle normal form) = chi * T_perm."""
    key = _trim(perm)
    cached = _chi_cache.get(key)
    if cached is not None:
        return cached
    m = len(key)
    p = key.index(m) + 1
    parent = key[: p - 1] + key[p:] + (m,)
    sign = chi(parent)
    cys = perm_cycles(parent)
    for k in range(m - 1, p - 1, -1):
        s, cys = _mul_trans(cys, k, k + 1)
        sign = -sign * s
    _chi_cache[key] = sign
    return sign


def cocycle(pa: Sequence[int], pb: Sequence[int]) -> int:
    """Sign in T_pa * T_pb = cocycle(pa, pb) * T_{pa o pb}."""
    eng_sign, _ = engine_mul(perm_cycles(pa), perm_cycles(pb))
    return chi(pa) * chi(pb) * chi(compose(pa, pb)) * eng_sign


# -- public group-level API -------------------------------------------------


@dataclass(frozen=True)
class SpinElement:
    """sign * T_perm, a signed basis element of the spin group algebra."""

    n: int
    perm: Perm
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if sorted(self.perm) != list(range(1, self.n + 1)):
            raise ValueError("perm is not a permutation of 1..n")

    def projection(self) -> Perm:
        return self.perm

    def __neg__(self) -> "SpinElement":
        return SpinElement(self.n, self.perm, -self.sign)

    def to_json(self) -> dict:
        return {"n": self.n, "perm": list(self.perm), "sign": self.sign}

    @staticmethod
    def from_json(data: dict) -> "SpinElement":
        return SpinElement(data["n"], tuple(data["perm"]), data["sign"])


def spin_identity(n: int) -> SpinElement:
    return SpinElement(n, identity_perm(n), 1)


def spin_generator(i: int, n: int) -> SpinElement:
    """The generator t_i as a basis element (its canonical word is itself)."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range")
    return SpinElement(n, transposition_perm(i, i + 1, n), 1)


def spin_mul(a: SpinElement, b: SpinElement) -> SpinElement:
    if a.n != b.n:
        raise ValueError("degrees differ")
    return SpinElement(
        a.n, compose(a.perm, b.perm), a.sign * b.sign * cocycle(a.perm, b.perm)
    )


def spin_inverse(a: SpinElement) -> SpinElement:
    inv = inverse_perm(a.perm)
    return SpinElement(a.n, inv, a.sign * cocycle(a.perm, inv))


def cycle(indices: Sequence[int], n: int) -> SpinElement:
    """The bracket cycle [i1, ..., im] as a signed basis element.

    A 1-cycle is the scalar -1; longer cycles are canonicalized by
    rotations and converted to the canonical-lift basis.
    """
    if len(set(indices)) != len(indices):
        raise ValueError("cycle indices must be distinct")
    if any(not 1 <= i <= n for i in indices):
        raise ValueError("cycle index out of range")
    if len(indices) == 0:
        raise ValueError("empty cycle")
    if len(indices) == 1:
        return SpinElement(n, identity_perm(n), -1)
    rs, cyc = _canon_cycle(tuple(indices))
    perm = cycles_to_perm([cyc], n)
    return SpinElement(n, perm, rs * chi(perm))


def distinguished_element(lam: Partition, n: int) -> SpinElement:
    """Product of consecutive-index cycles of lengths lam_i + 1."""
    if not lam.is_even():
        raise OddPartError(f"{lam!r} has an odd part")
    if lam.size + lam.length > n:
        raise DoesNotFitError(f"{lam!r} does not fit in degree {n}")
    perm = distinguished_perm(lam, n)
    return SpinElement(n, perm, chi(perm))


def distinguished_perm(lam: Partition, n: int) -> Perm:
    cycles = []
    offset = 0
    for part in lam.parts:
        cycles.append(tuple(range(offset + 1, offset + part + 2)))
        offset += part + 1
    return cycles_to_perm(cycles, n)


def conjugate(s: Sequence[int], x: SpinElement) -> SpinElement:
    """s x s^{-1}, which does not depend on the choice of lift of s."""
    if len(s) != x.n:
        raise ValueError("degrees differ")
    cyc_sign = x.sign * chi(x.perm)
    sign, cys = engine_conjugate(perm_cycles(x.perm), s)
    new_perm = compose(compose(tuple(s), x.perm), inverse_perm(s))
    return SpinElement(x.n, new_perm, cyc_sign * sign * chi(new_perm))


def conjugate_via_mul(s: Sequence[int], x: SpinElement) -> SpinElement:
    """Same conjugation computed as T_s x T_s^{-1}; used for cross-checks."""
    ts = SpinElement(x.n, tuple(s), 1)
    return spin_mul(spin_mul(ts, x), spin_inverse(ts))


@dataclass(frozen=True)
class ClassEnumeration:
    """The members of one even split class, with their canonical signs."""

    lam: Partition
    n: int
    members: tuple[SpinElement, ...]

    def to_json(self) -> list:
        return [m.to_json() for m in self.members]


def enumerate_class(lam: Partition, n: int) -> ClassEnumeration:
    """All signed members of the even split class anchored at the
    distinguished element, found by conjugation BFS over adjacent
    transpositions."""
    if not lam.is_even():
        raise OddPartError(f"{lam!r} has an odd part")
    if lam.size + lam.length > n:
        return ClassEnumeration(lam, n, ())
    start = distinguished_perm(lam, n)
    gens = [transposition_perm(i, i + 1, n) for i in range(1, n)]
    seen_signs: dict[Perm, int] = {start: 1}
    frontier = [start]
    while frontier:
        nxt = []
        for perm in frontier:
            cys = perm_cycles(perm)
            base = seen_signs[perm]
            for g in gens:
                sign, _ = engine_conjugate(cys, g)
                q = compose(compose(g, perm), g)
                prev = seen_signs.get(q)
                if prev is None:
                    seen_signs[q] = base * sign
                    nxt.append(q)
                elif prev != base * sign:
                    raise AssertionError(
                        "conjugation produced the negative of a stored member"
                    )
        frontier = nxt
    if any(s != 1 for s in seen_signs.values()):
        raise AssertionError("even split class left the +1 sheet")
    members = tuple(
        SpinElement(n, p, chi(p)) for p in sorted(seen_signs)
    )
    return ClassEnumeration(lam, n, members)


def moved_points(xs: Iterable[SpinElement]) -> set[int]:
    """Union of non-fixed points of the projections."""
    out: set[int] = set()
    for x in xs:
        for i, v in enumerate(x.perm):
            if v != i + 1:
                out.add(i + 1)
    return out


def spin_modified_type(x: SpinElement) -> Partition:
    return modified_type(x.perm)
