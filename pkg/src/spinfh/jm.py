"""Odd Jucys-Murphy elements, their squares, and the Catalan coefficients.

The k-th odd JM element is the sum of the bracket 2-cycles [i,k] for i < k;
its square has the closed form -(k-1) - sum of bracket 3-cycles [i,j,k].
Elementary symmetric functions of the squares are accumulated by the prefix
recurrence E_k(j) = E_k(j-1) + E_{k-1}(j-1) * M_j^2, never by enumerating
index tuples. The stable top-degree coefficients match signed products of
Catalan numbers; that identity and its recursion are checked symbolically
and against computed values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .clifford import compose
from .errors import ResourceCapError, StabilityViolationError
from .groupalgebra import (
    DEFAULT_TERM_CAP,
    SPIN,
    AlgebraElement,
    cyc_mul_terms,
    decompose_central,
    from_cyc_terms,
    structure_constants,
    top_degree,
)
from .partitions import (
    Partition,
    catalan,
    even_partitions_fitting,
    even_partitions_of,
    modified_type,
)
from .spingroup import (
    Perm,
    _canon_cycle,
    chi,
    cycles_to_perm,
    distinguished_perm,
    identity_perm,
    inverse_perm,
    perm_cycles,
)


def jm_element(k: int, n: int) -> AlgebraElement:
    """The sum of bracket 2-cycles [i,k] over i < k (zero for k = 1)."""
    if not 1 <= k <= n:
        raise ValueError(f"k = {k} out of range 1..{n}")
    terms: dict[Perm, int] = {}
    for i in range(1, k):
        p = cycles_to_perm([(i, k)], n)
        terms[p] = chi(p)
    return AlgebraElement(n, SPIN, terms)


def _jm_square_cyc(k: int, n: int) -> dict[Perm, int]:
    """Closed form of M_k^2 in cycle-basis coordinates."""
    terms: dict[Perm, int] = {}
    if k >= 2:
        terms[identity_perm(n)] = -(k - 1)
    for i in range(1, k):
        for j in range(1, k):
            if i != j:
                rs, cyc = _canon_cycle((i, j, k))
                p = cycles_to_perm([cyc], n)
                terms[p] = terms.get(p, 0) - rs
    return {p: c for p, c in terms.items() if c != 0}


def jm_square(k: int, n: int) -> AlgebraElement:
    """M_k^2 from its closed form; equals elem_mul(M_k, M_k)."""
    if not 1 <= k <= n:
        raise ValueError(f"k = {k} out of range 1..{n}")
    return from_cyc_terms(n, _jm_square_cyc(k, n))


def elementary_jm_cyc(
    r: int, n: int, cap: int = DEFAULT_TERM_CAP
) -> dict[Perm, int]:
    """The r-th elementary symmetric function of the squared JM elements,
    in cycle-basis coordinates, via the prefix recurrence."""
    if not 1 <= r <= n:
        raise ValueError(f"r = {r} out of range 1..{n}")
    rows: list[dict[Perm, int]] = [{identity_perm(n): 1}] + [{} for _ in range(r)]
    for j in range(2, n + 1):
        m2 = _jm_square_cyc(j, n)
        for k in range(min(j, r), 0, -1):
            if not rows[k - 1]:
                continue
            prod = cyc_mul_terms(rows[k - 1], m2, n, cap)
            tgt = rows[k]
            for p, c in prod.items():
                c0 = tgt.get(p, 0) + c
                if c0:
                    tgt[p] = c0
                elif p in tgt:
                    del tgt[p]
            if len(tgt) > cap:
                raise ResourceCapError(f"support exceeded {cap} terms")
    return rows[r]


def elementary_jm(r: int, n: int, cap: int = DEFAULT_TERM_CAP) -> AlgebraElement:
    """Public form of the elementary symmetric function, on the stored basis."""
    return from_cyc_terms(n, elementary_jm_cyc(r, n, cap))


@dataclass(frozen=True)
class ACoefficients:
    """Stable top-degree class-sum coefficients of one elementary symmetric
    function, read off at extraction degree n."""

    r: int
    n: int
    coords: dict[Partition, int]

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "n": self.n,
            "coords": {
                str(lam.to_json()).replace(" ", ""): c
                for lam, c in sorted(self.coords.items())
            },
        }


def a_coefficients(r: int, n: int, check_stability: bool = False) -> ACoefficients:
    """Top-degree coefficients of the r-th elementary symmetric function,
    restricted to even-part types of size 2r readable at degree n."""
    e = elementary_jm_cyc(r, n)
    el = from_cyc_terms(n, e)
    coords = decompose_central(top_degree(el))
    coords = {lam: c for lam, c in coords.items() if lam.size == 2 * r}
    if check_stability:
        again = a_coefficients(r, n + 1, check_stability=False)
        for lam, c in coords.items():
            if again.coords.get(lam) != c:
                raise StabilityViolationError(
                    f"coefficient of {lam!r} changed between n={n} and n={n + 1}"
                )
    return ACoefficients(r, n, coords)


def a_coefficient_targeted(lam: Partition, n: int) -> int:
    """Coefficient of the distinguished element of type lam in the top part
    of the relevant elementary symmetric function, by degree-pruned
    propagation (the full support is never built)."""
    if lam.size % 2 != 0 or not lam.is_even():
        raise ValueError("target type must have even parts")
    if lam.size + lam.length > n:
        raise ValueError("target class is empty at this degree")
    r = lam.size // 2
    w = distinguished_perm(lam, n)

    def prune(terms: dict[Perm, int], k: int) -> dict[Perm, int]:
        out = {}
        for p, c in terms.items():
            if modified_type(p).size != 2 * k:
                continue
            rest = compose(inverse_perm(p), w)
            if modified_type(rest).size == 2 * (r - k):
                out[p] = c
        return out

    rows: list[dict[Perm, int]] = [{identity_perm(n): 1}] + [{} for _ in range(r)]
    for j in range(2, n + 1):
        m2 = _jm_square_cyc(j, n)
        for k in range(min(j, r), 0, -1):
            if not rows[k - 1]:
                continue
            prod = prune(cyc_mul_terms(rows[k - 1], m2, n), k)
            tgt = rows[k]
            for p, c in prod.items():
                c0 = tgt.get(p, 0) + c
                if c0:
                    tgt[p] = c0
                elif p in tgt:
                    del tgt[p]
    return rows[r].get(w, 0)


def formula_a(lam: Partition) -> int:
    """Signed product of Catalan numbers attached to an even-part type."""
    if not lam.is_even():
        raise ValueError("even parts required")
    value = 1
    for part in lam.parts:
        value *= catalan(part // 2 + 1)
    return (-1) ** lam.length * value


@dataclass
class CatalanReport:
    """Outcome of the Catalan coefficient verification."""

    rows: list[dict] = field(default_factory=list)
    recursion_ok: bool = True
    factorization_ok: bool = True

    @property
    def passed(self) -> bool:
        return (
            self.recursion_ok
            and self.factorization_ok
            and all(row["match"] for row in self.rows)
        )

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "recursion_ok": self.recursion_ok,
            "factorization_ok": self.factorization_ok,
            "passed": self.passed,
        }


def catalan_theorem_check(r_max: int, n_budget: int) -> CatalanReport:
    """Check computed coefficients against the Catalan product formula, the
    two-term recursion symbolically for r <= 20, and the factorization
    property on computed values."""
    report = CatalanReport()
    computed: dict[Partition, int] = {}
    for r in range(1, r_max + 1):
        n = min(3 * r, n_budget)
        if n < 2 * r + 1:
            continue
        coords = a_coefficients(r, n).coords
        for lam, c in sorted(coords.items()):
            computed[lam] = c
            report.rows.append(
                {
                    "lambda": lam.to_json(),
                    "computed_A": c,
                    "formula_A": formula_a(lam),
                    "match": c == formula_a(lam),
                }
            )
    # recursion on formula values: A_2 = -1, A_2r = 2 A_{2r-2} - sum A_{(2r-2-2s, 2s)}
    for r in range(2, 21):
        rhs = 2 * formula_a(Partition([2 * r - 2]))
        for s in range(1, r - 1):
            rhs -= formula_a(Partition([2 * r - 2 - 2 * s])) * formula_a(
                Partition([2 * s])
            )
        if formula_a(Partition([2 * r])) != rhs:
            report.recursion_ok = False
    # factorization on computed multi-part values
    for lam, c in computed.items():
        if lam.length > 1:
            prod = 1
            for part in lam.parts:
                prod *= computed.get(Partition([part]), formula_a(Partition([part])))
            if c != prod:
                report.factorization_ok = False
    return report


def center_generation_check(n: int) -> bool:
    """Whether the elementary symmetric functions of the squared JM elements
    (plus the identity) span the whole even center at degree n, by exact
    rational row reduction in class-sum coordinates."""
    if n > 7:
        raise ResourceCapError("full-center linear algebra is capped at n = 7")
    basis = even_partitions_fitting(n)
    index = {lam: i for i, lam in enumerate(basis)}
    dim = len(basis)

    tables: dict[tuple[int, int], dict[int, int]] = {}
    for i, lam in enumerate(basis):
        for j, mu in enumerate(basis):
            if j < i:
                continue
            entries = structure_constants(lam, mu, n, SPIN).entries
            row = {index[nu]: c for nu, c in entries.items()}
            tables[(i, j)] = row
            tables[(j, i)] = row

    def coord_mul(u: list[Fraction], v: list[Fraction]) -> list[Fraction]:
        out = [Fraction(0)] * dim
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0:
                    continue
                for k, c in tables[(i, j)].items():
                    out[k] += a * b * c
        return out

    def coords_of(el: AlgebraElement) -> list[Fraction]:
        cs = decompose_central(el)
        out = [Fraction(0)] * dim
        for lam, c in cs.items():
            out[index[lam]] = Fraction(c)
        return out

    # row-reduced span, extended until it closes under multiplication
    rows: list[list[Fraction]] = []

    def reduce(vec: list[Fraction]) -> list[Fraction]:
        v = list(vec)
        for row in rows:
            lead = next(i for i, x in enumerate(row) if x != 0)
            if v[lead] != 0:
                f = v[lead] / row[lead]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def insert(vec: list[Fraction]) -> bool:
        v = reduce(vec)
        if all(x == 0 for x in v):
            return False
        rows.append(v)
        rows.sort(key=lambda r: next(i for i, x in enumerate(r) if x != 0))
        return True

    ident = [Fraction(0)] * dim
    ident[index[Partition([])]] = Fraction(1)
    pool = [ident]
    for r in range(1, n + 1):
        pool.append(coords_of(elementary_jm(r, n)))
    for v in pool:
        insert(v)
    changed = True
    while changed and len(rows) < dim:
        changed = False
        current = [list(r) for r in rows]
        for u in current:
            for v in current:
                if insert(coord_mul(u, v)):
                    changed = True
    return len(rows) == dim
