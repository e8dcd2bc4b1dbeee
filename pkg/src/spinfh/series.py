"""Exact truncated formal series over the rationals.

A SeriesQ holds coefficients of x^val, x^(val+1), ..., x^(val+order-1) as
Fractions; val is 0 for ordinary power series and may differ for Laurent
use. All arithmetic truncates at a fixed order and everything is exact:
no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import InsufficientOrderError, ZeroIndexError
from .partitions import catalan


class SeriesQ:
    """Truncated formal series sum_i coeffs[i] x^(val+i) with exact rationals."""

    __slots__ = ("order", "val", "coeffs")

    def __init__(self, coeffs: Iterable, order: int | None = None, val: int = 0):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs)
        if order < 1:
            raise ValueError("order must be positive")
        if len(cs) < order:
            cs.extend([Fraction(0)] * (order - len(cs)))
        self.order = order
        self.val = val
        self.coeffs = tuple(cs[:order])

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(order: int) -> "SeriesQ":
        return SeriesQ([], order)

    @staticmethod
    def one(order: int) -> "SeriesQ":
        return SeriesQ([1], order)

    @staticmethod
    def x(order: int) -> "SeriesQ":
        return SeriesQ([0, 1], order)

    # -- coefficient access --------------------------------------------------

    def coefficient(self, n: int) -> Fraction:
        """Coefficient of x^n; raises if n lies beyond the truncation."""
        i = n - self.val
        if i >= self.order:
            raise InsufficientOrderError(
                f"coefficient of x^{n} not available at order {self.order} (val {self.val})"
            )
        if i < 0:
            return Fraction(0)
        return self.coeffs[i]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    # -- ring operations ----------------------------------------------------

    def _aligned(self, other: "SeriesQ"):
        val = min(self.val, other.val)
        top = min(self.val + self.order, other.val + other.order)
        order = top - val
        if order < 1:
            raise InsufficientOrderError("series truncations do not overlap")
        a = ([Fraction(0)] * (self.val - val) + list(self.coeffs))[:order]
        b = ([Fraction(0)] * (other.val - val) + list(other.coeffs))[:order]
        return val, order, a, b

    def __add__(self, other: "SeriesQ") -> "SeriesQ":
        val, order, a, b = self._aligned(other)
        return SeriesQ([x + y for x, y in zip(a, b)], order, val)

    def __neg__(self) -> "SeriesQ":
        return SeriesQ([-c for c in self.coeffs], self.order, self.val)

    def __sub__(self, other: "SeriesQ") -> "SeriesQ":
        return self + (-other)

    def __mul__(self, other: "SeriesQ") -> "SeriesQ":
        val = self.val + other.val
        order = min(self.order, other.order)
        out = [Fraction(0)] * order
        for i, a in enumerate(self.coeffs):
            if a == 0 or i >= order:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j >= order:
                    break
                if b != 0:
                    out[i + j] += a * b
        return SeriesQ(out, order, val)

    def scale(self, c) -> "SeriesQ":
        c = Fraction(c)
        return SeriesQ([c * a for a in self.coeffs], self.order, self.val)

    def __pow__(self, k: int) -> "SeriesQ":
        if k < 0:
            return self.inverse() ** (-k)
        result = SeriesQ.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "SeriesQ":
        """Multiplicative inverse; the leading stored coefficient must be nonzero."""
        if not self.coeffs or self.coeffs[0] == 0:
            raise ValueError("series is not invertible at its stated valuation")
        inv0 = 1 / self.coeffs[0]
        out = [inv0] + [Fraction(0)] * (self.order - 1)
        for k in range(1, self.order):
            s = Fraction(0)
            for j in range(1, min(k, len(self.coeffs) - 1) + 1):
                if self.coeffs[j] != 0:
                    s += self.coeffs[j] * out[k - j]
            out[k] = -inv0 * s
        return SeriesQ(out, self.order, -self.val)

    def derivative(self) -> "SeriesQ":
        """Termwise derivative, truncated at the same order."""
        val = self.val - 1
        out = [Fraction(0)] * self.order
        for i, c in enumerate(self.coeffs):
            e = self.val + i
            j = e - 1 - val
            if c != 0 and e != 0 and 0 <= j < self.order:
                out[j] = e * c
        return SeriesQ(out, self.order, val)

    def compose(self, inner: "SeriesQ") -> "SeriesQ":
        """self(inner); inner must have zero constant term and self must be a power series."""
        if self.val < 0:
            raise ValueError("cannot compose a Laurent series")
        if inner.val < 0 or inner.coefficient(0) != 0:
            raise ValueError("composition requires zero constant term inside")
        order = min(self.order, inner.order)
        result = SeriesQ.zero(order)
        power = SeriesQ.one(order)
        inner_t = SeriesQ(list(inner.coeffs), order, inner.val)
        for i in range(len(self.coeffs)):
            if self.val + i >= order:
                break
            if self.coeffs[i] != 0:
                result = result + power.scale(self.coeffs[i])
            power = power * inner_t
        return result

    def truncate(self, order: int) -> "SeriesQ":
        if order > self.order:
            raise InsufficientOrderError("cannot extend a truncated series")
        return SeriesQ(list(self.coeffs[:order]), order, self.val)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SeriesQ):
            return NotImplemented
        _, _, a, b = self._aligned(other)
        return a == b

    def __repr__(self) -> str:
        return f"SeriesQ({list(self.coeffs)}, order={self.order}, val={self.val})"

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs],
        }


def _catalan_coeffs(order: int) -> list[int]:
    coeffs = [0] * order
    if order > 1:
        coeffs[1] = 1
    for k in range(2, order):
        coeffs[k] = sum(coeffs[i] * coeffs[k - i] for i in range(1, k))
    return coeffs


def catalan_series(order: int) -> SeriesQ:
    """The Catalan generating series c with c = x + c^2, truncated.

    The coefficient of x^(n+1) is the (n+1)-st Catalan number, so the first
    coefficients are [0, 1, 1, 2, 5, 14, ...]. Solved by extracting
    coefficients from the quadratic relation, no square roots anywhere:
    each coefficient is the convolution of the earlier ones.
    """
    if order < 2:
        raise ValueError("order must be at least 2")
    return SeriesQ(_catalan_coeffs(order), order)


def lagrange_coefficient(phi: SeriesQ, f: SeriesQ, n: int) -> Fraction:
    """Coefficient of x^n in f(w) where w is the unique solution of w = x phi(w).

    Computed exactly as (1/n) [s^(n-1)] { f'(s) phi(s)^n }. phi must have a
    nonzero constant term and n must be nonzero.
    """
    if n == 0:
        raise ZeroIndexError("n = 0 is not covered by the inversion formula")
    if phi.val != 0 or phi.coeffs[0] == 0:
        raise ValueError("phi must have nonzero constant term")
    g = f.derivative() * (phi**n)
    return g.coefficient(n - 1) / n


def solve_fixed_point(phi: SeriesQ, order: int) -> SeriesQ:
    """The unique power series w with zero constant term solving w = x phi(w)."""
    if phi.val != 0 or phi.coeffs[0] == 0:
        raise ValueError("phi must have nonzero constant term")
    if phi.order < order:
        raise InsufficientOrderError("phi is truncated below the requested order")
    phi_t = phi.truncate(order) if phi.order > order else phi
    x = SeriesQ.x(order)
    w = SeriesQ.zero(order)
    for _ in range(order):
        w = x * phi_t.compose(w)
    return w


def elem_identity_value(r: int) -> int:
    """Coefficient of x^r in (1 - c(x))^(2r), by direct truncated exponentiation.

    All coefficients involved are integers, so the powering runs on plain
    integer lists. Callers compare the result with 2 * (-1)^r.
    """
    if r < 1:
        raise ValueError("r must be positive")
    order = 2 * r + 2
    u = [-x for x in _catalan_coeffs(order)]
    u[0] = 1

    def mul(a: list[int], b: list[int]) -> list[int]:
        out = [0] * order
        for i, ai in enumerate(a):
            if ai:
                top = order - i
                for j in range(min(top, len(b))):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return out

    result = [1] + [0] * (order - 1)
    base = u
    k = 2 * r
    while k:
        if k & 1:
            result = mul(result, base)
        base = mul(base, base)
        k >>= 1
    return result[r]


def catalan_series_matches(order: int) -> bool:
    """Check the series coefficients against the closed-form Catalan numbers."""
    c = catalan_series(order)
    return all(c.coefficient(k) == catalan(k) for k in range(1, order))
