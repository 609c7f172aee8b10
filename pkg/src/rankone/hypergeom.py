"""Terminating Gauss hypergeometric polynomials and their contiguous relations.

Only the polynomial regime is supported: F(a,b,c,z) with a or b a nonpositive
integer, expanded as an exact coefficient list in z.  The contiguous relations
are verified as polynomial identities, never numerically.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Poly, padd, pderiv, peq, peval, pmul, pscale, trim


def pochhammer(q, n: int) -> Fraction:
    """Rising factorial (q)_n = q (q+1) ... (q+n-1), with (q)_0 = 1."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    q = Fraction(q)
    out = Fraction(1)
    for i in range(n):
        out *= q + i
    return out


def _terminating_degree(a: Fraction, b: Fraction) -> int:
    degrees = [int(-x) for x in (a, b) if x.denominator == 1 and x <= 0]
    if not degrees:
        raise ValueError(f"F({a},{b},...) does not terminate: neither parameter is a nonpositive integer")
    return min(degrees)


@dataclass(frozen=True)
class F21Poly:
    """F(a,b,c,z) as a polynomial: coeffs[j] = (a)_j (b)_j / ((c)_j j!)."""

    a: Fraction
    b: Fraction
    c: Fraction
    coeffs: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def eval(self, z) -> Fraction:
        return peval(list(self.coeffs), z)

    def derivative(self) -> Poly:
        """Exact formal d/dz as a coefficient list."""
        return pderiv(list(self.coeffs))

    def poly(self) -> Poly:
        return list(self.coeffs)


def f21(a, b, c) -> F21Poly:
    """Build the terminating series; rejects parameters hitting a (c)_j zero."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    deg = _terminating_degree(a, b)
    if c.denominator == 1 and c <= 0 and c >= -deg + 1:
        raise ValueError(f"invalid c={c}: (c)_j vanishes before the series terminates")
    coeffs = [Fraction(1)]
    for j in range(deg):
        coeffs.append(coeffs[-1] * (a + j) * (b + j) / ((c + j) * (j + 1)))
    return F21Poly(a, b, c, tuple(coeffs))


_Z_MINUS_1: Poly = [Fraction(-1), Fraction(1)]
_Z: Poly = [Fraction(0), Fraction(1)]

RELATION_IDS = ("i", "ii", "iii", "iv", "v")


def check_contiguous(relation_id: str, a, b, c) -> bool:
    """Exact polynomial check of one contiguous relation of F(a,b,c,z).

    i:   d/dz F(a,b,c)            = (ab/c) F(a+1,b+1,c+1)
    ii:  (c-b-a) F(a,b,c)         = (c-b) F(a,b-1,c) + a (z-1) F(a+1,b,c)
    iii: (c-b-a) F(a,b,c)         = (c-a) F(a-1,b,c) + b (z-1) F(a,b+1,c)
    iv:  F(a,b+1,c) - F(a,b,c)    = (az/c) F(a+1,b+1,c+1)
    v:   F(a+1,b,c) - F(a,b,c)    = (bz/c) F(a+1,b+1,c+1)
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if relation_id == "i":
        lhs = f21(a, b, c).derivative()
        rhs = pscale(f21(a + 1, b + 1, c + 1).poly(), a * b / c)
        return peq(lhs, rhs)
    if relation_id == "ii":
        lhs = pscale(f21(a, b, c).poly(), c - b - a)
        rhs = padd(pscale(f21(a, b - 1, c).poly(), c - b),
                   pscale(pmul(_Z_MINUS_1, f21(a + 1, b, c).poly()), a))
        return peq(lhs, rhs)
    if relation_id == "iii":
        lhs = pscale(f21(a, b, c).poly(), c - b - a)
        rhs = padd(pscale(f21(a - 1, b, c).poly(), c - a),
                   pscale(pmul(_Z_MINUS_1, f21(a, b + 1, c).poly()), b))
        return peq(lhs, rhs)
    if relation_id == "iv":
        lhs = padd(f21(a, b + 1, c).poly(), pscale(f21(a, b, c).poly(), -1))
        rhs = pscale(pmul(_Z, f21(a + 1, b + 1, c + 1).poly()), a / c)
        return peq(lhs, rhs)
    if relation_id == "v":
        lhs = padd(f21(a + 1, b, c).poly(), pscale(f21(a, b, c).poly(), -1))
        rhs = pscale(pmul(_Z, f21(a + 1, b + 1, c + 1).poly()), b / c)
        return peq(lhs, rhs)
    raise ValueError(f"unknown relation {relation_id!r}, expected one of {RELATION_IDS}")


def f21_series_value(a, b, c, z, terms: int) -> Fraction:
    """Direct partial-sum evaluation, independent of the coefficient recursion."""
    a, b, c, z = map(Fraction, (a, b, c, z))
    total = Fraction(0)
    for j in range(terms):
        fact = pochhammer(1, j)
        total += pochhammer(a, j) * pochhammer(b, j) / (pochhammer(c, j) * fact) * z**j
    return total


__all__ = ["F21Poly", "f21", "pochhammer", "check_contiguous", "f21_series_value", "RELATION_IDS", "trim"]
