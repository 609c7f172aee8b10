"""Dense univariate polynomials over Q, as coefficient lists (ascending powers)."""
from __future__ import annotations

from fractions import Fraction

Poly = list[Fraction]


def trim(p: Poly) -> Poly:
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def padd(p: Poly, q: Poly) -> Poly:
    out = [Fraction(0)] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def pscale(p: Poly, c) -> Poly:
    c = Fraction(c)
    return trim([c * x for x in p])


def pmul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def ppow(p: Poly, k: int) -> Poly:
    out: Poly = [Fraction(1)]
    for _ in range(k):
        out = pmul(out, p)
    return out


def peval(p: Poly, x) -> Fraction:
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def pderiv(p: Poly) -> Poly:
    return trim([i * c for i, c in enumerate(p)][1:])


def peq(p: Poly, q: Poly) -> bool:
    return trim(list(p)) == trim(list(q))
