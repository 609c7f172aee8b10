"""Root systems and Weyl group combinatorics for the maximal compact subgroups.

Weights are tuples of Fractions in the e_i coordinates fixed by the classical
conventions: K = SO(2m+1) or SO(2m) for SO(n,1); K = U(n) (coordinates
e_1..e_n plus the central e_{n+1}) for SU(n,1); K = Sp(n) x Sp(1) (e_1..e_n
plus e_{n+1} for the Sp(1) factor) for Sp(n,1); K = Spin(9) for F4.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import prod

Weight = tuple[Fraction, ...]


def wt(*coords) -> Weight:
    """Build a weight tuple of exact Fractions."""
    return tuple(Fraction(c) for c in coords)


def w_add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def w_sub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def w_dot(a: Weight, b: Weight) -> Fraction:
    return sum((x * y for x, y in zip(a, b, strict=True)), Fraction(0))


def _e(i: int, dim: int, c=1) -> Weight:
    v = [Fraction(0)] * dim
    v[i] = Fraction(c)
    return tuple(v)


@dataclass(frozen=True)
class RootSystem:
    """Positive roots of K together with the signed-permutation Weyl action.

    kind selects the chamber combinatorics:
      "B"  -- signed permutations of all coordinates (SO(odd), Spin(9)),
      "D"  -- signed permutations with an even number of sign changes,
      "A"  -- permutations of the first `rank` coordinates, the trailing
              central coordinate is fixed (U(n)),
      "CC" -- signed permutations of the first `rank` coordinates and an
              independent sign flip on the last one (Sp(n) x Sp(1)).
    """

    kind: str
    rank: int  # number of permuted coordinates
    dim: int  # total coordinate length
    positive_roots: tuple[Weight, ...]
    simple_roots: tuple[Weight, ...]
    rho: Weight

    # -- chamber tests ------------------------------------------------------

    def is_dominant(self, w: Weight, strict: bool = False) -> bool:
        head = w[: self.rank]
        pairs = zip(head, head[1:])
        if self.kind == "A":
            return all((x > y if strict else x >= y) for x, y in pairs)
        if self.kind == "D":
            body = all((x > y if strict else x >= y) for x, y in zip(head, head[1:-1]))
            edge = head[-2] > abs(head[-1]) if strict else head[-2] >= abs(head[-1])
            return body and edge if self.rank >= 2 else True
        # B / CC: decreasing and nonnegative
        ok = all((x > y if strict else x >= y) for x, y in pairs)
        ok = ok and (head[-1] > 0 if strict else head[-1] >= 0)
        if self.kind == "CC":
            tail = w[-1]
            ok = ok and (tail > 0 if strict else tail >= 0)
        return ok

    # -- orbit normalization -------------------------------------------------

    def to_dominant_chamber(self, w: Weight):
        """Unique chamber representative of w with the sign of the Weyl element.

        Returns (dominant weight, sign) or (None, 0) when w lies on a wall,
        i.e. is fixed by some reflection.
        """
        head = list(w[: self.rank])
        tail = list(w[self.rank:])
        sign = 1
        if self.kind == "A":
            if len(set(head)) < len(head):
                return None, 0
            sign = _sort_sign(head)
            return tuple(sorted(head, reverse=True)) + tuple(tail), sign
        if self.kind == "CC":
            if tail[0] == 0:
                return None, 0
            if tail[0] < 0:
                tail[0] = -tail[0]
                sign = -sign
        if self.kind in ("B", "CC"):
            if any(x == 0 for x in head):
                return None, 0
            flips = sum(1 for x in head if x < 0)
            head = [abs(x) for x in head]
            if len(set(head)) < len(head):
                return None, 0
            sign *= (-1) ** flips * _sort_sign(head)
            return tuple(sorted(head, reverse=True)) + tuple(tail), sign
        # D: sign changes come in pairs; a zero coordinate absorbs parity
        absd = [abs(x) for x in head]
        if len(set(absd)) < len(absd):
            return None, 0
        flips = sum(1 for x in head if x < 0)
        out = sorted(absd, reverse=True)
        if flips % 2 == 1 and out[-1] != 0:
            out[-1] = -out[-1]
        return tuple(out) + tuple(tail), _sort_sign(absd)

    def dominant_rep(self, w: Weight) -> Weight:
        """The dominant element of the Weyl orbit of w (no sign tracking)."""
        head = list(w[: self.rank])
        tail = list(w[self.rank:])
        if self.kind == "A":
            return tuple(sorted(head, reverse=True)) + tuple(tail)
        if self.kind == "CC":
            tail[0] = abs(tail[0])
        if self.kind in ("B", "CC"):
            return tuple(sorted((abs(x) for x in head), reverse=True)) + tuple(tail)
        flips = sum(1 for x in head if x < 0)
        out = sorted((abs(x) for x in head), reverse=True)
        if flips % 2 == 1 and out[-1] != 0:
            out[-1] = -out[-1]
        return tuple(out) + tuple(tail)

    def reflect(self, w: Weight, alpha: Weight) -> Weight:
        c = 2 * w_dot(w, alpha) / w_dot(alpha, alpha)
        return tuple(x - c * a for x, a in zip(w, alpha))

    def orbit(self, w: Weight) -> set[Weight]:
        """Full Weyl orbit, generated by the simple reflections."""
        seen = {w}
        frontier = [w]
        while frontier:
            nxt = []
            for v in frontier:
                for s in self.simple_roots:
                    r = self.reflect(v, s)
                    if r not in seen:
                        seen.add(r)
                        nxt.append(r)
            frontier = nxt
        return seen

    # -- Weyl dimension formula ---------------------------------------------

    def weyl_dim(self, lam: Weight) -> int:
        if not self.is_dominant(lam):
            raise ValueError(f"weight {lam} is not dominant")
        lam_rho = w_add(lam, self.rho)
        num = prod(w_dot(lam_rho, a) for a in self.positive_roots)
        den = prod(w_dot(self.rho, a) for a in self.positive_roots)
        d = Fraction(num, den)
        if d.denominator != 1:
            raise ValueError(f"Weyl dimension of {lam} is not integral")
        return int(d)


def _sort_sign(values) -> int:
    """Parity of the permutation sorting `values` into decreasing order."""
    order = sorted(range(len(values)), key=lambda i: values[i], reverse=True)
    seen = [False] * len(order)
    sign = 1
    for start in range(len(order)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = order[i]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _half_sum(roots) -> Weight:
    dim = len(roots[0])
    acc = [Fraction(0)] * dim
    for r in roots:
        for i, c in enumerate(r):
            acc[i] += c
    return tuple(c / 2 for c in acc)


@lru_cache(maxsize=None)
def type_b(m: int) -> RootSystem:
    pos = [w_sub(_e(i, m), _e(j, m)) for i, j in combinations(range(m), 2)]
    pos += [w_add(_e(i, m), _e(j, m)) for i, j in combinations(range(m), 2)]
    pos += [_e(i, m) for i in range(m)]
    simple = [w_sub(_e(i, m), _e(i + 1, m)) for i in range(m - 1)] + [_e(m - 1, m)]
    return RootSystem("B", m, m, tuple(pos), tuple(simple), _half_sum(pos))


@lru_cache(maxsize=None)
def type_d(m: int) -> RootSystem:
    pos = [w_sub(_e(i, m), _e(j, m)) for i, j in combinations(range(m), 2)]
    pos += [w_add(_e(i, m), _e(j, m)) for i, j in combinations(range(m), 2)]
    simple = [w_sub(_e(i, m), _e(i + 1, m)) for i in range(m - 1)]
    simple.append(w_add(_e(m - 2, m), _e(m - 1, m)))
    return RootSystem("D", m, m, tuple(pos), tuple(simple), _half_sum(pos))


@lru_cache(maxsize=None)
def type_a_u(n: int) -> RootSystem:
    """U(n): type A_{n-1} on e_1..e_n with the inert central coordinate e_{n+1}."""
    dim = n + 1
    pos = [w_sub(_e(i, dim), _e(j, dim)) for i, j in combinations(range(n), 2)]
    simple = [w_sub(_e(i, dim), _e(i + 1, dim)) for i in range(n - 1)]
    return RootSystem("A", n, dim, tuple(pos), tuple(simple), _half_sum(pos))


@lru_cache(maxsize=None)
def type_c_c1(n: int) -> RootSystem:
    """Sp(n) x Sp(1): type C_n on e_1..e_n, type C_1 on e_{n+1}."""
    dim = n + 1
    pos = [w_sub(_e(i, dim), _e(j, dim)) for i, j in combinations(range(n), 2)]
    pos += [w_add(_e(i, dim), _e(j, dim)) for i, j in combinations(range(n), 2)]
    pos += [_e(i, dim, 2) for i in range(n)]
    pos.append(_e(n, dim, 2))
    simple = [w_sub(_e(i, dim), _e(i + 1, dim)) for i in range(n - 1)]
    simple.append(_e(n - 1, dim, 2))
    simple.append(_e(n, dim, 2))
    return RootSystem("CC", n, dim, tuple(pos), tuple(simple), _half_sum(pos))


def k_root_system(variant: str, n: int | None) -> RootSystem:
    """Root system of K for one family instance."""
    if variant == "SO":
        if n < 3:
            raise ValueError("SO(2,1) has abelian K; no root system")
        m = n // 2
        return type_b(m) if n % 2 == 1 else type_d(m)
    if variant == "SU":
        return type_a_u(n)
    if variant == "Sp":
        return type_c_c1(n)
    return type_b(4)
