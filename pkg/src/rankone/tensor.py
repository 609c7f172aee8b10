"""Decomposition of Y (x) p* into irreducible K-types.

Two independent routes are provided: the signed-reflection algorithm on the
shifted highest weight (racah_speiser) and a brute-force character oracle
(Freudenthal weight multiplicities, convolution with the weights of p, greedy
peeling of dominant characters).  p and p* are identified as K-modules.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Optional

from .groups import GroupFamily, UnsupportedFamilyError, structural_data
from .ktypes import KTypeLabel, highest_weight, label_from_weight, weyl_dim
from .weyl import RootSystem, Weight, k_root_system, w_add, w_dot, w_sub, wt


class AlgorithmViolation(RuntimeError):
    """Signed multiplicities failed to cancel to a nonnegative decomposition."""


@dataclass(frozen=True)
class Summand:
    weight: Weight
    multiplicity: int
    m_spherical: bool
    label: Optional[KTypeLabel]  # set iff m_spherical


@dataclass(frozen=True)
class Decomposition:
    family: GroupFamily
    source: Weight
    summands: tuple[Summand, ...]

    def weights(self) -> set[Weight]:
        return {s.weight for s in self.summands}

    def spherical_labels(self) -> set[KTypeLabel]:
        return {s.label for s in self.summands if s.m_spherical}


def _check_supported(family: GroupFamily):
    if family.variant == "SO" and family.n == 2:
        raise UnsupportedFamilyError("tensor decompositions are not defined for SO(2,1)")


@lru_cache(maxsize=None)
def _p_weights(variant: str, n: Optional[int]) -> tuple[Weight, ...]:
    if variant == "SO":
        m = n // 2
        out = []
        for i in range(m):
            for s in (1, -1):
                out.append(tuple(Fraction(s) if j == i else Fraction(0) for j in range(m)))
        if n % 2 == 1:
            out.append(tuple(Fraction(0) for _ in range(m)))
        return tuple(out)
    if variant == "SU":
        out = []
        for i in range(n):
            for s in (1, -1):
                v = [Fraction(0)] * (n + 1)
                v[i], v[n] = Fraction(s), Fraction(-s)
                out.append(tuple(v))
        return tuple(out)
    if variant == "Sp":
        out = []
        for i in range(n):
            for s1 in (1, -1):
                for s2 in (1, -1):
                    v = [Fraction(0)] * (n + 1)
                    v[i], v[n] = Fraction(s1), Fraction(s2)
                    out.append(tuple(v))
        return tuple(out)
    half = Fraction(1, 2)
    return tuple(tuple(s * half for s in signs) for signs in product((1, -1), repeat=4))


def weights_of_p(family: GroupFamily) -> Counter:
    """Weight multiset of the isotropy representation p; all multiplicities are 1."""
    _check_supported(family)
    ws = _p_weights(family.variant, family.n)
    if len(ws) != structural_data(family).dim_p:
        raise AssertionError("weight count must equal dim p")
    return Counter(ws)


def _tag(family: GroupFamily, w: Weight, mult: int) -> Summand:
    lab = label_from_weight(family, w)
    return Summand(w, mult, lab is not None, lab)


def racah_speiser_weight(family: GroupFamily, lam: Weight) -> Decomposition:
    """Decompose V_lam (x) p by signed reflection of lam + rho_c + beta."""
    _check_supported(family)
    rs = k_root_system(family.variant, family.n)
    if not rs.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    acc: Counter = Counter()
    for beta in _p_weights(family.variant, family.n):
        xi = w_add(w_add(lam, rs.rho), beta)
        dom, sign = rs.to_dominant_chamber(xi)
        if dom is None:
            continue
        if not rs.is_dominant(dom, strict=True):
            raise AssertionError("regular orbit representative must be strictly dominant")
        acc[w_sub(dom, rs.rho)] += sign
    if any(m < 0 for m in acc.values()):
        raise AlgorithmViolation(f"negative multiplicity in {family} at {lam}: {acc}")
    summands = tuple(sorted((_tag(family, w, m) for w, m in acc.items() if m > 0),
                            key=lambda s: s.weight, reverse=True))
    return Decomposition(family, lam, summands)


def racah_speiser(family: GroupFamily, lab: KTypeLabel) -> Decomposition:
    return racah_speiser_weight(family, highest_weight(lab))


# -- character oracle ---------------------------------------------------------


def _simple_decompose(rs: RootSystem, v: Weight) -> Optional[tuple[int, ...]]:
    """Coordinates of v in the simple-root basis, if nonnegative integers."""
    mat = [list(s) for s in rs.simple_roots]
    # Solve sum_i c_i simple_i = v by Gaussian elimination over Q.
    rows = len(rs.simple_roots)
    aug = [[mat[i][j] for i in range(rows)] for j in range(rs.dim)]
    rhs = list(v)
    coeffs = _solve_exact(aug, rhs)
    if coeffs is None:
        return None
    if any(c.denominator != 1 or c < 0 for c in coeffs):
        return None
    return tuple(int(c) for c in coeffs)


def _solve_exact(a, b):
    """Least-structure exact solver for the (possibly tall) system a x = b."""
    rows, cols = len(a), len(a[0]) if a else 0
    m = [row[:] + [b[i]] for i, row in enumerate(a)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        m[r] = [x / m[r][c] for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = m[i][-1]
    for i in range(r, rows):
        if m[i][-1] != 0:
            return None
    # verify (handles rank-deficient corner cases exactly)
    for i in range(rows):
        if sum(a[i][j] * x[j] for j in range(cols)) != b[i]:
            return None
    return x


@lru_cache(maxsize=None)
def _dominant_multiplicities(variant: str, n: Optional[int], lam: Weight) -> tuple[tuple[Weight, int], ...]:
    """Multiplicities of the dominant weights of V_lam via Freudenthal's formula.

    Candidates are enumerated in the box lam - sum c_i alpha_i bounded by the
    simple-root coordinates of lam - w0(lam); multiplicities of non-dominant
    weights are looked up through their dominant orbit representative.
    """
    rs = k_root_system(variant, n)
    lowest = tuple(-x for x in rs.dominant_rep(tuple(-c for c in lam)))
    bounds = _simple_decompose(rs, w_sub(lam, lowest))
    if bounds is None:
        raise AssertionError("lam - w0(lam) must lie in the positive root cone")
    candidates: list[Weight] = []

    def _walk(i: int, current: Weight):
        if i == len(bounds):
            if rs.is_dominant(current) and w_dot(current, current) <= w_dot(lam, lam):
                candidates.append(current)
            return
        step = rs.simple_roots[i]
        for c in range(bounds[i] + 1):
            _walk(i + 1, current)
            current = w_sub(current, step)

    _walk(0, lam)
    lam_rho = w_add(lam, rs.rho)
    c_top = w_dot(lam_rho, lam_rho)
    candidates.sort(key=lambda w: w_dot(w, rs.rho), reverse=True)
    mult: dict[Weight, Fraction] = {lam: Fraction(1)}
    for w in candidates:
        if w == lam:
            continue
        w_rho = w_add(w, rs.rho)
        denom = c_top - w_dot(w_rho, w_rho)
        if denom <= 0:
            raise AssertionError("Freudenthal denominator must be positive below lam")
        total = Fraction(0)
        top_norm = w_dot(lam, lam)
        for alpha in rs.positive_roots:
            k = 1
            while True:
                up = w_add(w, tuple(k * a for a in alpha))
                if w_dot(up, up) > top_norm:
                    break  # every weight lies in the ||lam|| ball
                m_up = mult.get(rs.dominant_rep(up), Fraction(0))
                if m_up:
                    total += m_up * w_dot(up, alpha)
                k += 1
        m = 2 * total / denom
        if m.denominator != 1 or m < 0:
            raise AssertionError(f"non-integral Freudenthal multiplicity {m} at {w}")
        if m:
            mult[w] = m
    return tuple(sorted((w, int(m)) for w, m in mult.items() if m > 0))


@lru_cache(maxsize=None)
def _weight_multiplicities(variant: str, n: Optional[int], lam: Weight) -> tuple[tuple[Weight, int], ...]:
    """Full weight multiset of V_lam: Weyl orbits of the dominant multiplicities."""
    rs = k_root_system(variant, n)
    out: dict[Weight, int] = {}
    for w, m in _dominant_multiplicities(variant, n, lam):
        for v in rs.orbit(w):
            out[v] = m
    result = tuple(sorted(out.items()))
    if sum(m for _, m in result) != rs.weyl_dim(lam):
        raise AssertionError("weight multiplicities do not sum to the Weyl dimension")
    return result


def character_oracle(family: GroupFamily, lab: KTypeLabel, max_peel: int = 512) -> Decomposition:
    """Decompose by full character arithmetic; intended for small labels."""
    _check_supported(family)
    rs = k_root_system(family.variant, family.n)
    lam = highest_weight(lab)
    char: Counter = Counter()
    for w, m in _weight_multiplicities(family.variant, family.n, lam):
        for beta in _p_weights(family.variant, family.n):
            char[w_add(w, beta)] += m
    acc: Counter = Counter()
    # rho pairs strictly positively with any nonzero sum of positive roots, so
    # the (rho-pairing, lex) maximum is maximal in the dominance order.
    for _ in range(max_peel):
        support = +char
        if not support:
            break
        top = max(support, key=lambda w: (w_dot(w, rs.rho), w))
        if not rs.is_dominant(top):
            raise AlgorithmViolation(f"maximal residual weight {top} is not dominant")
        m = support[top]
        if m < 0:
            raise AlgorithmViolation("negative residual multiplicity while peeling")
        acc[top] += m
        for w, mw in _weight_multiplicities(family.variant, family.n, top):
            char[w] -= m * mw
    else:
        raise AlgorithmViolation("character peeling did not terminate")
    if any(v != 0 for v in char.values()):
        raise AlgorithmViolation("character did not peel to zero")
    summands = tuple(sorted((_tag(family, w, m) for w, m in acc.items() if m > 0),
                            key=lambda s: s.weight, reverse=True))
    return Decomposition(family, lam, summands)


def dimension_sum_check(family: GroupFamily, lab: KTypeLabel) -> bool:
    """Sum of summand dimensions equals dim p times the source dimension, exactly."""
    dec = racah_speiser(family, lab)
    total = sum(s.multiplicity * weyl_dim(family, s.weight) for s in dec.summands)
    return total == structural_data(family).dim_p * weyl_dim(family, lab)


def expected_summand_labels(family: GroupFamily, lab: KTypeLabel) -> set[Weight]:
    """Stated closed-form decomposition of Y (x) p*, as a set of highest weights.

    Equal-rank families (SU, Sp, F4): every dominant shift lam + beta by a
    weight beta of p occurs, each once.  SO(n,1): Y_{k-1} + Y_{k+1} plus, for
    k >= 1, the middle term -- Y_k itself when n = 3, the type with highest
    weight k e1 + e2 when n >= 5, and for n = 4 both chiral partners
    k e1 +- e2 (the last coordinate of rho_c vanishes for K = SO(4), so the
    reflection that removes the mirror for larger n is absent; the dimension
    count and the character oracle both confirm it).
    """
    _check_supported(family)
    rs = k_root_system(family.variant, family.n)
    lam = highest_weight(lab)
    out: set[Weight] = set()

    def push(w: Weight):
        if rs.is_dominant(w):
            out.add(w)

    if family.variant == "SO":
        k = lab.coords[0]
        m = family.n // 2
        push(wt(*([k - 1] + [0] * (m - 1))))
        push(wt(*([k + 1] + [0] * (m - 1))))
        if k >= 1:
            if family.n == 3:
                push(wt(k))
            else:
                push(wt(*([k, 1] + [0] * (m - 2))))
                if family.n == 4:
                    push(wt(k, -1))
    else:
        for beta in _p_weights(family.variant, family.n):
            push(w_add(lam, beta))
    return out


__all__ = [
    "Decomposition", "Summand", "AlgorithmViolation",
    "weights_of_p", "racah_speiser", "racah_speiser_weight",
    "character_oracle", "dimension_sum_check", "expected_summand_labels",
]
