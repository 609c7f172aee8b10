import random
from fractions import Fraction as Q

import pytest

from rankone.hypergeom import (RELATION_IDS, check_contiguous, f21, f21_series_value,
                               pochhammer)
from rankone.poly import peq, pscale


def test_pochhammer():
    assert pochhammer(Q(5, 7), 0) == 1
    assert pochhammer(-2, 3) == 0
    assert pochhammer(Q(1, 2), 2) == Q(3, 4)
    assert pochhammer(3, 4) == 3 * 4 * 5 * 6


def test_f21_degenerate_series():
    assert f21(0, Q(7, 3), Q(1, 2)).coeffs == (1,)
    assert f21(-1, Q(3), Q(2)).coeffs == (1, Q(-3, 2))
    assert f21(-2, -1, 4).coeffs == (1, Q(1, 2))  # terminates at the shorter parameter


@pytest.mark.parametrize("a,b,c", [(-2, -1, 4), (-3, Q(5, 2), Q(7, 2)), (-5, -5, 3),
                                   (Q(9, 4), -4, Q(1, 2))])
def test_f21_matches_direct_series(a, b, c):
    poly = f21(a, b, c)
    for z in (Q(0), Q(1), Q(-1), Q(2, 3), Q(-7, 5)):
        assert poly.eval(z) == f21_series_value(a, b, c, z, poly.degree + 5)


def test_f21_rejects_bad_parameters():
    with pytest.raises(ValueError):
        f21(Q(1, 2), Q(1, 3), 1)  # does not terminate
    with pytest.raises(ValueError):
        f21(-3, 5, -1)  # (c)_j hits zero before termination
    f21(-3, 5, -4)  # pole beyond the degree is fine


def test_eval_and_derivative_examples():
    assert f21(0, Q(11, 3), 2).eval(Q(17, 5)) == 1
    assert f21(-1, 1, 2).eval(1) == Q(1, 2)
    b, c = Q(7, 2), Q(9, 2)
    lhs = f21(-2, b, c).derivative()
    rhs = pscale(f21(-1, b + 1, c + 1).poly(), -2 * b / c)
    assert peq(lhs, rhs)


def test_contiguous_examples():
    assert check_contiguous("ii", -3, -2, Q(7, 2))
    assert check_contiguous("iii", -2, -1, 3)
    # a = 0 degenerates relation iv to 0 = 0
    assert check_contiguous("iv", 0, -3, Q(5, 2))
    with pytest.raises(ValueError):
        check_contiguous("vi", -1, -1, 1)


def _seeded_triples(count=200, seed=20240817):
    rng = random.Random(seed)
    cs = [Q(j, 2) for j in range(1, 10)] + [Q(j) for j in range(1, 7)]
    triples = []
    while len(triples) < count:
        a = Q(-rng.randint(1, 8))
        if rng.random() < 0.5:
            b = Q(-rng.randint(0, 6))
        else:
            b = Q(rng.randint(-12, 12), rng.choice((1, 2, 3)))
        c = rng.choice(cs)
        triples.append((a, b, c))
    return triples


@pytest.mark.parametrize("relation", RELATION_IDS)
def test_all_relations_on_seeded_triples(relation):
    for a, b, c in _seeded_triples():
        assert check_contiguous(relation, a, b, c), (relation, a, b, c)


def test_derivative_matches_relation_everywhere_it_terminates():
    for a, b, c in _seeded_triples(60, seed=7):
        lhs = f21(a, b, c).derivative()
        rhs = pscale(f21(a + 1, b + 1, c + 1).poly(), a * b / c)
        assert peq(lhs, rhs)


def test_coefficients_are_pochhammer_ratios():
    a, b, c = Q(-4), Q(5, 3), Q(7, 2)
    poly = f21(a, b, c)
    for j, coeff in enumerate(poly.coeffs):
        expected = pochhammer(a, j) * pochhammer(b, j) / (pochhammer(c, j) * pochhammer(1, j))
        assert coeff == expected
    assert poly.coeffs[0] == 1
