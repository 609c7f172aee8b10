import math
from fractions import Fraction as Q

import numpy as np
import pytest

from rankone import so_model as M
from rankone.groups import SpectralParam, rho_H, so
from rankone.ktypes import label, weyl_dim
from rankone.poly import peval
from rankone.scalars import t_scalar


def SP(x):
    return SpectralParam(Q(x))


# -- exact layer ---------------------------------------------------------------


def test_sphere_moments():
    assert M.sphere_moment(3, (2, 0, 0)) == Q(1, 3)
    assert M.sphere_moment(2, (2, 2)) == Q(1, 8)
    assert M.sphere_moment(4, (1, 2, 0, 0)) == 0
    assert M.sphere_moment(3, (0, 0, 0)) == 1
    # rotation invariance: sum over coordinates of x_i^2 integrates to 1
    for n in (2, 3, 4, 5):
        idx = [0] * n
        total = Q(0)
        for i in range(n):
            idx[i] = 2
            total += M.sphere_moment(n, idx)
            idx[i] = 0
        assert total == 1
    with pytest.raises(ValueError):
        M.sphere_moment(3, (2, 0))


def test_zonal_polynomials():
    assert M.zonal_coeffs(3, 1) == [0, 1]  # Z_1 = x1
    assert peval(M.zonal_coeffs(5, 4), 1) == 1
    # n = 3 zonals are Legendre polynomials: P_2 = (3x^2-1)/2
    assert M.zonal_coeffs(3, 2) == [Q(-1, 2), 0, Q(3, 2)]


@pytest.mark.parametrize("n", (3, 4, 5))
def test_zonal_l2_norm_is_inverse_dimension(n):
    for k in range(9):
        assert M.zonal_l2_norm(n, k) == Q(1, weyl_dim(so(n), label(so(n), k)))


@pytest.mark.parametrize("n", (3, 4, 5, 6))
def test_harmonic_extension(n):
    for k in range(9):
        assert M.harmonic_extension_is_harmonic(n, k)


def test_reproducing_identity():
    ident = [[Q(1) if i == j else Q(0) for j in range(3)] for i in range(3)]
    assert M.reproducing_check(3, 2, ident)
    for k in range(7):
        assert M.reproducing_check(3, k, M.pythagorean_rotation(3, 0, 1))
    assert M.reproducing_check(4, 2, M.pythagorean_rotation(4, 0, 2))
    rng = np.random.default_rng(3)
    q, _ = np.linalg.qr(rng.normal(size=(4, 4)))
    if np.linalg.det(q) < 0:
        q[:, 0] *= -1
    assert M.reproducing_check(4, 2, q)


@pytest.mark.parametrize("n", range(2, 7))
def test_check_2rho(n):
    assert M.check_2rho(n)


# -- Lorentz model ---------------------------------------------------------------


def test_iwasawa_special_elements():
    n = 3
    k, s, u = M.iwasawa(np.eye(n + 1))
    assert s == 0 and np.allclose(u, 0) and np.allclose(k, np.eye(n + 1))
    k, s, u = M.iwasawa(M.boost(n, 0, 0.8))
    assert abs(s - 0.8) < 1e-12 and np.allclose(u, 0)
    g = M.nilpotent(n, np.array([0.3, -0.2]))
    k, s, u = M.iwasawa(g)
    assert abs(s) < 1e-12 and np.allclose(u, [0.3, -0.2]) and np.allclose(k, np.eye(4))


def test_iwasawa_rejects_non_lorentz():
    with pytest.raises(ValueError):
        M.iwasawa(2 * np.eye(4))


@pytest.mark.parametrize("n", (2, 3, 4, 5))
def test_iwasawa_roundtrip(n):
    assert M.iwasawa_roundtrip_error(n, samples=100, seed=11) <= 1e-9


def test_nilpotent_is_lorentz_and_unipotent():
    n = 4
    g = M.nilpotent(n, np.array([0.5, -1.2, 0.7]))
    assert M.is_lorentz(g)
    x = g - np.eye(n + 1)
    assert np.allclose(x @ x @ x, 0)


def test_poisson_delta_special_cases():
    n, k = 3, 2
    pts = M.sphere_points(n, 20, seed=2)
    z = [float(c) for c in M.zonal_coeffs(n, k)]
    base = np.array([M._feval(z, p[0]) for p in pts])
    # at the identity: the zonal function itself
    assert np.allclose(M.poisson_delta(n, k, SP(Q(1, 2)), np.eye(n + 1), pts), base)
    # on the horospherical subgroup: unchanged
    g = M.nilpotent(n, np.array([0.4, -0.1]))
    assert np.max(np.abs(M.poisson_delta(n, k, SP(Q(1, 2)), g, pts) - base)) < 1e-12
    # along exp(sH): scales by exp(s (mu+rho)(H))
    mu = Q(-1, 2)
    got = M.poisson_delta(n, k, SP(mu), M.boost(n, 0, 0.3), pts)
    assert np.allclose(got, math.exp(0.3 * float(mu + rho_H(so(n)))) * base)


GRID_MUS = (Q(-2), Q(-1), Q(-1, 2), Q(0), Q(1, 2), Q(1))


@pytest.mark.parametrize("n", (3, 4))
def test_intertwining_grid(n):
    worst = 0.0
    for k in range(4):
        for mu in GRID_MUS:
            rep = M.verify_intertwining(n, k, SpectralParam(mu),
                                        step_h=1e-4, num_points=50, seed=0)
            worst = max(worst, rep.residual, rep.gradient_h_residual)
    assert worst <= 1e-5


def test_intertwining_k0_explicit():
    # for the trivial type the combined gradient is (mu+rho)(H) Z_1 exactly
    rep = M.verify_intertwining(3, 0, SP(Q(1, 2)))
    assert rep.residual <= 1e-5
    assert abs(rep.coefficients[1] - 1.5) <= 1e-6  # (1/2 + 1) lambda(Y_0,Y_1)


def test_gradient_coefficients_match_scalars():
    n, k = 4, 2
    mu = SP(Q(1, 2))
    rep = M.verify_intertwining(n, k, mu)
    fam = so(n)
    for tgt in (k - 1, k + 1):
        want = float(t_scalar(fam, label(fam, k), label(fam, tgt), mu))
        assert abs(rep.coefficients[tgt] - want) <= 1e-6
    assert abs(rep.coefficients[k]) <= 1e-6  # no middle component


@pytest.mark.parametrize("n", (3, 4))
def test_exceptional_vanishing(n):
    for ell in range(3):
        assert M.exceptional_vanishing_residual(n, ell) <= 1e-5


def test_exceptional_scalar_is_exactly_zero():
    for n in (3, 4, 5):
        fam = so(n)
        for ell in range(4):
            mu = SpectralParam(-rho_H(fam) - ell)
            assert t_scalar(fam, label(fam, ell), label(fam, ell + 1), mu) == 0


def test_lambda_equals_exact_zonal_projection():
    # The recurrence coefficients equal dim(Y) <x1 Z_V, Z_Y>, computed with
    # exact sphere moments: an independent integral route to lambda(V, Y).
    from rankone.poly import pmul
    from rankone.spherical import lambda_scalar

    x1 = [Q(0), Q(1)]
    for n in (3, 4, 5, 6):
        fam = so(n)
        zs = {k: M.zonal_coeffs(n, k) for k in range(7)}
        for v in range(6):
            for y in range(7):
                integral = M._integrate_x1_poly(n, pmul(pmul(x1, zs[v]), zs[y]))
                lam = weyl_dim(fam, label(fam, y)) * integral
                assert lam == lambda_scalar(fam, label(fam, v), label(fam, y)), (n, v, y)
