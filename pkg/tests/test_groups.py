from fractions import Fraction as Q

import pytest

from rankone import groups
from rankone.groups import GroupFamily, SpectralParam, f4, so, sp, su

# One literal row per instance: (m_alpha, m_2alpha, rho_H, dim_p, sphere_dim).
STRUCTURE_TABLE = {
    ("SO", 2): (1, 0, Q(1, 2), 2, 1),
    ("SO", 3): (2, 0, Q(1), 3, 2),
    ("SO", 5): (4, 0, Q(2), 5, 4),
    ("SO", 10): (9, 0, Q(9, 2), 10, 9),
    ("SU", 2): (2, 1, Q(2), 4, 3),
    ("SU", 3): (4, 1, Q(3), 6, 5),
    ("SU", 8): (14, 1, Q(8), 16, 15),
    ("Sp", 2): (4, 3, Q(5), 8, 7),
    ("Sp", 6): (20, 3, Q(13), 24, 23),
    ("F4", None): (8, 7, Q(11), 16, 15),
}


@pytest.mark.parametrize("key,row", sorted(STRUCTURE_TABLE.items(), key=str))
def test_structural_table_rows(key, row):
    fam = GroupFamily(*key)
    sd = groups.structural_data(fam)
    assert (sd.m_alpha, sd.m_2alpha, sd.rho_H, sd.dim_p, sd.sphere_dim) == row


def test_family_validation():
    with pytest.raises(ValueError):
        GroupFamily("SO", 1)
    with pytest.raises(ValueError):
        GroupFamily("SU", 0)
    with pytest.raises(ValueError):
        GroupFamily("F4", 3)
    with pytest.raises(ValueError):
        GroupFamily("G2")
    assert str(sp(3)) == "Sp(3,1)"


def test_gamma_args_by_direct_substitution():
    # (m_alpha/2 + 1 + mu)/2 and (m_alpha/2 + m_2alpha + mu)/2
    assert groups.e_inverse_gamma_args(so(3), SpectralParam(Q(0))) == (Q(1), Q(1, 2))
    assert groups.e_inverse_gamma_args(su(2), SpectralParam(Q(-2))) == (Q(0), Q(0))
    assert groups.e_inverse_gamma_args(sp(2), SpectralParam(Q(-3))) == (Q(0), Q(1))
    assert groups.e_inverse_gamma_args(f4(), SpectralParam(Q(-5))) == (Q(0), Q(3))


@pytest.mark.parametrize("fam", [so(2), so(3), so(6), su(2), su(4), sp(2), sp(3), f4()])
def test_unitary_axis_and_positive_chamber_not_exceptional(fam):
    assert not groups.is_exceptional(fam, SpectralParam(Q(0)))
    rho = groups.rho_H(fam)
    a1, a2 = groups.e_inverse_gamma_args(fam, SpectralParam(rho))
    assert a1 > 0 and a2 > 0


def test_exceptional_closed_forms():
    assert [m.mu_H for m in groups.exceptional_params(so(3), 3)] == [-1, -2, -3]
    assert [m.mu_H for m in groups.exceptional_params(sp(2), 3)] == [-3, -5, -7]
    assert [m.mu_H for m in groups.exceptional_params(f4(), 3)] == [-5, -7, -9]
    assert [m.mu_H for m in groups.exceptional_params(su(2), 2)] == [-2, -4]
    assert [m.mu_H for m in groups.exceptional_params(so(4), 2)] == [Q(-3, 2), Q(-5, 2)]


def test_first_exceptional_is_minus_rho_for_so_su():
    for fam in (so(2), so(7), su(3)):
        assert groups.exceptional_mu(fam, 0).mu_H == -groups.rho_H(fam)


@pytest.mark.parametrize("fam", [so(n) for n in range(2, 11)]
                         + [su(n) for n in range(2, 9)]
                         + [sp(n) for n in range(2, 7)] + [f4()])
def test_dual_route_agreement(fam):
    bound = 60
    scanned = groups.exceptional_in_interval(fam, Q(-bound))
    closed = []
    ell = 0
    while True:
        mu = groups.exceptional_mu(fam, ell).mu_H
        if mu < -bound:
            break
        if mu <= 0:
            closed.append(mu)
        ell += 1
    assert sorted(scanned) == sorted(closed)
    for mu in closed:
        assert groups.is_exceptional(fam, SpectralParam(mu))


@pytest.mark.parametrize("fam", [so(4), su(3), sp(5), f4()])
def test_structural_invariants(fam):
    sd = groups.structural_data(fam)
    assert sd.rho_H == Q(sd.m_alpha, 2) + sd.m_2alpha
    assert 2 * sd.rho_H == sd.m_alpha * 1 + sd.m_2alpha * 2
    assert sd.dim_p == sd.m_alpha + sd.m_2alpha + 1
    assert sd.sphere_dim == sd.dim_p - 1


def test_exceptional_params_decreasing():
    for fam in (so(5), su(4), sp(3), f4()):
        vals = [m.mu_H for m in groups.exceptional_params(fam, 6)]
        assert all(a > b for a, b in zip(vals, vals[1:]))
