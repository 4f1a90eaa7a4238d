import math

import pytest

import zenolab as z

OMEGA = 0.01
BETA = 50.0


@pytest.fixture(scope="module")
def reports_exp(tsd_exp):
    return (z.find_tau_star_zeno(tsd_exp, OMEGA),
            z.find_tau_star_kick(tsd_exp, OMEGA),
            z.find_K_star(tsd_exp, OMEGA))


@pytest.fixture(scope="module")
def reports_poly(tsd_poly):
    return (z.find_tau_star_zeno(tsd_poly, OMEGA),
            z.find_tau_star_kick(tsd_poly, OMEGA),
            z.find_K_star(tsd_poly, OMEGA))


def test_zeno_root_near_linear_estimate(reports_exp, reports_poly):
    for rep in (reports_exp[0], reports_poly[0]):
        factor = rep.star_value / rep.closed_form_estimate
        assert 1.0 / 1.3 < factor < 1.3


def test_kick_root_vs_lambert_estimate(reports_exp):
    assert reports_exp[1].relative_gap < 0.15


def test_kick_root_vs_power_law_estimate(reports_poly):
    # measured gap ~0.17 in this regime: the omega^{-(2n-1)} asymptote
    # overshoots the exact density at pi/tau* ~ 2 Lambda
    assert reports_poly[1].relative_gap < 0.20


def test_k_star_vs_estimates(reports_exp, reports_poly):
    assert reports_exp[2].relative_gap < 0.15
    assert reports_poly[2].relative_gap < 0.20


def test_kick_root_exceeds_zeno_root(reports_exp, reports_poly):
    for zrep, krep, _ in (reports_exp, reports_poly):
        assert krep.star_value > zrep.star_value


def test_root_residuals(tsd_exp, reports_exp):
    zrep, krep, crep = reports_exp
    gamma = z.golden_rule_rate(tsd_exp, OMEGA)
    assert abs(z.zeno_rate(tsd_exp, OMEGA, zrep.star_value) / gamma - 1.0) <= 1e-6
    assert abs(z.kick_rate(tsd_exp, OMEGA, krep.star_value).gamma / gamma - 1.0) <= 1e-6
    assert abs(z.continuous_rate(tsd_exp, OMEGA, crep.star_value) / gamma - 1.0) <= 1e-6


def test_crossing_classification(tsd_exp, reports_exp):
    zrep, krep, crep = reports_exp
    gamma = z.golden_rule_rate(tsd_exp, OMEGA)
    # suppression below tau*, enhancement above (mirrored in K)
    assert z.zeno_rate(tsd_exp, OMEGA, 0.5 * zrep.star_value) < gamma
    assert z.zeno_rate(tsd_exp, OMEGA, 1.5 * zrep.star_value) > gamma
    assert z.kick_rate(tsd_exp, OMEGA, 0.5 * krep.star_value).gamma < gamma
    assert z.kick_rate(tsd_exp, OMEGA, 1.2 * krep.star_value).gamma > gamma
    assert z.continuous_rate(tsd_exp, OMEGA, 1.5 * crep.star_value) < gamma
    assert z.continuous_rate(tsd_exp, OMEGA, 0.7 * crep.star_value) > gamma


def test_coupling_invariance(tsd_exp, reports_exp):
    # gamma^Z/gamma is independent of g, so tau* is too
    scaled = z.FormFactor(z.EXPONENTIAL, g=3.0,
                          cutoff=tsd_exp.base.cutoff).thermal(BETA)
    rep = z.find_tau_star_zeno(scaled, OMEGA)
    assert rep.star_value == pytest.approx(reports_exp[0].star_value, rel=1e-9)


def test_scale_covariance(tsd_exp, reports_exp):
    c = 3.0
    scaled = z.FormFactor(z.EXPONENTIAL, g=1.0,
                          cutoff=c * tsd_exp.base.cutoff).thermal(BETA / c)
    rep_z = z.find_tau_star_zeno(scaled, c * OMEGA)
    assert rep_z.star_value == pytest.approx(reports_exp[0].star_value / c,
                                             rel=1e-8)
    rep_k = z.find_K_star(scaled, c * OMEGA)
    assert rep_k.star_value == pytest.approx(c * reports_exp[2].star_value,
                                             rel=1e-8)


def test_zero_temperature_zeno_root(tsd_exp_zero_t):
    # inverse-Zeno region exists at zero temperature for Omega well below
    # the density peak (at Omega = 0.2 W the ratio stays below 1: no root)
    rep = z.find_tau_star_zeno(tsd_exp_zero_t, 0.05)
    assert 0.0 < rep.star_value < 10.0
    with pytest.raises(z.NoCrossing):
        z.find_tau_star_zeno(tsd_exp_zero_t, 0.2)


def test_k_zero_endpoint_excluded(tsd_exp, reports_exp):
    crep = reports_exp[2]
    assert crep.star_value > 0.0
    assert all(k > 0.0 for k in crep.all_crossings)


def test_reports_carry_brackets_and_crossings(reports_exp):
    for rep in reports_exp:
        lo, hi = rep.bracket
        assert lo < rep.star_value < hi or math.isclose(lo, rep.star_value)
        assert rep.star_value in rep.all_crossings or rep.all_crossings


def test_quick_estimates_values():
    q = z.quick_estimates(2, 0.01, 1.0)
    # alpha_2 = pi/2: tau*_Z = 2 pi * 2 (pi/2)^2 * 0.01
    assert q.tau_star_zeno == pytest.approx(
        2.0 * math.pi * 2.0 * (math.pi / 2.0) ** 2 * 0.01, rel=1e-12)
    # exact value is pi^3/100 = 0.31006...
    assert q.tau_star_zeno == pytest.approx(0.3103, abs=5e-4)
    assert q.tau_star_zeno < 2.0 * math.pi
    assert q.K_star > 1.0


def test_quick_estimates_factor_against_roots(tsd_poly):
    # low-temperature asymptotic estimates: factor-level agreement only.
    # At beta Omega = 0.25 the thermal enhancement of gamma pushes the
    # Zeno entry to ~4.8x; everything else stays within ~3x.
    for omega0 in (0.005, 0.01, 0.05):
        q = z.quick_estimates(2, omega0, 1.0)
        rz = z.find_tau_star_zeno(tsd_poly, omega0).star_value
        rk = z.find_tau_star_kick(tsd_poly, omega0).star_value
        rK = z.find_K_star(tsd_poly, omega0).star_value
        assert 1.0 / 5.0 < rz / q.tau_star_zeno < 5.0
        assert 1.0 / 5.0 < rk / q.tau_star_kick < 5.0
        assert 1.0 / 5.0 < rK / q.K_star < 5.0


def test_quick_estimates_domain():
    with pytest.raises(z.DomainError):
        z.quick_estimates(1, 0.01, 1.0)
    with pytest.raises(z.DomainError):
        z.quick_estimates(2, -0.01, 1.0)
