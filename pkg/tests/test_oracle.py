import math

import numpy as np
import pytest
from scipy.integrate import quad

import zenolab as z

G = 0.1
OMEGA = 0.2


def test_bath_sum_rule(oracle_ff):
    bath = z.build_bath(oracle_ff, 12.0 * oracle_ff.cutoff, 400)
    exact = quad(lambda w: z.bare_density(oracle_ff, w), 0.0,
                 12.0 * oracle_ff.cutoff, limit=200)[0]
    assert bath.coupling_sum_rule == pytest.approx(exact, rel=1e-6)


def test_bath_two_mode_toy_matches_hand_matrix(oracle_ff):
    bath = z.build_bath(oracle_ff, 2.0, 2, scheme=z.LINEAR)
    assert np.allclose(bath.omegas, [0.5, 1.5])
    g1 = math.sqrt(z.bare_density(oracle_ff, 0.5) * 1.0)
    g2 = math.sqrt(z.bare_density(oracle_ff, 1.5) * 1.0)
    model = z.SingleExcitationModel.qubit(bath, OMEGA)
    H_hand = np.array([[OMEGA / 2, g1, g2],
                       [g1, -OMEGA / 2 + 0.5, 0.0],
                       [g2, 0.0, -OMEGA / 2 + 1.5]])
    assert np.allclose(model.hamiltonian(), H_hand, atol=1e-14)


def test_bath_validation(oracle_ff):
    with pytest.raises(z.DomainError):
        z.build_bath(oracle_ff, -1.0, 100)
    with pytest.raises(z.DomainError):
        z.build_bath(oracle_ff, 6.0, 1)
    with pytest.raises(z.DomainError):
        z.build_bath(oracle_ff, 6.0, 100, scheme="chebyshev")
    with pytest.raises(z.InsufficientModes):
        z.build_bath(oracle_ff, 6.0, 50, required_span=1e4)


def _fit_free_rate(model, t_lo, t_hi, n=60):
    ts = np.linspace(t_lo, t_hi, n)
    P = z.free_survival(model, ts)
    return z.fit_decay_rate(list(zip(ts, P)))


def test_free_survival_examples(free_model, oracle_ff, oracle_tsd0):
    assert z.free_survival(free_model, 0.0) == pytest.approx(1.0, abs=1e-12)
    # short-time quadratic region: 1 - P = (t/tau_Z)^2 within 1% at t = 0.01 tau_Z
    tau_z = z.zeno_time(oracle_tsd0)
    t0 = 0.01 * tau_z
    assert 1.0 - z.free_survival(free_model, t0) == pytest.approx(
        (t0 / tau_z) ** 2, rel=0.01)
    # golden-rule window: fitted slope within 5%
    gamma = 2.0 * math.pi * z.bare_density(oracle_ff, OMEGA)
    fit = _fit_free_rate(free_model, 8.0, min(0.75 * free_model.recurrence_time,
                                              1.5 / gamma))
    assert fit.rate == pytest.approx(gamma, rel=0.05)


def test_linear_vs_gauss_legendre(oracle_ff):
    gamma = 2.0 * math.pi * z.bare_density(oracle_ff, OMEGA)
    rates = []
    for scheme in (z.LINEAR, z.GAUSS_LEGENDRE):
        bath = z.build_bath(oracle_ff, 12.0 * oracle_ff.cutoff, 400, scheme)
        model = z.SingleExcitationModel.qubit(bath, OMEGA)
        fit = _fit_free_rate(model, 8.0, min(0.75 * model.recurrence_time,
                                             1.5 / gamma))
        rates.append(fit.rate)
    assert rates[0] == pytest.approx(rates[1], rel=0.02)


def test_recurrence_guard(free_model):
    with pytest.raises(z.RecurrenceWindowExceeded):
        z.free_survival(free_model, 10.0 * free_model.recurrence_time)


def test_zeno_survival_examples(free_model, oracle_tsd0):
    tau = 0.5
    assert z.zeno_survival(free_model, tau, 1) == pytest.approx(
        z.free_survival(free_model, tau), rel=1e-14)
    assert z.zeno_survival(free_model, tau, 8) == pytest.approx(
        z.free_survival(free_model, tau) ** 8, rel=1e-12)
    # effective rate against the analytic sinc^2 integral (zero-T density)
    for tau in (0.1, 0.5, 2.0):
        eff = z.zeno_effective_rate(free_model, tau)
        assert eff == pytest.approx(z.zeno_rate(oracle_tsd0, OMEGA, tau),
                                    rel=0.10)
    # small-tau linear region: rate/tau -> 1/tau_Z^2 within 5%
    tau = 0.02
    assert z.zeno_effective_rate(free_model, tau) / tau == pytest.approx(
        z.zeno_time(oracle_tsd0) ** -2, rel=0.05)


def test_zeno_monotone_in_linear_region(free_model):
    taus = np.linspace(0.01, 0.1, 8)
    effs = [z.zeno_effective_rate(free_model, t) for t in taus]
    assert all(a < b for a, b in zip(effs, effs[1:]))


def test_kick_survival_against_series(kick_model, oracle_tsd0):
    tau, N = 0.5, 200
    t, P = z.kick_survival_trace(kick_model, tau, N)
    sel = (np.arange(N) % 2 == 1) & (t >= 0.25 * N * tau)
    fit = z.fit_decay_rate(list(zip(t[sel], P[sel])))
    target = z.kick_rate(oracle_tsd0, OMEGA, tau).gamma
    assert fit.rate == pytest.approx(target, rel=0.15)


def test_kick_suppression_side(kick_model, oracle_ff):
    # tau = 0.05: every comb line is beyond the spectral support
    gamma = 2.0 * math.pi * z.bare_density(oracle_ff, OMEGA)
    P = z.kick_survival(kick_model, 0.05, 200)
    eff = -math.log(P) / (200 * 0.05)
    assert eff < 0.01 * gamma


def test_kick_long_tau_approaches_free(kick_model):
    # kicks become irrelevant once tau is long on the comb scale pi/Omega
    tau, N = 100.0, 2
    P = z.kick_survival(kick_model, tau, N)
    eff = -math.log(P) / (N * tau)
    free = -math.log(z.free_survival(kick_model, N * tau)) / (N * tau)
    assert eff == pytest.approx(free, rel=0.10)


def test_kick_requires_even_n(kick_model):
    with pytest.raises(z.OddN):
        z.kick_survival(kick_model, 0.5, 3)


def test_kick_requires_ancilla(free_model):
    with pytest.raises(z.DomainError):
        z.kick_survival(free_model, 0.5, 2)


def test_continuous_survival(continuous_model_k5, kick_model, oracle_ff):
    # K = 0 ancilla model reproduces the free dynamics exactly
    ts = np.linspace(0.0, 50.0, 9)
    qubit_bath = z.build_bath(oracle_ff, kick_model.bath.omega_max,
                              kick_model.bath.n_modes)
    qubit = z.SingleExcitationModel.qubit(qubit_bath, OMEGA)
    P_anc = z.continuous_survival(kick_model, 0.0, ts)
    P_free = z.free_survival(qubit, ts)
    assert np.allclose(P_anc, P_free, atol=1e-12)
    # K = 5: fitted rate against pi kappa(Omega + K) within 15%
    model = continuous_model_k5
    an = math.pi * z.bare_density(oracle_ff, OMEGA + 5.0)
    ts = np.linspace(30.0, 0.8 * model.recurrence_time, 60)
    P = z.continuous_survival(model, 5.0, ts)
    fit = z.fit_decay_rate(list(zip(ts, P)))
    assert fit.rate == pytest.approx(an, rel=0.15)
    with pytest.raises(z.DomainError):
        z.continuous_survival(model, 1.0, 5.0)   # model carries K = 5


def test_continuous_monotone_suppression(oracle_ff):
    # beyond K* the fitted rate decreases with K
    bath = z.build_bath(oracle_ff, 12.0 * oracle_ff.cutoff, 400)
    fits = []
    for K in (2.0, 3.5, 5.0):
        model = z.SingleExcitationModel.with_ancilla(bath, OMEGA, K)
        ts = np.linspace(30.0, 0.75 * model.recurrence_time, 50)
        P = z.continuous_survival(model, K, ts)
        fits.append(z.fit_decay_rate(list(zip(ts, P))).rate)
    assert fits[0] > fits[1] > fits[2]


def test_unitarity(kick_model):
    # total probability over the full basis stays 1 through kick, free and
    # continuous evolution
    V = kick_model.eigenvectors
    phases = np.exp(-1j * kick_model.eigenvalues * 0.7)
    signs = np.full(kick_model.eigenvalues.size, -1.0)
    signs[0] = 1.0
    psi = np.zeros(kick_model.eigenvalues.size, dtype=complex)
    psi[0] = 1.0
    for _ in range(8):
        psi = signs * (V @ (phases * (V.T @ psi)))
        assert np.sum(np.abs(psi) ** 2) == pytest.approx(1.0, abs=1e-10)


def test_discretization_convergence_free(oracle_ff):
    gamma = 2.0 * math.pi * z.bare_density(oracle_ff, OMEGA)
    rates = []
    for M in (200, 400):
        bath = z.build_bath(oracle_ff, 12.0 * oracle_ff.cutoff, M)
        model = z.SingleExcitationModel.qubit(bath, OMEGA)
        t_hi = min(0.7 * model.recurrence_time, 1.5 / gamma)
        rates.append(_fit_free_rate(model, 8.0, t_hi).rate)
    assert abs(rates[1] - rates[0]) / rates[0] < 0.02


def test_discretization_convergence_kick(oracle_ff, kick_model):
    tau, N = 0.5, 200
    rates = []
    for model in (_half_kick_model(oracle_ff, kick_model), kick_model):
        t, P = z.kick_survival_trace(model, tau, N)
        sel = (np.arange(N) % 2 == 1) & (t >= 0.25 * N * tau)
        rates.append(z.fit_decay_rate(list(zip(t[sel], P[sel]))).rate)
    assert abs(rates[1] - rates[0]) / rates[0] < 0.02


def _half_kick_model(oracle_ff, kick_model):
    bath = z.build_bath(oracle_ff, kick_model.bath.omega_max,
                        kick_model.bath.n_modes // 2)
    return z.SingleExcitationModel.with_ancilla(bath, OMEGA, 0.0)


def test_discretization_convergence_continuous(oracle_ff, continuous_model_k5):
    K = 5.0
    rates = []
    for model in (z.SingleExcitationModel.with_ancilla(
            z.build_bath(oracle_ff, 12.0 * oracle_ff.cutoff, 300), OMEGA, K),
            continuous_model_k5):
        ts = np.linspace(30.0, 0.75 * model.recurrence_time, 50)
        P = z.continuous_survival(model, K, ts)
        rates.append(z.fit_decay_rate(list(zip(ts, P))).rate)
    assert abs(rates[1] - rates[0]) / rates[0] < 0.02


def test_fit_decay_rate():
    ts = np.linspace(1.0, 40.0, 25)
    fit = z.fit_decay_rate([(t, math.exp(-0.3 * t)) for t in ts])
    assert fit.rate == pytest.approx(0.3, abs=1e-10)
    assert fit.residual < 1e-12
    rng = np.random.default_rng(5)
    noisy = [(t, math.exp(-0.3 * t) * (1.0 + 0.01 * rng.normal()))
             for t in ts]
    assert z.fit_decay_rate(noisy).rate == pytest.approx(0.3, rel=0.03)
    flat = z.fit_decay_rate([(t, 1.0) for t in ts])
    assert abs(flat.rate) <= 1e-12
    with pytest.raises(z.WindowTooShort):
        z.fit_decay_rate([(1.0, 0.5)] * 5)
    with pytest.raises(z.NonPositiveProbability):
        z.fit_decay_rate([(t, -1.0) for t in ts])
