"""Zeno <-> inverse-Zeno crossover scales tau* and K*.

tau* (K*) is the control period (coupling strength) at which the
controlled rate equals the free rate: suppression on one side,
enhancement on the other.  Roots are located by a log-spaced scan of the
ratio followed by bisection; the closed-form estimates are

    tau*_Z  ~ gamma tau_Z^2
    tau*_k  ~ -(pi/Lambda) / W_{-1}(-(pi/8) gamma / (g^2 Lambda))   (exp)
    tau*_k  ~ (pi/Lambda) [pi gamma / (8 (1-2^{-2n-1}) zeta(2n+1)
                           g^2 Lambda)]^{1/(2n-1)}                  (poly)
    K*      ~ -Lambda W_{-1}(-gamma / (pi g^2 Lambda))              (exp)
    K*      ~ Lambda [gamma / (pi g^2 Lambda)]^{-1/(2n-1)}          (poly)

with W_{-1} the lower real branch of Lambert's W.  The kick-rate ratio
oscillates at intermediate tau, so several crossings can exist; the
smallest crossing from the controlled side is canonical and every
detected crossing is reported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.optimize import brentq

from .errors import DomainError, NoCrossing
from .numerics import alpha_n, lambert_w_m1, zeta_odd
from .rates import continuous_rate, golden_rule_rate, kick_rate, zeno_rate
from .spectral import (EXPONENTIAL, POLYNOMIAL, ThermalSpectralDensity,
                       zeno_time)

__all__ = [
    "CrossoverReport",
    "QuickEstimates",
    "find_tau_star_zeno",
    "find_tau_star_kick",
    "find_K_star",
    "quick_estimates",
]

ROOT_FIND = "root-find"
CLOSED_FORM = "closed-form"

_SCAN_LO = 1e-4
_SCAN_HI = 1e4
_POINTS_PER_DECADE = 400


@dataclass(frozen=True)
class CrossoverReport:
    star_value: float
    method: str
    closed_form_estimate: float
    relative_gap: float
    bracket: tuple[float, float]
    all_crossings: tuple[float, ...] = field(default=())


def _scan_first_crossing(ratio_fn: Callable[[float], float],
                         grid: np.ndarray,
                         find_all: bool) -> tuple[float, tuple[float, float], list[float]]:
    """First sign change of ratio-1 along ``grid``, refined by bisection."""
    f = lambda x: ratio_fn(x) - 1.0
    prev_x = grid[0]
    prev_v = f(prev_x)
    crossings: list[float] = []
    first: tuple[float, float] | None = None
    for x in grid[1:]:
        v = f(x)
        if prev_v == 0.0:
            crossings.append(prev_x)
            if first is None:
                first = (prev_x, x)
        elif (prev_v < 0.0 <= v) or (prev_v > 0.0 >= v):
            a, b = sorted((prev_x, x))
            root = brentq(f, a, b, rtol=1e-13, maxiter=200)
            crossings.append(root)
            if first is None:
                first = (prev_x, x)
        prev_x, prev_v = x, v
        if first is not None and not find_all:
            break
    if first is None:
        raise NoCrossing("ratio - 1 does not change sign on the scan grid")
    return crossings[0], first, crossings


def _log_grid(lo: float, hi: float) -> np.ndarray:
    n = int(round(_POINTS_PER_DECADE * math.log10(hi / lo))) + 1
    return np.logspace(math.log10(lo), math.log10(hi), n)


def find_tau_star_zeno(tsd: ThermalSpectralDensity, omega0: float,
                       find_all: bool = False) -> CrossoverReport:
    """Smallest tau with gamma_Z(tau) = gamma; estimate gamma tau_Z^2."""
    gamma = golden_rule_rate(tsd, omega0)
    ratio = lambda t: zeno_rate(tsd, omega0, t) / gamma
    root, bracket, crossings = _scan_first_crossing(
        ratio, _log_grid(_SCAN_LO, _SCAN_HI), find_all)
    est = gamma * zeno_time(tsd) ** 2
    return CrossoverReport(root, ROOT_FIND, est, abs(root - est) / root,
                           bracket, tuple(crossings))


def find_tau_star_kick(tsd: ThermalSpectralDensity, omega0: float,
                       j_max: int = 50,
                       find_all: bool = False) -> CrossoverReport:
    """Smallest tau with gamma_k(tau) = gamma; Lambert-W / power-law estimate."""
    gamma = golden_rule_rate(tsd, omega0)
    ratio = lambda t: kick_rate(tsd, omega0, t, j_max=j_max).gamma / gamma
    root, bracket, crossings = _scan_first_crossing(
        ratio, _log_grid(_SCAN_LO, _SCAN_HI), find_all)
    ff = tsd.base
    g2lam = ff.g ** 2 * ff.cutoff
    if ff.family == EXPONENTIAL:
        arg = -(math.pi / 8.0) * gamma / g2lam
        est = -(math.pi / ff.cutoff) / lambert_w_m1(arg) if arg >= -math.exp(-1) \
            else math.nan
    else:
        n = ff.n
        denom = 8.0 * (1.0 - 2.0 ** (-2 * n - 1)) * zeta_odd(2 * n + 1)
        est = (math.pi / ff.cutoff) * (math.pi * gamma / (denom * g2lam)) \
            ** (1.0 / (2 * n - 1))
    gap = abs(root - est) / root if math.isfinite(est) else math.nan
    return CrossoverReport(root, ROOT_FIND, est, gap, bracket, tuple(crossings))


def find_K_star(tsd: ThermalSpectralDensity, omega0: float,
                find_all: bool = False) -> CrossoverReport:
    """Largest K with gamma_c(K) = gamma (smallest crossing in 1/K).

    The scan runs from the strong-coupling (suppressed) side downward;
    K = 0, where the ratio equals 1 identically, is excluded.
    """
    gamma = golden_rule_rate(tsd, omega0)
    ratio = lambda K: continuous_rate(tsd, omega0, K) / gamma
    grid = _log_grid(_SCAN_LO, _SCAN_HI)[::-1]
    root, bracket, crossings = _scan_first_crossing(ratio, grid, find_all)
    ff = tsd.base
    g2lam = ff.g ** 2 * ff.cutoff
    if ff.family == EXPONENTIAL:
        arg = -gamma / (math.pi * g2lam)
        est = -ff.cutoff * lambert_w_m1(arg) if arg >= -math.exp(-1) else math.nan
    else:
        est = ff.cutoff * (gamma / (math.pi * g2lam)) ** (-1.0 / (2 * ff.n - 1))
    gap = abs(root - est) / root if math.isfinite(est) else math.nan
    lo, hi = min(bracket), max(bracket)
    return CrossoverReport(root, ROOT_FIND, est, gap, (lo, hi),
                           tuple(sorted(crossings)))


@dataclass(frozen=True)
class QuickEstimates:
    tau_star_zeno: float
    tau_star_kick: float
    K_star: float


def quick_estimates(n: int, omega0: float, W: float) -> QuickEstimates:
    """Order-of-magnitude crossover scales for the Ohmic polynomial family.

    Low-temperature asymptotic forms built from the bandwidth and the
    coefficient alpha_n:

        tau*_Z ~ 2 pi/W * 2 (n-1) alpha_n^2 (Omega/W)
        tau*_k ~ 2 pi/W * (alpha_n/2) (alpha_n pi^2 Omega / 4W)^{1/(2n-1)}
        K*     ~ (W/alpha_n) (2W / (alpha_n Omega))^{1/(2n-1)}
    """
    if not omega0 > 0 or not W > 0:
        raise DomainError("omega0 and W must be positive")
    a = alpha_n(n)
    p = 1.0 / (2 * n - 1)
    tau_z = 2.0 * math.pi / W * (2.0 * (n - 1) * a * a * omega0 / W)
    tau_k = (2.0 * math.pi / W) * (a / 2.0) * (a * math.pi ** 2 * omega0
                                               / (4.0 * W)) ** p
    k_star = (W / a) * (2.0 * W / (a * omega0)) ** p
    return QuickEstimates(tau_z, tau_k, k_star)
