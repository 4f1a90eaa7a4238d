"""Brute-force validator: exact unitary dynamics of a discretized bath.

The continuum bath is replaced by M discrete modes on [0, omega_max] with
couplings g_i = sqrt(kappa(omega_i) w_i) (w_i = quadrature weights), and
the qubit + bath is evolved exactly in the zero-temperature
single-excitation sector:

    without ancilla:  basis {|up, vac>, |down, 1_i>},  dim M + 1
    with ancilla:     + {|M, 1_i>} (degenerate with |down, 1_i>),
                      coupled by K(|down><M| + h.c.),  dim 2M + 1

A single dense symmetric eigendecomposition per model gives the survival
amplitude <up,vac| e^{-iHt} |up,vac> at arbitrary t by spectral
synthesis.  Control protocols:

* Zeno: projecting onto |up> leaves |up, vac> invariant in this sector,
  so N nonselective measurement cycles give exactly P_N = P_1(tau)^N.
* kicks: the 2pi pulse between |down> and |M> acts as +1 on the |up>
  block and -1 on the down/M blocks; cycles alternate e^{-iH tau} with
  that sign flip (N even).
* continuous coupling: plain evolution of the K != 0 ancilla model.

Effective rates come from a least-squares fit of -log P versus t inside a
window between the bath correlation time and the recurrence time
(~ 2 pi / max mode spacing).  Analytic rates are second order in g, the
oracle is exact, so comparisons carry O(g^2) relative slack; the
reference configuration uses g = 0.1, Omega = 0.2 W.

Limitation (by design): zero temperature only.  A thermal oracle needs
multi-excitation sectors of exponential dimension; thermal dressing is
validated analytically in the spectral module instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.linalg import eigh

from .errors import (DomainError, InsufficientModes, NonPositiveProbability,
                     OddN, RecurrenceWindowExceeded, WindowTooShort)
from .spectral import FormFactor, bare_density

__all__ = [
    "LINEAR",
    "GAUSS_LEGENDRE",
    "DiscretizedBath",
    "SingleExcitationModel",
    "DecayFit",
    "build_bath",
    "free_survival",
    "zeno_survival",
    "zeno_effective_rate",
    "kick_survival",
    "kick_survival_trace",
    "continuous_survival",
    "fit_decay_rate",
]

LINEAR = "linear"
GAUSS_LEGENDRE = "gauss-legendre"


@dataclass(frozen=True)
class DiscretizedBath:
    """Discrete modes omega_i (strictly increasing) with couplings g_i."""

    omegas: np.ndarray
    couplings: np.ndarray
    form_factor: FormFactor
    omega_max: float
    scheme: str

    def __post_init__(self):
        om = np.asarray(self.omegas, dtype=float)
        gi = np.asarray(self.couplings, dtype=float)
        if om.ndim != 1 or om.shape != gi.shape or om.size < 2:
            raise DomainError("need 1-d omegas/couplings of equal length >= 2")
        if not np.all(np.diff(om) > 0):
            raise DomainError("mode frequencies must be strictly increasing")
        om.setflags(write=False)
        gi.setflags(write=False)
        object.__setattr__(self, "omegas", om)
        object.__setattr__(self, "couplings", gi)

    @property
    def n_modes(self) -> int:
        return self.omegas.size

    @property
    def recurrence_time(self) -> float:
        """~ 2 pi over the largest mode spacing."""
        return 2.0 * math.pi / float(np.max(np.diff(self.omegas)))

    @property
    def coupling_sum_rule(self) -> float:
        """sum g_i^2, to be compared with int_0^omega_max kappa."""
        return float(np.sum(self.couplings ** 2))


def build_bath(ff: FormFactor, omega_max: float, M: int,
               scheme: str = GAUSS_LEGENDRE,
               required_span: float | None = None) -> DiscretizedBath:
    """Discretize ``ff`` into M modes on [0, omega_max].

    ``required_span``, when given, asserts that the recurrence time
    exceeds the planned simulation span (InsufficientModes otherwise).
    """
    if not omega_max > 0:
        raise DomainError("omega_max must be positive")
    if M < 2:
        raise DomainError("need at least 2 modes")
    if scheme == LINEAR:
        step = omega_max / M
        om = (np.arange(M) + 0.5) * step
        wq = np.full(M, step)
    elif scheme == GAUSS_LEGENDRE:
        x, w = leggauss(M)
        om = 0.5 * omega_max * (x + 1.0)
        wq = 0.5 * omega_max * w
    else:
        raise DomainError(f"unknown scheme {scheme!r}")
    gi = np.sqrt(bare_density(ff, om) * wq)
    bath = DiscretizedBath(om, gi, ff, float(omega_max), scheme)
    if required_span is not None and bath.recurrence_time < required_span:
        raise InsufficientModes(
            f"recurrence time {bath.recurrence_time:.1f} below requested "
            f"span {required_span:.1f}; increase M")
    return bath


@dataclass(frozen=True)
class SingleExcitationModel:
    """Eigendecomposed single-excitation Hamiltonian (optionally + ancilla)."""

    bath: DiscretizedBath
    omega0: float
    K: float | None                 # None: no ancilla block
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @classmethod
    def qubit(cls, bath: DiscretizedBath, omega0: float) -> "SingleExcitationModel":
        """dim M+1 model: {|up, vac>, |down, 1_i>}."""
        if not omega0 > 0:
            raise DomainError("omega0 must be positive")
        M = bath.n_modes
        H = np.zeros((M + 1, M + 1))
        H[0, 0] = 0.5 * omega0
        idx = np.arange(1, M + 1)
        H[idx, idx] = -0.5 * omega0 + bath.omegas
        H[0, 1:] = bath.couplings
        H[1:, 0] = bath.couplings
        evals, evecs = eigh(H)
        return cls(bath, omega0, None, evals, evecs)

    @classmethod
    def with_ancilla(cls, bath: DiscretizedBath, omega0: float,
                     K: float) -> "SingleExcitationModel":
        """dim 2M+1 model: {|up, vac>, |down, 1_i>, |M, 1_i>}."""
        if not omega0 > 0:
            raise DomainError("omega0 must be positive")
        if K < 0:
            raise DomainError("K must be nonnegative")
        M = bath.n_modes
        d = 2 * M + 1
        H = np.zeros((d, d))
        H[0, 0] = 0.5 * omega0
        idx = np.arange(1, M + 1)
        H[idx, idx] = -0.5 * omega0 + bath.omegas
        H[idx + M, idx + M] = -0.5 * omega0 + bath.omegas
        H[0, idx] = bath.couplings
        H[idx, 0] = bath.couplings
        H[idx, idx + M] = K
        H[idx + M, idx] = K
        evals, evecs = eigh(H)
        return cls(bath, omega0, float(K), evals, evecs)

    @property
    def has_ancilla(self) -> bool:
        return self.K is not None

    @property
    def recurrence_time(self) -> float:
        return self.bath.recurrence_time

    def hamiltonian(self) -> np.ndarray:
        ev, V = self.eigenvalues, self.eigenvectors
        return (V * ev) @ V.T


def _check_span(model: SingleExcitationModel, t_max: float):
    if t_max > model.recurrence_time:
        raise RecurrenceWindowExceeded(
            f"t = {t_max:.1f} exceeds the recurrence time "
            f"{model.recurrence_time:.1f}")


def free_survival(model: SingleExcitationModel, t):
    """P(t) = |<up,vac| e^{-iHt} |up,vac>|^2 (scalar or array t)."""
    tt = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(tt < 0):
        raise DomainError("t must be nonnegative")
    _check_span(model, float(np.max(tt)))
    weights = model.eigenvectors[0, :] ** 2
    amp = np.exp(-1j * np.outer(tt, model.eigenvalues)) @ weights
    P = np.abs(amp) ** 2
    return float(P[0]) if np.ndim(t) == 0 else P


def zeno_survival(model: SingleExcitationModel, tau: float, N: int) -> float:
    """Survival after N projective-measurement cycles: P_1(tau)^N.

    Exact in the single-excitation sector: the nonselective projection
    onto |up> collapses the surviving branch back to |up, vac>.
    """
    if not tau > 0:
        raise DomainError("tau must be positive")
    if N < 1:
        raise DomainError("N must be at least 1")
    return float(free_survival(model, tau)) ** N


def zeno_effective_rate(model: SingleExcitationModel, tau: float) -> float:
    """-log P_1(tau) / tau, the per-cycle effective decay rate."""
    p1 = free_survival(model, tau)
    if p1 <= 0.0:
        raise NonPositiveProbability("single-cycle survival vanished")
    return -math.log(p1) / tau


def _kick_signs(model: SingleExcitationModel) -> np.ndarray:
    s = np.full(model.eigenvalues.size, -1.0)
    s[0] = 1.0
    return s


def kick_survival_trace(model: SingleExcitationModel, tau: float,
                        N: int) -> tuple[np.ndarray, np.ndarray]:
    """(t_k, P_k) after each of N kick cycles (kick after each e^{-iH tau}).

    The kick flips the sign of the |down, 1_i> and |M, 1_i> components
    (spectral projections of the 2pi |down><M| pulse) and leaves |up>
    untouched; N must be even.
    """
    if not model.has_ancilla:
        raise DomainError("kick protocol requires the ancilla model")
    if N < 2 or N % 2 != 0:
        raise OddN("kick protocol requires an even number of cycles >= 2")
    if not tau > 0:
        raise DomainError("tau must be positive")
    _check_span(model, N * tau)
    V = model.eigenvectors
    phases = np.exp(-1j * model.eigenvalues * tau)
    signs = _kick_signs(model)
    psi = np.zeros(model.eigenvalues.size, dtype=complex)
    psi[0] = 1.0
    P = np.empty(N)
    for k in range(N):
        psi = V @ (phases * (V.T @ psi))
        psi *= signs
        P[k] = abs(psi[0]) ** 2
    t = (np.arange(N) + 1) * tau
    return t, P


def kick_survival(model: SingleExcitationModel, tau: float, N: int) -> float:
    """Survival probability after N kick cycles (N even)."""
    _, P = kick_survival_trace(model, tau, N)
    return float(P[-1])


def continuous_survival(model: SingleExcitationModel, K: float, t):
    """Survival under continuous coupling; model must carry that K."""
    if not model.has_ancilla or not math.isclose(model.K, K):
        raise DomainError("model was not built with the requested K")
    return free_survival(model, t)


@dataclass(frozen=True)
class DecayFit:
    rate: float
    fit_window: tuple[float, float]
    residual: float


def fit_decay_rate(samples: Sequence[tuple[float, float]]) -> DecayFit:
    """Least-squares slope of -log P versus t.

    Requires >= 10 samples, all with P > 0; the residual is the RMS
    deviation of -log P from the fitted line.
    """
    pts = np.asarray(list(samples), dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] < 10:
        raise WindowTooShort("need at least 10 (t, P) samples")
    t, P = pts[:, 0], pts[:, 1]
    if np.any(P <= 0.0):
        raise NonPositiveProbability("all survival probabilities must be > 0")
    y = -np.log(P)
    slope, intercept = np.polyfit(t, y, 1)
    resid = float(np.sqrt(np.mean((y - (slope * t + intercept)) ** 2)))
    return DecayFit(float(slope), (float(t.min()), float(t.max())), resid)
