"""Markovian qubit dynamics under the free or controlled generators.

The dissipator has three channels,

    L rho = gamma_0 (sz rho sz - rho)
          + gamma_down (sm rho sp - {sp sm, rho}/2)
          + gamma_up   (sp rho sm - {sm sp, rho}/2),

with gamma_down = 2 pi kappa_beta(Omega) (emission),
gamma_up = 2 pi kappa_beta(-Omega) (absorption) and
gamma_0 = 2 pi kappa_beta(0) (pure dephasing) in the free case; under a
control strategy the channel rates are evaluated at the controlled
analogues (sinc^2-weighted for Zeno, comb series for kicks, shifted
arguments for continuous coupling).  The KMS symmetry of the thermal
density makes the free generator detail-balanced, with the Gibbs state
p_up/p_down = e^{-beta Omega} as its fixed point.

Evolution uses the closed-form Bloch solution: longitudinal relaxation at
gamma_down + gamma_up toward the stationary inversion, transverse decay
at 2 gamma_0 + (gamma_down + gamma_up)/2 with precession Omega.

Basis convention: index 0 = |up>, index 1 = |down>; sz = diag(1, -1).

The strong-coupling control adds a monitor level |M> degenerate with
|down>; the dressed basis {|up>, |+>, |->} with splittings
(Omega/2, -Omega/2 + K, -Omega/2 - K) carries four decay channels whose
rates are the dressed_rates of the rates module.

Kick and continuous control of the *dephasing* channel is exposed with
the center frequency set to 0, but only the Zeno analogue is derived in
the source material; treat those two combinations as experimental.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidState, NoRelaxation
from .rates import (BangBangKick, ContinuousCoupling, ControlStrategy, Free,
                    ZenoMeasurement, dephasing_rate, dressed_rates,
                    kick_rate, zeno_rate)
from .spectral import ThermalSpectralDensity, thermal_density

__all__ = [
    "QubitDensityMatrix",
    "QubitGenerator",
    "ThreeLevelGenerator",
    "build_qubit_generator",
    "build_three_level_generator",
    "evolve",
    "stationary_state",
    "observables",
]

_HERM_TOL = 1e-12
_TRACE_TOL = 1e-12
_EIG_TOL = -1e-10


@dataclass(frozen=True)
class QubitDensityMatrix:
    """2x2 density matrix: Hermitian, unit trace, positive semidefinite."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (2, 2):
            raise InvalidState("density matrix must be 2x2")
        if np.max(np.abs(m - m.conj().T)) > _HERM_TOL:
            raise InvalidState("density matrix is not Hermitian")
        if abs(m.trace().real - 1.0) > _TRACE_TOL or abs(m.trace().imag) > _TRACE_TOL:
            raise InvalidState("density matrix trace differs from 1")
        if np.min(np.linalg.eigvalsh(m)) < _EIG_TOL:
            raise InvalidState("density matrix has a negative eigenvalue")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_bloch(cls, x: float, y: float, z: float) -> "QubitDensityMatrix":
        r = math.sqrt(x * x + y * y + z * z)
        if r > 1.0 + 1e-12:
            raise InvalidState("Bloch vector must satisfy |r| <= 1")
        return cls(0.5 * np.array([[1.0 + z, x - 1j * y],
                                   [x + 1j * y, 1.0 - z]]))

    @classmethod
    def excited(cls) -> "QubitDensityMatrix":
        return cls.from_bloch(0.0, 0.0, 1.0)

    @classmethod
    def ground(cls) -> "QubitDensityMatrix":
        return cls.from_bloch(0.0, 0.0, -1.0)

    @classmethod
    def maximally_mixed(cls) -> "QubitDensityMatrix":
        return cls.from_bloch(0.0, 0.0, 0.0)

    @property
    def p_up(self) -> float:
        return float(self.matrix[0, 0].real)

    @property
    def bloch(self) -> tuple[float, float, float]:
        m = self.matrix
        return (float(2.0 * m[1, 0].real), float(2.0 * m[1, 0].imag),
                float((m[0, 0] - m[1, 1]).real))

    @property
    def purity(self) -> float:
        x, y, z = self.bloch
        return 0.5 * (1.0 + x * x + y * y + z * z)


@dataclass(frozen=True)
class QubitGenerator:
    """Channel rates of the qubit Lindblad generator (all >= 0)."""

    omega0: float
    gamma_dephase: float
    gamma_down: float
    gamma_up: float
    beta: float = math.inf

    def __post_init__(self):
        if min(self.gamma_dephase, self.gamma_down, self.gamma_up) < 0:
            raise DomainError("channel rates must be nonnegative")

    @property
    def relaxation_rate(self) -> float:
        return self.gamma_down + self.gamma_up

    @property
    def transverse_rate(self) -> float:
        return 2.0 * self.gamma_dephase + 0.5 * self.relaxation_rate

    @property
    def detailed_balance(self) -> bool:
        """True iff gamma_up = e^{-beta omega0} gamma_down (1e-10 relative)."""
        if math.isinf(self.beta):
            return self.gamma_up == 0.0
        target = math.exp(-self.beta * self.omega0) * self.gamma_down
        scale = max(abs(target), abs(self.gamma_up), 1e-300)
        return abs(self.gamma_up - target) <= 1e-10 * scale


def build_qubit_generator(tsd_flip: ThermalSpectralDensity,
                          tsd_dephase: ThermalSpectralDensity | None,
                          omega0: float,
                          strategy: ControlStrategy = Free(),
                          j_max: int = 50) -> QubitGenerator:
    """Generator with the flip/dephasing channels set by ``strategy``.

    ``tsd_dephase=None`` means g_0 = 0 (pure spin-flip decoherence).
    """
    if not omega0 > 0:
        raise DomainError("omega0 must be positive")

    def channel(tsd: ThermalSpectralDensity, center: float) -> float:
        if isinstance(strategy, Free):
            if center == 0.0:
                return dephasing_rate(tsd)
            return 2.0 * math.pi * thermal_density(tsd, center)
        if isinstance(strategy, ZenoMeasurement):
            return zeno_rate(tsd, center, strategy.tau)
        if isinstance(strategy, BangBangKick):
            return kick_rate(tsd, center, strategy.tau, j_max=j_max).gamma
        if isinstance(strategy, ContinuousCoupling):
            K = strategy.K
            return math.pi * (thermal_density(tsd, center + K)
                              + thermal_density(tsd, center - K))
        raise DomainError(f"unknown strategy {strategy!r}")

    gamma_down = channel(tsd_flip, omega0)
    gamma_up = channel(tsd_flip, -omega0)
    gamma_0 = channel(tsd_dephase, 0.0) if tsd_dephase is not None else 0.0
    return QubitGenerator(omega0, gamma_0, gamma_down, gamma_up,
                          beta=tsd_flip.beta)


def evolve(rho0: QubitDensityMatrix, gen: QubitGenerator,
           t: float) -> QubitDensityMatrix:
    """Closed-form Bloch evolution of ``rho0`` for time ``t`` >= 0."""
    if t < 0:
        raise DomainError("evolution time must be nonnegative")
    x0, y0, z0 = rho0.bloch
    g1 = gen.relaxation_rate
    if g1 > 0:
        z_inf = (gen.gamma_up - gen.gamma_down) / g1
        z = z_inf + (z0 - z_inf) * math.exp(-g1 * t)
    else:
        z = z0
    decay = math.exp(-gen.transverse_rate * t)
    phase = gen.omega0 * t
    c, s = math.cos(phase), math.sin(phase)
    x = decay * (x0 * c - y0 * s)
    y = decay * (x0 * s + y0 * c)
    return QubitDensityMatrix.from_bloch(x, y, z)


def stationary_state(gen: QubitGenerator) -> QubitDensityMatrix:
    """Diagonal fixed point with p_up/p_down = gamma_up/gamma_down.

    Under detailed balance this is the Gibbs state
    p_up/p_down = e^{-beta omega0}.
    """
    g1 = gen.relaxation_rate
    if g1 <= 0:
        raise NoRelaxation("no population relaxation channel")
    p_up = gen.gamma_up / g1
    return QubitDensityMatrix.from_bloch(0.0, 0.0, 2.0 * p_up - 1.0)


def observables(rho: QubitDensityMatrix) -> dict:
    """Standard scalar readouts of a qubit state."""
    x, y, z = rho.bloch
    return {
        "p_up": rho.p_up,
        "bloch": (x, y, z),
        "purity": rho.purity,
        "coherence": float(abs(rho.matrix[0, 1])),
    }


# ---------------------------------------------------------------------------
# dressed three-level generator (continuous-coupling control)

_SQ2 = 1.0 / math.sqrt(2.0)
# dressed {|up>, |+>, |->}  ->  bare {|up>, |down>, |M>}
_DRESSED_TO_BARE = np.array([[1.0, 0.0, 0.0],
                             [0.0, _SQ2, _SQ2],
                             [0.0, _SQ2, -_SQ2]])


@dataclass(frozen=True)
class ThreeLevelGenerator:
    """Dressed-basis channels of the continuously monitored qubit.

    gamma_plus/minus drain |up> into |+>/|->; gamma_bar_plus/minus feed it
    back.  Level splittings are omega0/2 and -omega0/2 +/- K.
    """

    omega0: float
    K: float
    gamma_plus: float
    gamma_minus: float
    gamma_bar_plus: float
    gamma_bar_minus: float

    def __post_init__(self):
        if min(self.gamma_plus, self.gamma_minus,
               self.gamma_bar_plus, self.gamma_bar_minus) < 0:
            raise DomainError("channel rates must be nonnegative")

    @property
    def upper_level_rate(self) -> float:
        """Total decay rate out of |up>; equals continuous_rate(K)."""
        return 0.5 * (self.gamma_plus + self.gamma_minus)

    @property
    def upper_feed_rate(self) -> float:
        return 0.5 * (self.gamma_bar_plus + self.gamma_bar_minus)

    @property
    def splittings(self) -> tuple[float, float, float]:
        return (0.5 * self.omega0, -0.5 * self.omega0 + self.K,
                -0.5 * self.omega0 - self.K)

    @staticmethod
    def dressed_to_bare() -> np.ndarray:
        """Orthogonal map from {|up>, |+>, |->} to {|up>, |down>, |M>}."""
        return _DRESSED_TO_BARE.copy()


def build_three_level_generator(tsd: ThermalSpectralDensity, omega0: float,
                                K: float) -> ThreeLevelGenerator:
    if not omega0 > 0:
        raise DomainError("omega0 must be positive")
    r = dressed_rates(tsd, omega0, K)
    return ThreeLevelGenerator(omega0, K, r.gamma_plus, r.gamma_minus,
                               r.gamma_bar_plus, r.gamma_bar_minus)
