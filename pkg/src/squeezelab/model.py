"""Physical parameters and the linear drift model of the cavity field.

A collection of N two-level atoms in a lossy single-mode cavity, treated
beyond the rotating-wave approximation, reduces after adiabatic elimination
of the atoms to a linear Langevin system for the field mode:

    da/dt = Gamma a + Omega_P a^dag + F(t)

with Gamma = -(i[omega_c + 2 kappa] + gamma) and Omega_P = -2i kappa,
where kappa = U0 (alpha - 1), U0 = omega_0^2 / omega_eg is the collective
dispersive coupling and alpha parameterizes the diamagnetic (A^2) term.
All frequencies are quoted in units of the cavity decay rate gamma.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NegativeCoupling, NonPositiveFrequency

# Thresholds giving numeric meaning to "much less/greater than" for the
# regime classifier.  Advisory: the raw ratios are always reported.
MUCH_LESS = 0.1
MUCH_GREATER = 10.0


@dataclass(frozen=True)
class SystemParams:
    """Physical inputs, in units of the cavity decay rate gamma.

    Attributes
    ----------
    omega_c : cavity frequency (> 0)
    omega_eg : atomic transition frequency (> 0)
    omega_0 : collective dipole coupling (>= 0)
    gamma : cavity field decay rate (> 0; conventionally 1)
    alpha : dimensionless diamagnetic-term parameter (>= 0)
    """

    omega_c: float
    omega_eg: float
    omega_0: float
    gamma: float = 1.0
    alpha: float = 0.0

    def __post_init__(self):
        for name in ("omega_c", "omega_eg", "gamma"):
            v = getattr(self, name)
            if not math.isfinite(v) or v <= 0:
                raise NonPositiveFrequency(f"{name} must be positive and finite, got {v}")
        for name in ("omega_0", "alpha"):
            v = getattr(self, name)
            if not math.isfinite(v) or v < 0:
                raise NegativeCoupling(f"{name} must be non-negative and finite, got {v}")

    @property
    def u0(self) -> float:
        """Collective dispersive coupling omega_0^2 / omega_eg."""
        return self.omega_0**2 / self.omega_eg

    @property
    def kappa(self) -> float:
        """Effective parametric strength U0 (alpha - 1); the single knob
        driving both the cavity shift and the counter-rotating term."""
        return self.u0 * (self.alpha - 1.0)

    @property
    def d_coeff(self) -> float:
        """Diamagnetic-term coefficient D = alpha U0."""
        return self.alpha * self.u0


def build_params(omega_c: float, omega_eg: float, omega_0: float,
                 gamma: float = 1.0, alpha: float = 0.0) -> SystemParams:
    """Validate and assemble system parameters.

    Raises NonPositiveFrequency or NegativeCoupling for non-physical input.
    """
    return SystemParams(omega_c=float(omega_c), omega_eg=float(omega_eg),
                        omega_0=float(omega_0), gamma=float(gamma), alpha=float(alpha))


def params_from_u0(omega_c: float, u0: float, alpha: float = 0.0,
                   gamma: float = 1.0, omega_eg: float = 100.0) -> SystemParams:
    """Build params from the derived coupling U0 instead of omega_0.

    Convenience for sweeps and CLI input: omega_0 = sqrt(U0 * omega_eg).
    """
    if not math.isfinite(u0) or u0 < 0:
        raise NegativeCoupling(f"u0 must be non-negative and finite, got {u0}")
    return build_params(omega_c, omega_eg, math.sqrt(u0 * omega_eg), gamma, alpha)


@dataclass(frozen=True)
class EffectiveDrift:
    """Coefficients of the linear Langevin system for (a, a^dag).

    Gamma = -(i[omega_c + 2 kappa] + gamma); Re(Gamma) = -gamma exactly.
    Omega_P = -2i kappa; purely imaginary.
    """

    Gamma: complex
    Omega_P: complex

    @property
    def drift_matrix(self) -> np.ndarray:
        """2x2 complex drift matrix acting on (a, a^dag)."""
        return np.array([[self.Gamma, self.Omega_P],
                         [np.conj(self.Omega_P), np.conj(self.Gamma)]])

    @property
    def det(self) -> float:
        """Determinant Gamma Gamma* - |Omega_P|^2 = gamma^2 + omega_c^2 + 4 omega_c kappa."""
        return float((self.Gamma * np.conj(self.Gamma)).real - abs(self.Omega_P) ** 2)

    @property
    def trace(self) -> float:
        """Trace Gamma + Gamma* = -2 gamma."""
        return 2.0 * self.Gamma.real


def effective_drift(params: SystemParams) -> EffectiveDrift:
    """Drift coefficients after adiabatic elimination of the atoms.

    The cavity frequency is shifted to omega_c + 2 kappa by atomic
    back-action, and the counter-rotating terms leave the parametric
    coefficient Omega_P = -2i kappa.
    """
    kappa = params.kappa
    gamma_eff = -(1j * (params.omega_c + 2.0 * kappa) + params.gamma)
    return EffectiveDrift(Gamma=gamma_eff, Omega_P=-2j * kappa)


@dataclass(frozen=True)
class RegimeReport:
    """Coupling-regime classification with the ratios used.

    dispersive: omega_0 well below the detuning |omega_eg - omega_c|.
    adiabatic: omega_eg far from omega_c (either side), so the detuning is
        comparable to omega_eg + omega_c and counter-rotating terms matter.
    strong_coupling: omega_0 well above both the detuning and gamma.
    """

    dispersive: bool
    adiabatic: bool
    strong_coupling: bool
    ratios: dict[str, float]


def classify_regime(params: SystemParams) -> RegimeReport:
    """Classify the coupling regime with explicit numeric thresholds.

    "Much less" means ratio < 0.1 and "much greater" means ratio > 10; the
    ratios are reported so callers can apply their own cutoffs.  The
    collective coupling omega_0 (not the single-atom one) is compared
    against the detuning; with N atoms they differ by sqrt(N).
    """
    detuning = abs(params.omega_eg - params.omega_c)
    r_coupling = params.omega_0 / detuning if detuning > 0 else math.inf
    if params.omega_0 == 0 and detuning == 0:
        r_coupling = math.inf
    r_adiabatic = params.omega_eg / params.omega_c
    r_gamma = params.omega_0 / params.gamma
    dispersive = r_coupling < MUCH_LESS
    adiabatic = r_adiabatic < MUCH_LESS or r_adiabatic > MUCH_GREATER
    strong = r_coupling > MUCH_GREATER and r_gamma > MUCH_GREATER
    return RegimeReport(
        dispersive=dispersive,
        adiabatic=adiabatic,
        strong_coupling=strong,
        ratios={
            "omega_0_over_detuning": r_coupling,
            "omega_eg_over_omega_c": r_adiabatic,
            "omega_0_over_gamma": r_gamma,
        },
    )


@dataclass(frozen=True)
class StabilityReport:
    """Eigen-analysis of the drift matrix.

    stable iff both eigenvalue real parts are negative, which for this
    system (trace fixed at -2 gamma) reduces to det > 0.  The determinant
    is reported for phase-transition detection: it crosses zero at the
    superradiant instability.
    """

    eigenvalues: tuple[complex, complex]
    stable: bool
    det: float
    trace: float


def stability(params: SystemParams) -> StabilityReport:
    """Stability of the linear drift; marginal (det == 0) counts as unstable."""
    drift = effective_drift(params)
    det = drift.det
    gamma = params.gamma
    root = np.sqrt(complex(gamma * gamma - det))
    eig = (-gamma + root, -gamma - root)
    stable = bool(eig[0].real < 0 and eig[1].real < 0)
    return StabilityReport(eigenvalues=eig, stable=stable, det=det, trace=drift.trace)
