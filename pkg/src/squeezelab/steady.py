"""Steady-state second moments, quadrature variances, and the critical coupling.

Two independent routes to the same moments:

* ``closed_form_moments`` evaluates the explicit steady-state expressions
  A1 = <a^2>, A2 = <a a^dag + a^dag a>, A3 = conj(A1).
* ``lyapunov_moments`` solves the 3x3 linear system obtained by setting the
  second-moment equations of motion to zero, using only the drift
  coefficients and the vacuum noise correlations <F(t) F^dag(t')> =
  2 gamma delta(t - t'), <F a^dag> = <a F^dag> = gamma.

The two agree to solver precision on every stable parameter set; the
Fock-space oracle adjudicates the operator-ordering conventions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _parallel
from .errors import EmptyRange, NonPositiveFrequency, SingularSystem, UnstableSystem
from .model import EffectiveDrift, SystemParams, effective_drift, params_from_u0


@dataclass(frozen=True)
class SecondMoments:
    """Steady-state second moments of the cavity field (first moments vanish).

    sym_number is the symmetrized occupation <a a^dag + a^dag a>, bounded
    below by 1 (vacuum).  ``source`` records which solver produced the
    values; ``stderr`` holds statistical errors for monte_carlo estimates.
    """

    a_sq: complex
    adag_sq: complex
    sym_number: float
    source: str
    stderr: dict[str, float] | None = field(default=None)

    @property
    def n_photon(self) -> float:
        return (self.sym_number - 1.0) / 2.0


@dataclass(frozen=True)
class QuadratureVariances:
    theta: float
    var_x1: float
    var_x2: float


def _require_stable(drift: EffectiveDrift) -> float:
    det = drift.det
    if det <= 0:
        raise UnstableSystem(
            f"drift determinant {det:.6g} <= 0: steady-state moments diverge")
    return det


def closed_form_moments(drift: EffectiveDrift) -> SecondMoments:
    """Closed-form steady-state moments.

    A1 = Omega_P Gamma* / (2 (|Omega_P|^2 - Gamma Gamma*))
    A2 = -Gamma Gamma* / (|Omega_P|^2 - Gamma Gamma*)
    """
    _require_stable(drift)
    g, op = drift.Gamma, drift.Omega_P
    gg = (g * np.conj(g)).real
    denom = abs(op) ** 2 - gg  # = -det, negative in the stable region
    a1 = op * np.conj(g) / (2.0 * denom)
    a2 = -gg / denom
    return SecondMoments(a_sq=complex(a1), adag_sq=complex(np.conj(a1)),
                         sym_number=float(a2), source="closed_form")


def lyapunov_moments(drift: EffectiveDrift, gamma: float) -> SecondMoments:
    """Moments from the stationary moment equations (independent solve).

    Setting d/dt of <a^2>, <a a^dag + a^dag a>, <a^dag^2> to zero gives

        2 Gamma A1 + Omega_P A2                      = 0
        2 Omega_P* A1 + (Gamma + Gamma*) A2 + 2 Omega_P A3 = -2 gamma
        Omega_P* A2 + 2 Gamma* A3                    = 0

    solved directly, without using the closed-form algebra.
    """
    _require_stable(drift)
    g, op = drift.Gamma, drift.Omega_P
    mat = np.array([
        [2.0 * g, op, 0.0],
        [2.0 * np.conj(op), g + np.conj(g), 2.0 * op],
        [0.0, np.conj(op), 2.0 * np.conj(g)],
    ], dtype=complex)
    rhs = np.array([0.0, -2.0 * gamma, 0.0], dtype=complex)
    try:
        a1, a2, a3 = np.linalg.solve(mat, rhs)
    except np.linalg.LinAlgError as exc:
        raise SingularSystem(f"moment system singular: {exc}") from exc
    return SecondMoments(a_sq=complex(a1), adag_sq=complex(a3),
                         sym_number=float(a2.real), source="lyapunov")


def quadrature_variances(moments: SecondMoments, theta: float = 0.0) -> QuadratureVariances:
    """Variances of X1 = (a e^{-i theta/2} + a^dag e^{i theta/2})/2 and the
    orthogonal X2, using <a> = 0 in the steady state."""
    a1, a3, a2 = moments.a_sq, moments.adag_sq, moments.sym_number
    cross = (np.exp(-1j * theta) * a1 + np.exp(1j * theta) * a3).real
    return QuadratureVariances(theta=theta,
                               var_x1=(a2 + cross) / 4.0,
                               var_x2=(a2 - cross) / 4.0)


def intracavity_photon_number(moments: SecondMoments) -> float:
    """Normal-ordered occupation <a^dag a> = (A2 - 1)/2."""
    return moments.n_photon


def photon_number_as_printed(params: SystemParams) -> float:
    """Literal steady-state photon-number expression, kept for comparison.

    Evaluates -(gamma^2 + (omega_c + 2 kappa)^2) / (omega_c^2 +
    4 omega_c kappa + gamma^2) exactly as written, which is negative
    wherever the system is stable; its magnitude equals A2 and it diverges
    at the same critical coupling.  No physical guarantees.
    """
    kappa = params.kappa
    num = params.gamma**2 + (params.omega_c + 2.0 * kappa) ** 2
    den = params.omega_c**2 + 4.0 * params.omega_c * kappa + params.gamma**2
    if den == 0:
        raise ZeroDivisionError("printed photon-number expression singular (det = 0)")
    return -num / den


@dataclass(frozen=True)
class CriticalCoupling:
    omega_crit: float
    u0_crit: float


def critical_coupling(omega_c: float, omega_eg: float, gamma: float = 1.0) -> CriticalCoupling:
    """Critical collective coupling of the superradiant transition (alpha = 0).

    Omega_c = sqrt(omega_eg (omega_c^2 + gamma^2) / (4 omega_c)), equivalently
    U0_c = (omega_c^2 + gamma^2) / (4 omega_c) where the drift determinant
    crosses zero.
    """
    for name, v in (("omega_c", omega_c), ("omega_eg", omega_eg), ("gamma", gamma)):
        if not math.isfinite(v) or v <= 0:
            raise NonPositiveFrequency(f"{name} must be positive and finite, got {v}")
    u0c = (omega_c**2 + gamma**2) / (4.0 * omega_c)
    return CriticalCoupling(omega_crit=math.sqrt(omega_eg * u0c), u0_crit=u0c)


def no_go_check(params: SystemParams) -> bool:
    """True iff the superradiant transition is forbidden at any coupling.

    For alpha > 1 the effective knob kappa = U0 (alpha - 1) is positive, the
    drift determinant stays positive for every U0, and no instability is
    reachable.  alpha == 1 is the degenerate no-transition case (kappa = 0
    identically, a passive cavity at any coupling).
    """
    return params.alpha >= 1.0


def critical_u0_bisect(omega_c: float, gamma: float = 1.0, alpha: float = 0.0,
                       bracket: tuple[float, float] = (0.0, 100.0),
                       tol: float = 1e-12) -> float | None:
    """Locate the critical U0 by bisection on the stability determinant.

    Returns None when the determinant does not change sign on the bracket
    (no transition; always the case for alpha >= 1).  Numerical cross-check
    for ``critical_coupling``.
    """

    def det(u0: float) -> float:
        kappa = u0 * (alpha - 1.0)
        return gamma**2 + omega_c**2 + 4.0 * omega_c * kappa

    lo, hi = bracket
    if det(lo) <= 0 or det(hi) >= 0:
        return None
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if det(mid) > 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class VariancePoint:
    axis_value: float
    var_x1: float
    var_x2: float
    stable: bool


def variance_sweep(params: SystemParams, axis: str, start: float, stop: float,
                   steps: int, theta: float = 0.0) -> list[VariancePoint]:
    """Quadrature variances along a parameter axis.

    axis is one of ``omega_c``, ``u0``, ``alpha``.  Unstable grid points are
    emitted with NaN variances and stable=False rather than aborting, so a
    sweep can be rendered across the phase transition.
    """
    if axis not in ("omega_c", "u0", "alpha"):
        raise ValueError(f"unknown sweep axis {axis!r}")
    if steps < 1:
        raise EmptyRange(f"sweep needs at least one point, got steps={steps}")
    values = np.linspace(start, stop, steps)

    def one(value: float) -> VariancePoint:
        p = _with_axis(params, axis, float(value))
        drift = effective_drift(p)
        if drift.det <= 0:
            return VariancePoint(float(value), math.nan, math.nan, False)
        qv = quadrature_variances(closed_form_moments(drift), theta)
        return VariancePoint(float(value), qv.var_x1, qv.var_x2, True)

    return _parallel.map_ordered(one, values.tolist())


def _with_axis(params: SystemParams, axis: str, value: float) -> SystemParams:
    if axis == "omega_c":
        return params_from_u0(value, params.u0, params.alpha, params.gamma, params.omega_eg)
    if axis == "u0":
        return params_from_u0(params.omega_c, value, params.alpha, params.gamma, params.omega_eg)
    return params_from_u0(params.omega_c, params.u0, value, params.gamma, params.omega_eg)
