"""Closed-form evolution of one Dirac mode in the switched linear potential.

For ``t < 0`` the potential is ``V(z, t) = -z c alpha e^{-c t}`` (``c < 0``, so
the field grows from zero at ``t = -inf``); it is switched off at ``t = 0``.
A mode of canonical momentum ``p`` stays a plane wave with kinetic momentum
``p - A(t)``, ``A = alpha e^{-c t}``, and amplitudes

    C = e^{-iR/2} R^{i lam mu} [(m - p + lam E) M + c R M']
    D = e^{-iR/2} R^{i lam mu} [(m + p - lam E) M - c R M']

with ``M = 1F1(J; K; iR)``, ``R = (2 alpha/c) e^{-c t}``, ``mu = E/c``,
``J = (i/c)(lam E - p)``, ``K = 1 + 2 i lam E/c``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError
from .modes import ModeIndex, PhysParams, Spinor2, free_spinor_at
from .specfun import KummerParams, kummer_phi, kummer_phi_prime

DEFAULT_SEED_THRESHOLD = 1e-12


@dataclass(frozen=True)
class ExactCoeffs:
    J: complex
    K: complex
    mu: float
    eta: complex
    R: float
    A: float


@dataclass(frozen=True)
class ModeState:
    """Amplitudes of ``eta (C, D) e^{i (p - A(t)) z}`` at time ``t``."""

    C: complex
    D: complex
    t: float
    shifted_momentum: float
    eta: complex

    def spinor(self) -> Spinor2:
        """The normalised two-component spinor ``eta (C, D)``."""
        return Spinor2(self.eta * self.C, self.eta * self.D)


def switch_profile(params: PhysParams, t: float) -> tuple[float, float]:
    """Return ``(R(t), A(t))``."""
    c = params.cdecay
    R = (2.0 * params.alpha / c) * math.exp(-c * t)
    return R, 0.5 * c * R


def _log_scale(params: PhysParams) -> float:
    # log(2 alpha / c); the alpha = 0 limit only contributes a constant phase
    # that cancels between eta and (C, D), so fix it to zero there.
    if params.alpha == 0.0:
        return 0.0
    return math.log(2.0 * params.alpha / params.cdecay)


def _on(t: float) -> float:
    return 0.0 if t >= 0.0 else 1.0


def potential(params: PhysParams, z: float, t: float) -> float:
    c = params.cdecay
    return -z * c * params.alpha * _on(t) * math.exp(-c * t)


def field(params: PhysParams, t: float) -> float:
    """Electric field ``-dV/dz``; uniform in space."""
    c = params.cdecay
    return c * params.alpha * _on(t) * math.exp(-c * t)


def exact_coeffs(mode: ModeIndex, params: PhysParams, t: float) -> ExactCoeffs:
    m, c, lam = params.m, params.cdecay, mode.lam
    E = mode.energy(m)
    gap = mode.gap(m)
    J = 1j * lam * gap / c
    K = 1.0 + 2j * lam * E / c
    mu = E / c
    eta = cmath.exp(-1j * lam * mu * _log_scale(params)) / math.sqrt(4.0 * E * gap)
    R, A = switch_profile(params, t)
    return ExactCoeffs(J=J, K=K, mu=mu, eta=eta, R=R, A=A)


def evolve_exact(mode: ModeIndex, params: PhysParams, t: float) -> ModeState:
    """Closed-form state at ``t <= 0`` of the mode that was free at ``t = -inf``."""
    if t > 0.0:
        raise DomainError(f"evolve_exact is defined for t <= 0, got t={t}; use free_evolve")
    m, c, lam = params.m, params.cdecay, mode.lam
    co = exact_coeffs(mode, params, t)
    gap = mode.gap(m)
    R = co.R
    # R^{i lam mu} with ln R = ln(2 alpha/c) - c t, real because alpha/c > 0
    phase = cmath.exp(-0.5j * R + 1j * lam * co.mu * (_log_scale(params) - c * t))
    kp = KummerParams(co.J, co.K, 1j * R, tol=params.series_tol)
    phi = kummer_phi(kp)
    dphi = kummer_phi_prime(kp)
    C = phase * ((m + lam * gap) * phi + c * R * dphi)
    D = phase * ((m - lam * gap) * phi - c * R * dphi)
    return ModeState(C=C, D=D, t=t, shifted_momentum=mode.p - co.A, eta=co.eta)


def asymptotic_state(mode: ModeIndex, params: PhysParams, t: float) -> ModeState:
    """The ``t -> -inf`` form of :func:`evolve_exact` (``M -> 1``, ``R -> 0``).

    ``eta (C, D)`` is then exactly the free spinor times ``e^{-i lam E t}``.
    """
    if t > 0.0:
        raise DomainError(f"asymptotic_state is defined for t <= 0, got t={t}")
    m, lam = params.m, mode.lam
    E = mode.energy(m)
    gap = mode.gap(m)
    co = exact_coeffs(mode, params, t)
    phase = cmath.exp(1j * lam * co.mu * _log_scale(params) - 1j * lam * E * t)
    return ModeState(C=phase * (m + lam * gap), D=phase * (m - lam * gap), t=t,
                     shifted_momentum=mode.p - co.A, eta=co.eta)


def seed_time(params: PhysParams, threshold: float = DEFAULT_SEED_THRESHOLD,
              t_end: float = 0.0) -> float:
    """Latest time at which ``R(t) <= threshold``; the field is negligible before it."""
    if params.alpha == 0.0:
        return t_end - 10.0
    c = params.cdecay
    # R(t) = (2 alpha/c) e^{-c t} = threshold
    return min(t_end - 1.0, math.log(2.0 * params.alpha / (c * threshold)) / c)


def free_evolve(state0: ModeState, mode: ModeIndex, params: PhysParams,
                t: float) -> ModeState:
    """Propagate the ``t = 0`` state with the free Hamiltonian.

    The spinor is split onto the free eigenspinors of the kinetic momentum
    ``k = p - alpha`` and each branch picks up ``e^{-i lam' E_k t}``.
    """
    if t < 0.0:
        raise DomainError(f"free_evolve is defined for t >= 0, got t={t}")
    if state0.t != 0.0:
        raise DomainError(f"free_evolve needs the t=0 state, got t={state0.t}")
    if t == 0.0:
        return state0
    m = params.m
    k = state0.shifted_momentum
    Ek = math.hypot(k, m)
    psi = Spinor2(state0.C, state0.D)
    up = 0j
    lo = 0j
    for lam in (1, -1):
        u = free_spinor_at(lam, k, m)
        amp = u.vdot(psi) * cmath.exp(-1j * lam * Ek * t)
        up += amp * u.upper
        lo += amp * u.lower
    return ModeState(C=up, D=lo, t=t, shifted_momentum=k, eta=state0.eta)
