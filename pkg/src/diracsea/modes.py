"""Free 1+1D Dirac modes and the single-mode energy functional.

Everything is per unit length: the ``1/sqrt(L)`` box normalisation of a
plane wave is dropped, so a normalised mode has unit spinor norm.

Conventions: ``hbar = 1``, speed of light ``= 1``, charge absorbed into the
potential amplitude.  ``cdecay`` is the switch-on rate of the field, not the
speed of light.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .errors import InvalidParams

if TYPE_CHECKING:
    from .exact import ModeState


@dataclass(frozen=True)
class PhysParams:
    """Mass, field amplitude ``alpha`` and switch rate ``cdecay`` (< 0).

    ``alpha`` must share the sign of ``cdecay`` (or vanish) so that the
    hypergeometric argument scale ``2 alpha / cdecay`` is non-negative.
    """

    m: float = 1.0
    alpha: float = -0.01
    cdecay: float = -1.0
    series_tol: float = 1e-13
    ode_tol: float = 1e-12

    def __post_init__(self):
        if not self.m > 0.0:
            raise InvalidParams(f"mass must be positive, got m={self.m}")
        if not self.cdecay < 0.0:
            raise InvalidParams(f"switch rate must be negative, got c={self.cdecay}")
        if self.alpha * self.cdecay < 0.0:
            raise InvalidParams(
                f"alpha*c must be >= 0 (got alpha={self.alpha}, c={self.cdecay})"
            )
        if not (self.series_tol > 0.0 and self.ode_tol > 0.0):
            raise InvalidParams("tolerances must be positive")

    def with_alpha(self, alpha: float) -> "PhysParams":
        return PhysParams(self.m, alpha, self.cdecay, self.series_tol, self.ode_tol)


@dataclass(frozen=True)
class ModeIndex:
    lam: int
    p: float

    def __post_init__(self):
        if self.lam not in (1, -1):
            raise InvalidParams(f"lambda must be +1 or -1, got {self.lam}")

    def energy(self, m: float) -> float:
        return math.hypot(self.p, m)

    def gap(self, m: float) -> float:
        """``E - lam*p`` without cancellation (it is ``m^2/(E + lam*p)`` when lam*p > 0)."""
        E = self.energy(m)
        x = self.lam * self.p
        if x > 0.0:
            return m * m / (E + x)
        return E - x


@dataclass(frozen=True)
class Spinor2:
    upper: complex
    lower: complex

    def norm2(self) -> float:
        return abs(self.upper) ** 2 + abs(self.lower) ** 2

    def vdot(self, other: "Spinor2") -> complex:
        """Hermitian inner product ``<self|other>``."""
        return (self.upper.conjugate() * other.upper
                + self.lower.conjugate() * other.lower)


def _sign(x: float) -> float:
    return -1.0 if x < 0.0 else 1.0


def free_spinor_at(lam: int, p: float, m: float) -> Spinor2:
    """Unit-norm eigenspinor of ``p sigma_x + m sigma_z`` with eigenvalue ``lam*E``.

    For ``lam = -1`` the textbook ratio ``p/(m - E)`` is 0/0 at ``p = 0``, so the
    equivalent form ``(sqrt((E-m)/2E), -sign(p) sqrt((E+m)/2E))`` is used with
    ``sign(0) = +1``.
    """
    E = math.hypot(p, m)
    e_minus_m = p * p / (E + m)
    if lam == 1:
        n = math.sqrt((E + m) / (2.0 * E))
        return Spinor2(complex(n), complex(n * p / (E + m)))
    return Spinor2(complex(math.sqrt(e_minus_m / (2.0 * E))),
                   complex(-_sign(p) * math.sqrt((E + m) / (2.0 * E))))


def free_spinor(mode: ModeIndex, params: PhysParams) -> Spinor2:
    return free_spinor_at(mode.lam, mode.p, params.m)


def mode_energy(state: "ModeState", mode: ModeIndex, params: PhysParams,
                t: float | None = None) -> float:
    """Expectation of the free Hamiltonian in ``state``.

    The state is a plane wave of kinetic momentum ``k = p - A(t)``, so the
    expectation is ``|eta|^2 [k 2Re(C* D) + m (|C|^2 - |D|^2)]``.  This is the
    total energy only where the potential vanishes (t -> -inf or t >= 0).
    ``t`` is accepted for symmetry with the state constructors and must
    match ``state.t`` if given.
    """
    if t is not None and t != state.t:
        raise InvalidParams(f"state is at t={state.t}, not t={t}")
    C, D = state.C, state.D
    k = state.shifted_momentum
    w = abs(state.eta) ** 2
    return w * (2.0 * k * (C.conjugate() * D).real
                + params.m * (abs(C) ** 2 - abs(D) ** 2))


def mode_norm(state: "ModeState") -> float:
    return abs(state.eta) ** 2 * (abs(state.C) ** 2 + abs(state.D) ** 2)
