"""Brute-force reference computations.

``evolve_ode`` integrates the two-amplitude equation

    i dC/dt = (p - A(t)) D + m C
    i dD/dt = (p - A(t)) C - m D

from a free-particle seed with a Dormand-Prince 5(4) pair.  It shares no code
with the hypergeometric closed form beyond the seed state, which only uses
elementary functions.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from scipy.integrate import quad

from .errors import InvalidParams, NonConvergence, SeedRegimeViolation, StepLimitExceeded
from .exact import DEFAULT_SEED_THRESHOLD, ModeState, asymptotic_state, seed_time, switch_profile
from .modes import ModeIndex, PhysParams

SEED_LIMIT = 1e-10

# Dormand-Prince 5(4), first-same-as-last
_C2, _C3, _C4, _C5 = 1 / 5, 3 / 10, 4 / 5, 8 / 9
_A21 = 1 / 5
_A31, _A32 = 3 / 40, 9 / 40
_A41, _A42, _A43 = 44 / 45, -56 / 15, 32 / 9
_A51, _A52, _A53, _A54 = 19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729
_A61, _A62, _A63, _A64, _A65 = 9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656
_B1, _B3, _B4, _B5, _B6 = 35 / 384, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84
# fifth-order minus embedded fourth-order weights
_E1, _E3, _E4, _E5, _E6, _E7 = (71 / 57600, -71 / 16695, 71 / 1920,
                                 -17253 / 339200, 22 / 525, -1 / 40)


@dataclass(frozen=True)
class OdeRun:
    t_start: float
    t_end: float = 0.0
    tol: float = 1e-12
    max_steps: int = 500_000

    def __post_init__(self):
        if not self.t_start < self.t_end <= 0.0:
            raise InvalidParams(
                f"need t_start < t_end <= 0, got {self.t_start}, {self.t_end}")
        if not self.tol > 0.0:
            raise InvalidParams(f"tol must be positive, got {self.tol}")
        if self.max_steps < 1:
            raise InvalidParams("max_steps must be positive")

    @classmethod
    def seeded(cls, params: PhysParams, t_end: float = 0.0,
               threshold: float = DEFAULT_SEED_THRESHOLD, tol: float | None = None,
               max_steps: int = 500_000) -> "OdeRun":
        """Window starting where ``R(t) = threshold``."""
        return cls(seed_time(params, threshold, t_end), t_end,
                   params.ode_tol if tol is None else tol, max_steps)


@dataclass(frozen=True)
class OdeStats:
    steps: int
    rejected: int
    norm_start: float
    norm_end: float

    @property
    def norm_drift(self) -> float:
        return abs(self.norm_end - self.norm_start)


def _integrate(C: complex, D: complex, p: float, m: float, alpha: float, c: float,
               t0: float, t1: float, tol: float, max_steps: int):
    def rhs(t, y0, y1):
        k = p - alpha * math.exp(-c * t)
        return -1j * (k * y1 + m * y0), -1j * (k * y0 - m * y1)

    t = t0
    span = t1 - t0
    h = min(span, 0.05 * tol ** 0.2 / max(1.0, math.hypot(p, m)))
    f0, g0 = rhs(t, C, D)
    steps = rejected = 0
    while t < t1:
        if steps + rejected >= max_steps:
            raise StepLimitExceeded(f"{max_steps} steps used, reached t={t} of {t1}")
        if t + h > t1:
            h = t1 - t
        f2, g2 = rhs(t + _C2 * h, C + h * _A21 * f0, D + h * _A21 * g0)
        f3, g3 = rhs(t + _C3 * h, C + h * (_A31 * f0 + _A32 * f2),
                     D + h * (_A31 * g0 + _A32 * g2))
        f4, g4 = rhs(t + _C4 * h, C + h * (_A41 * f0 + _A42 * f2 + _A43 * f3),
                     D + h * (_A41 * g0 + _A42 * g2 + _A43 * g3))
        f5, g5 = rhs(t + _C5 * h,
                     C + h * (_A51 * f0 + _A52 * f2 + _A53 * f3 + _A54 * f4),
                     D + h * (_A51 * g0 + _A52 * g2 + _A53 * g3 + _A54 * g4))
        f6, g6 = rhs(t + h,
                     C + h * (_A61 * f0 + _A62 * f2 + _A63 * f3 + _A64 * f4 + _A65 * f5),
                     D + h * (_A61 * g0 + _A62 * g2 + _A63 * g3 + _A64 * g4 + _A65 * g5))
        Cn = C + h * (_B1 * f0 + _B3 * f3 + _B4 * f4 + _B5 * f5 + _B6 * f6)
        Dn = D + h * (_B1 * g0 + _B3 * g3 + _B4 * g4 + _B5 * g5 + _B6 * g6)
        f7, g7 = rhs(t + h, Cn, Dn)
        eC = h * (_E1 * f0 + _E3 * f3 + _E4 * f4 + _E5 * f5 + _E6 * f6 + _E7 * f7)
        eD = h * (_E1 * g0 + _E3 * g3 + _E4 * g4 + _E5 * g5 + _E6 * g6 + _E7 * g7)
        sC = tol + tol * max(abs(C), abs(Cn))
        sD = tol + tol * max(abs(D), abs(Dn))
        err = math.sqrt(0.5 * ((abs(eC) / sC) ** 2 + (abs(eD) / sD) ** 2))
        if err <= 1.0:
            t = t1 if h == t1 - t else t + h
            C, D, f0, g0 = Cn, Dn, f7, g7
            steps += 1
            fac = 5.0 if err == 0.0 else min(5.0, 0.9 * err ** -0.2)
        else:
            rejected += 1
            fac = max(0.2, 0.9 * err ** -0.2)
        h *= fac
    return C, D, steps, rejected


def evolve_ode_with_stats(mode: ModeIndex, params: PhysParams,
                          run: OdeRun) -> tuple[ModeState, OdeStats]:
    R0, _ = switch_profile(params, run.t_start)
    if R0 > SEED_LIMIT:
        raise SeedRegimeViolation(
            f"R(t_start)={R0:.3e} exceeds {SEED_LIMIT:.0e}; start earlier")
    seed = asymptotic_state(mode, params, run.t_start)
    C, D, steps, rejected = _integrate(
        seed.C, seed.D, mode.p, params.m, params.alpha, params.cdecay,
        run.t_start, run.t_end, run.tol, run.max_steps)
    _, A = switch_profile(params, run.t_end)
    w = abs(seed.eta) ** 2
    state = ModeState(C=C, D=D, t=run.t_end, shifted_momentum=mode.p - A, eta=seed.eta)
    stats = OdeStats(steps, rejected,
                     w * (abs(seed.C) ** 2 + abs(seed.D) ** 2),
                     w * (abs(C) ** 2 + abs(D) ** 2))
    return state, stats


def evolve_ode(mode: ModeIndex, params: PhysParams, run: OdeRun | None = None) -> ModeState:
    """Numerically integrate the mode from the seed regime to ``run.t_end``."""
    if run is None:
        run = OdeRun.seeded(params)
    return evolve_ode_with_stats(mode, params, run)[0]


def quad_semi_infinite(integrand: Callable[[float], float], tol: float = 1e-10,
                       scale: float = 1.0, u_step: float = 4.0,
                       u_max: float = 200.0) -> float:
    """Integrate ``integrand`` over ``[0, inf)``.

    With ``p = scale * sinh(u)`` algebraic tails become exponential in ``u``.
    Panels of width ``u_step`` are added until the tail, estimated from the
    local exponential decay rate of the transformed integrand, drops below
    ``tol`` relative to the accumulated integral.
    """
    def g(u):
        return integrand(scale * math.sinh(u)) * scale * math.cosh(u)

    total = 0.0
    lo = 0.0
    while lo < u_max:
        hi = lo + u_step
        val, _ = quad(g, lo, hi, epsabs=0.0, epsrel=0.1 * tol, limit=200)
        total += val
        lo = hi
        g0 = abs(g(lo))
        if g0 == 0.0:
            return total
        g1 = abs(g(lo + 1.0))
        rate = math.log(g0 / g1) if g1 > 0.0 else math.inf
        if rate > 0.0:
            tail = g0 / rate
            if tail <= tol * abs(total):
                return total
    raise NonConvergence(f"tail of the integrand not below tol={tol} by u={u_max}")
