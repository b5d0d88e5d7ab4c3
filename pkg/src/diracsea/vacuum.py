"""Vacuum (Dirac sea) energy change per unit length.

Only negative-energy modes are occupied.  Pairing ``p`` with ``-p`` cancels
the first-order shift, and the continuum sum over modes becomes
``(1/2pi) int_0^inf [delta(-1, p) + delta(-1, -p)] dp``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.integrate import simpson

from .errors import CutoffTooSmall, InvalidParams
from .modes import ModeIndex, PhysParams, mode_energy
from .oracle import OdeRun, evolve_ode, quad_semi_infinite
from .perturb import exact_delta, pair_sum

TWO_PI = 2.0 * math.pi


class Scheme(str, enum.Enum):
    UNIFORM = "uniform"
    SINH = "sinh"


class Route(str, enum.Enum):
    EXACT = "exact"
    ORACLE = "oracle"
    PERTURBATIVE = "perturbative"


@dataclass(frozen=True)
class MomentumGrid:
    p_max: float = 50.0
    n_points: int = 513
    scheme: Scheme = Scheme.SINH
    scale: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "scheme", Scheme(self.scheme))
        if not self.p_max > 0.0:
            raise InvalidParams(f"p_max must be positive, got {self.p_max}")
        if self.n_points < 2:
            raise InvalidParams(f"n_points must be >= 2, got {self.n_points}")

    def nodes(self) -> tuple[np.ndarray, np.ndarray]:
        """Return ``(x, p)``: the uniform integration variable and the momenta.

        For the sinh scheme ``p = scale * sinh(x)``, which crowds points near
        ``p = 0`` where the integrand varies on the mass scale.
        """
        if self.scheme is Scheme.UNIFORM:
            p = np.linspace(0.0, self.p_max, self.n_points)
            return p, p
        x = np.linspace(0.0, math.asinh(self.p_max / self.scale), self.n_points)
        p = self.scale * np.sinh(x)
        p[-1] = self.p_max
        return x, p

    def jacobian(self, x: np.ndarray) -> np.ndarray:
        if self.scheme is Scheme.UNIFORM:
            return np.ones_like(x)
        return self.scale * np.cosh(x)


@dataclass(frozen=True)
class VacuumResult:
    alpha: float
    density_pert: float
    density_exact: float
    integral_I: float
    tail_bound: float


def vacuum_integrand(p: float, m: float, c: float) -> float:
    """``4 m^2 / (E (4E^2 + c^2))``; positive, decays like ``p^-3``."""
    E = math.hypot(p, m)
    return 4.0 * m * m / (E * (4.0 * E * E + c * c))


def vacuum_integral(params: PhysParams, tol: float = 1e-10) -> float:
    m, c = params.m, params.cdecay
    return quad_semi_infinite(lambda p: vacuum_integrand(p, m, c), tol=tol, scale=m)


def vacuum_density_pert(params: PhysParams, tol: float = 1e-10) -> VacuumResult:
    """Second-order vacuum energy density ``-alpha^2 I / 2pi``."""
    integral = vacuum_integral(params, tol)
    dens = -params.alpha ** 2 * integral / TWO_PI
    return VacuumResult(alpha=params.alpha, density_pert=dens, density_exact=math.nan,
                        integral_I=integral, tail_bound=0.0)


def tail_bound(params: PhysParams, p_max: float) -> float:
    """Bound on the density carried by modes with ``|p| > p_max``.

    The pair sum is bounded by ``alpha^2 m^2 / p^3``; a factor two covers
    the higher-order corrections at small alpha.
    """
    return 2.0 * params.alpha ** 2 * params.m ** 2 / (2.0 * p_max ** 2) / TWO_PI


def _pair_route(params: PhysParams, route: Route,
                threshold: float) -> Callable[[float], float]:
    if route is Route.PERTURBATIVE:
        return lambda p: pair_sum(p, params)
    if route is Route.EXACT:
        return lambda p: (exact_delta(ModeIndex(-1, p), params)
                          + exact_delta(ModeIndex(-1, -p), params))

    run = OdeRun.seeded(params, threshold=threshold)

    def ode_pair(p: float) -> float:
        total = 0.0
        for q in (p, -p):
            mode = ModeIndex(-1, q)
            state = evolve_ode(mode, params, run)
            total += mode_energy(state, mode, params) + mode.energy(params.m)
        return total

    return ode_pair


def pair_values(params: PhysParams, momenta, route: Route | str = Route.EXACT,
                threshold: float = 1e-12) -> np.ndarray:
    """``delta(-1, p) + delta(-1, -p)`` at each momentum, in the given order."""
    f = _pair_route(params, Route(route), threshold)
    return np.array([f(float(p)) for p in momenta])


def vacuum_density_direct(params: PhysParams, grid: MomentumGrid | None = None,
                          route: Route | str = Route.EXACT,
                          threshold: float = 1e-12) -> tuple[float, float]:
    """Grid quadrature of the mode sum up to ``grid.p_max``.

    Returns ``(density, tail_bound)``.  Raises :class:`CutoffTooSmall` when
    the bound on the omitted tail exceeds 10% of the computed part.
    """
    grid = grid or MomentumGrid()
    x, p = grid.nodes()
    vals = pair_values(params, p, route, threshold) * grid.jacobian(x)
    density = float(simpson(vals, x=x)) / TWO_PI
    bound = tail_bound(params, grid.p_max)
    if bound > 0.1 * abs(density):
        raise CutoffTooSmall(
            f"tail bound {bound:.3e} exceeds 10% of partial density {density:.3e} "
            f"at p_max={grid.p_max}")
    return density, bound


def vacuum_energy(params: PhysParams, grid: MomentumGrid | None = None,
                  tol: float = 1e-10) -> VacuumResult:
    """Perturbative and exact densities side by side."""
    pert = vacuum_density_pert(params, tol)
    dens, bound = vacuum_density_direct(params, grid, Route.EXACT)
    return VacuumResult(alpha=params.alpha, density_pert=pert.density_pert,
                        density_exact=dens, integral_I=pert.integral_I,
                        tail_bound=bound)
