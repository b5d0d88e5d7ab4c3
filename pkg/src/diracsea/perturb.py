"""Second-order expansion of the single-mode energy in the field amplitude.

The energy of the evolved mode is expanded in ``R = (2 alpha/c) e^{-c t1}``
through the truncated series products of ``M = 1F1(J; K; iR)``.  Each order
is available twice: assembled from the raw ratios ``J/K`` and
``J(J+1)/(K(K+1))``, and in closed form.  The two must agree.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import IdentityMismatch
from .exact import evolve_exact, exact_coeffs, switch_profile
from .modes import ModeIndex, PhysParams, mode_energy
from .oracle import OdeRun, evolve_ode

IDENTITY_RTOL = 1e-12


@dataclass(frozen=True)
class Eps2Terms:
    a: float
    b: float
    c: float

    @property
    def total(self) -> float:
        return self.a + self.b + self.c


@dataclass(frozen=True)
class EnergyBreakdown:
    eps0: float
    eps1: float
    eps2_a: float
    eps2_b: float
    eps2_c: float
    eps2: float
    exact: float
    oracle: float
    delta_pert: float
    residual: float


def ratios(mode: ModeIndex, params: PhysParams) -> tuple[complex, complex]:
    """``(J/K, J(J+1)/(K(K+1)))`` straight from the definitions of J and K."""
    co = exact_coeffs(mode, params, 0.0)
    J, K = co.J, co.K
    return J / K, J * (J + 1) / (K * (K + 1))


def _eta2(mode: ModeIndex, m: float) -> float:
    return 1.0 / (4.0 * mode.energy(m) * mode.gap(m))


def eps0(mode: ModeIndex, params: PhysParams) -> float:
    return mode.lam * mode.energy(params.m)


def eps0_assembled(mode: ModeIndex, params: PhysParams) -> float:
    """``4 lam |eta|^2 (E - lam p) E^2``, which reduces to ``lam E``."""
    E = mode.energy(params.m)
    return 4.0 * mode.lam * _eta2(mode, params.m) * mode.gap(params.m) * E * E


def eps1(mode: ModeIndex, params: PhysParams, t1: float = 0.0) -> float:
    """First-order shift ``-lam p alpha e^{-c t1} / E``."""
    _, A = switch_profile(params, t1)
    return -mode.lam * mode.p * A / mode.energy(params.m)


def eps1_assembled(mode: ModeIndex, params: PhysParams, t1: float = 0.0) -> float:
    m, c, lam, p = params.m, params.cdecay, mode.lam, mode.p
    E, gap = mode.energy(m), mode.gap(m)
    R, _ = switch_profile(params, t1)
    jk, _ = ratios(mode, params)
    plus = 2.0 * jk.real            # J/K + c.c.
    minus_i = 1j * (2j * jk.imag)   # i (J/K - c.c.)
    val = _eta2(mode, m) * R * (
        4.0 * lam * gap * (E * E * minus_i.real - 0.5 * c * p)
        + 2.0 * c * E * gap * plus)
    return val


def eps2_closed(mode: ModeIndex, params: PhysParams, t1: float = 0.0) -> float:
    """``lam c^2 m^2 R^2 / (2E (4E^2 + c^2))``; independent of the sign of p."""
    m, c = params.m, params.cdecay
    E = mode.energy(m)
    R, _ = switch_profile(params, t1)
    return mode.lam * c * c * m * m * R * R / (2.0 * E * (4.0 * E * E + c * c))


def eps2_terms(mode: ModeIndex, params: PhysParams, t1: float = 0.0) -> Eps2Terms:
    """The three second-order contributions assembled from the J, K ratios.

    ``a`` comes from the ``|M|^2`` term, ``b`` from ``M* M' + c.c.`` and ``c``
    from ``|M'|^2``.  In ``b`` the ``(J/K + c.c.)`` piece enters with a real
    coefficient ``c lam / 2``; an extra factor ``i`` would make the energy
    complex.
    """
    m, c, lam, p = params.m, params.cdecay, mode.lam, mode.p
    E, gap = mode.energy(m), mode.gap(m)
    R, _ = switch_profile(params, t1)
    w = _eta2(mode, m) * R * R
    jk, jk2 = ratios(mode, params)
    abs2 = abs(jk) ** 2
    jk_plus = 2.0 * jk.real
    jk_minus = 2j * jk.imag
    jk2_plus = 2.0 * jk2.real
    jk2_minus = 2j * jk2.imag
    a = 4.0 * lam * w * gap * (E * E * (abs2 - 0.5 * jk2_plus)
                               - (0.5j * c * p * jk_minus).real)
    b = 2.0 * c * w * gap * ((1j * E * jk2_minus).real + 0.5 * c * lam * jk_plus)
    cc = -2.0 * c * c * p * w * abs2
    return Eps2Terms(a=a, b=b, c=cc)


def eps2(mode: ModeIndex, params: PhysParams, t1: float = 0.0,
         rtol: float = IDENTITY_RTOL) -> Eps2Terms:
    """Assembled second-order terms, checked against :func:`eps2_closed`."""
    terms = eps2_terms(mode, params, t1)
    closed = eps2_closed(mode, params, t1)
    scale = max(abs(closed), abs(terms.a), abs(terms.b), abs(terms.c))
    if abs(terms.total - closed) > rtol * scale:
        raise IdentityMismatch(
            f"assembled eps2={terms.total!r} vs closed form {closed!r} "
            f"for lam={mode.lam}, p={mode.p}")
    return terms


def series_products(J: complex, K: complex, R: float) -> tuple[float, float, float]:
    """Truncated ``(|M|^2, M* M' + c.c., |M'|^2)`` at ``z = iR``.

    Accurate to O(R^3), O(R^2) and O(R) respectively.
    """
    jk = J / K
    jk2 = J * (J + 1) / (K * (K + 1))
    abs2 = abs(jk) ** 2
    prod = 1.0 + (1j * R * (2j * jk.imag)).real - jk2.real * R * R + abs2 * R * R
    cross = 2.0 * jk.real + (1j * R * (2j * jk2.imag)).real
    return prod, cross, abs2


def ratio_identities(mode: ModeIndex, params: PhysParams) -> list[tuple[str, complex, complex]]:
    """Closed forms of the J/K combinations, paired with direct arithmetic."""
    m, c, lam, p = params.m, params.cdecay, mode.lam, mode.p
    E, gap = mode.energy(m), mode.gap(m)
    jk, jk2 = ratios(mode, params)
    lEp = lam * gap  # lam E - p
    den = c * c + 4.0 * E * E
    DE = (1.0 + 4.0 * E * E / (c * c)) * (1.0 + E * E / (c * c))
    return [
        ("2 Re(J/K)", jk + jk.conjugate(), complex(4.0 * E * gap / den)),
        ("2i Im(J/K)", jk - jk.conjugate(), 2j * lam * c * gap / den),
        ("J(J+1)/K(K+1)", jk2, lEp / (2.0 * c * DE) * (1.0 + 1j * lEp / c)
         * (1j * (1.0 - 2.0 * E * E / (c * c)) + 3.0 * lam * E / c)),
        ("2 Re(J(J+1)/K(K+1))", jk2 + jk2.conjugate(), complex(
            lEp / (c * DE) * ((2.0 * lam * E + p) / c + 2.0 * E * E * lEp / c ** 3))),
        ("2i Im(J(J+1)/K(K+1))", jk2 - jk2.conjugate(), 1j * lEp / (c * DE) * (
            (1.0 - 2.0 * E * E / (c * c)) + 3.0 * lam * E * lEp / (c * c))),
    ]


def delta_eps(mode: ModeIndex, params: PhysParams) -> float:
    """Energy change of the mode to second order in alpha, field off at t = 0."""
    m, c, a = params.m, params.cdecay, params.alpha
    E = mode.energy(m)
    return (-mode.lam * mode.p * a / E
            + 4.0 * mode.lam * m * m * a * a / (2.0 * E * (4.0 * E * E + c * c)))


def pair_sum(p: float, params: PhysParams) -> float:
    """``delta(-1, p) + delta(-1, -p)`` at second order; first order cancels."""
    m, c, a = params.m, params.cdecay, params.alpha
    E = math.hypot(p, m)
    return -4.0 * a * a * m * m / (E * (4.0 * E * E + c * c))


def exact_delta(mode: ModeIndex, params: PhysParams) -> float:
    """Energy change ``eps(0) - lam E`` from the closed-form evolution."""
    state = evolve_exact(mode, params, 0.0)
    return mode_energy(state, mode, params) - eps0(mode, params)


def energy_breakdown(mode: ModeIndex, params: PhysParams, t1: float = 0.0,
                     with_oracle: bool = True) -> EnergyBreakdown:
    e0 = eps0(mode, params)
    e1 = eps1(mode, params, t1)
    terms = eps2(mode, params, t1)
    e2 = terms.total
    ex = mode_energy(evolve_exact(mode, params, t1), mode, params)
    if with_oracle:
        run = OdeRun.seeded(params, t_end=t1)
        orc = mode_energy(evolve_ode(mode, params, run), mode, params)
    else:
        orc = math.nan
    return EnergyBreakdown(
        eps0=e0, eps1=e1, eps2_a=terms.a, eps2_b=terms.b, eps2_c=terms.c,
        eps2=e2, exact=ex, oracle=orc, delta_pert=e1 + e2,
        residual=ex - (e0 + e1 + e2))
