"""Self-check groups run by ``diracsea verify``.

Each group returns ``(passed, detail)``.  Thresholds are fixed; the physical
parameters (and in particular the series tolerance) come from the caller, so
loosening a tolerance shows up as failures.
"""
from __future__ import annotations

import cmath
import math
import random
from typing import Callable

from .exact import evolve_exact
from .modes import ModeIndex, PhysParams, mode_energy, mode_norm
from .oracle import OdeRun, evolve_ode
from .perturb import (eps1, eps1_assembled, eps2_closed, eps2_terms, energy_breakdown,
                      exact_delta, ratio_identities)
from .specfun import KummerParams, kummer_phi, kummer_residual
from .vacuum import MomentumGrid, vacuum_density_direct, vacuum_density_pert

P_GRID = (-3.0, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0)
SCALING_ALPHAS = (-0.01, -0.02, -0.04, -0.08)


def _modes():
    return [ModeIndex(lam, p) for lam in (1, -1) for p in P_GRID]


def check_specfun(params: PhysParams) -> tuple[bool, str]:
    rng = random.Random(20070320)
    tol = params.series_tol
    worst_res = worst_exp = 0.0
    for _ in range(20):
        J = complex(rng.uniform(-3, 3), rng.uniform(-5, 5))
        K = complex(rng.uniform(1, 5), rng.uniform(-5, 5))
        z = cmath.rect(10 * math.sqrt(rng.random()), rng.uniform(0, 2 * math.pi))
        worst_res = max(worst_res, kummer_residual(KummerParams(J, K, z, tol=tol)))
        ez = cmath.exp(z)
        worst_exp = max(worst_exp, abs(kummer_phi(KummerParams(K, K, z, tol=tol)) - ez) / abs(ez))
    ok = worst_res <= 1e-10 and worst_exp <= 1e-12
    return ok, f"max residual {worst_res:.2e} (<=1e-10), max |M(K,K,z)/e^z-1| {worst_exp:.2e} (<=1e-12)"


def check_norms(params: PhysParams) -> tuple[bool, str]:
    worst = 0.0
    for alpha in (-0.01, -0.1, -0.5):
        pa = params.with_alpha(alpha)
        for mode in _modes():
            for t in (-2.0, -0.5, 0.0):
                worst = max(worst, abs(mode_norm(evolve_exact(mode, pa, t)) - 1.0))
    return worst <= 1e-9, f"max |norm-1| {worst:.2e} (<=1e-9)"


def check_identities(params: PhysParams) -> tuple[bool, str]:
    worst = 0.0
    for mode in _modes():
        for _, lhs, rhs in ratio_identities(mode, params):
            worst = max(worst, abs(lhs - rhs) / max(1.0, abs(rhs)))
        e1 = eps1(mode, params)
        worst = max(worst, abs(eps1_assembled(mode, params) - e1) / max(abs(e1), 1e-300)
                    if e1 != 0.0 else abs(eps1_assembled(mode, params)))
        e2 = eps2_closed(mode, params)
        worst = max(worst, abs(eps2_terms(mode, params).total - e2) / abs(e2))
    return worst <= 1e-12, f"max relative mismatch {worst:.2e} (<=1e-12)"


def check_scaling(params: PhysParams) -> tuple[bool, str]:
    mode = ModeIndex(-1, 1.0)
    res = []
    worst_orc = 0.0
    for alpha in SCALING_ALPHAS:
        b = energy_breakdown(mode, params.with_alpha(alpha), with_oracle=True)
        worst_orc = max(worst_orc, abs(b.exact - b.oracle))
        res.append(abs(b.residual))
    ratios = [res[i + 1] / res[i] for i in range(len(res) - 1)]
    ok = all(6.5 <= r <= 9.5 for r in ratios) and worst_orc <= 1e-8
    return ok, ("ratios " + ", ".join(f"{r:.3f}" for r in ratios)
                + f" (in [6.5, 9.5]); exact-vs-oracle {worst_orc:.2e} (<=1e-8)")


def check_routes(params: PhysParams) -> tuple[bool, str]:
    pa = params if params.alpha != 0.0 else params.with_alpha(-0.01)
    pert = vacuum_density_pert(pa).density_pert
    exact, _ = vacuum_density_direct(pa, MomentumGrid(), "exact")
    rel = abs(exact - pert) / abs(pert)
    pairs_neg = all(exact_delta(ModeIndex(-1, p), pa) + exact_delta(ModeIndex(-1, -p), pa) < 0
                    for p in (0.0, 0.5, 1.0, 2.0, 3.0))
    ok = rel <= 0.01 and pert < 0 and exact < 0 and pairs_neg
    return ok, (f"density_pert {pert:.6e}, density_exact {exact:.6e}, "
                f"relative gap {rel:.2e} (<=1e-2), pair sums negative: {pairs_neg}")


def check_oracle(params: PhysParams) -> tuple[bool, str]:
    worst = 0.0
    for alpha in (-0.01, -0.1):
        pa = params.with_alpha(alpha)
        run = OdeRun.seeded(pa)
        for mode in _modes():
            ex = mode_energy(evolve_exact(mode, pa, 0.0), mode, pa)
            orc = mode_energy(evolve_ode(mode, pa, run), mode, pa)
            worst = max(worst, abs(ex - orc))
    return worst <= 1e-8, f"max |exact-oracle| energy {worst:.2e} (<=1e-8)"


GROUPS: dict[str, Callable[[PhysParams], tuple[bool, str]]] = {
    "specfun": check_specfun,
    "norms": check_norms,
    "identities": check_identities,
    "scaling": check_scaling,
    "routes": check_routes,
    "oracle": check_oracle,
}


def run_groups(params: PhysParams, names=None):
    """Yield ``(name, passed, detail)``; a raised error counts as a failure."""
    for name in names or GROUPS:
        try:
            ok, detail = GROUPS[name](params)
        except Exception as exc:  # numerical failures are reported, not raised
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        yield name, ok, detail
