import cmath
import math

import pytest

from diracsea import oracle
from diracsea.errors import InvalidParams, NonConvergence, SeedRegimeViolation, StepLimitExceeded
from diracsea.exact import asymptotic_state, evolve_exact, switch_profile
from diracsea.modes import ModeIndex, PhysParams, mode_energy
from diracsea.oracle import OdeRun, evolve_ode, evolve_ode_with_stats, quad_semi_infinite

P = PhysParams(alpha=-0.01)


def test_tableau_consistency():
    rows = [
        (oracle._C2, [oracle._A21]),
        (oracle._C3, [oracle._A31, oracle._A32]),
        (oracle._C4, [oracle._A41, oracle._A42, oracle._A43]),
        (oracle._C5, [oracle._A51, oracle._A52, oracle._A53, oracle._A54]),
        (1.0, [oracle._A61, oracle._A62, oracle._A63, oracle._A64, oracle._A65]),
    ]
    for c, a in rows:
        assert sum(a) == pytest.approx(c, abs=1e-14)
    assert oracle._B1 + oracle._B3 + oracle._B4 + oracle._B5 + oracle._B6 == pytest.approx(1, abs=1e-15)
    errs = (oracle._E1, oracle._E3, oracle._E4, oracle._E5, oracle._E6, oracle._E7)
    assert sum(errs) == pytest.approx(0, abs=1e-15)


def test_run_validation():
    with pytest.raises(InvalidParams):
        OdeRun(t_start=-1.0, t_end=0.5)
    with pytest.raises(InvalidParams):
        OdeRun(t_start=0.0, t_end=0.0)
    with pytest.raises(InvalidParams):
        OdeRun(t_start=-1.0, tol=0.0)


def test_seeded_window_starts_at_threshold():
    run = OdeRun.seeded(P, threshold=1e-12)
    assert run.t_start < 0
    assert switch_profile(P, run.t_start)[0] == pytest.approx(1e-12, rel=1e-9)


def test_seed_regime_guard():
    with pytest.raises(SeedRegimeViolation):
        evolve_ode(ModeIndex(-1, 1.0), P, OdeRun(t_start=-5.0))


def test_step_limit():
    with pytest.raises(StepLimitExceeded):
        evolve_ode(ModeIndex(-1, 1.0), P, OdeRun.seeded(P, max_steps=50))


@pytest.mark.parametrize("lam", [1, -1])
def test_zero_field_phase(lam):
    params = PhysParams(alpha=0.0)
    mode = ModeIndex(lam, 1.3)
    run = OdeRun(t_start=-7.0, t_end=-0.5, tol=1e-12)
    s = evolve_ode(mode, params, run)
    seed = asymptotic_state(mode, params, -7.0)
    ph = cmath.exp(-1j * lam * mode.energy(1.0) * 6.5)
    assert abs(s.C - ph * seed.C) < 1e-9 and abs(s.D - ph * seed.D) < 1e-9


def test_reference_mode_agrees_with_closed_form():
    mode = ModeIndex(-1, 1.0)
    s, stats = evolve_ode_with_stats(mode, P, OdeRun.seeded(P, tol=1e-12))
    e_ode = mode_energy(s, mode, P)
    e_exact = mode_energy(evolve_exact(mode, P, 0.0), mode, P)
    assert abs(e_ode - e_exact) <= 1e-8
    assert stats.norm_drift <= 1e-10


def test_tightening_tolerance_reduces_error():
    mode = ModeIndex(1, 2.0)
    params = PhysParams(alpha=-0.1)
    e_exact = mode_energy(evolve_exact(mode, params, 0.0), mode, params)
    errs = []
    for tol in (1e-6, 1e-8, 1e-10):
        s = evolve_ode(mode, params, OdeRun.seeded(params, tol=tol))
        errs.append(abs(mode_energy(s, mode, params) - e_exact))
    # global error tracks the local tolerance: two decades per two decades
    for e0, e1 in zip(errs, errs[1:]):
        assert 30 < e0 / e1 < 300
    assert errs[2] < 1e-7


def test_intermediate_time():
    mode = ModeIndex(1, -0.5)
    params = PhysParams(alpha=-0.2)
    run = OdeRun.seeded(params, t_end=-1.5)
    s = evolve_ode(mode, params, run)
    e = evolve_exact(mode, params, -1.5)
    assert s.shifted_momentum == pytest.approx(e.shifted_momentum, abs=1e-15)
    assert abs(s.C - e.C) < 1e-8 * abs(e.C) + 1e-9
    assert abs(s.D - e.D) < 1e-8 * abs(e.D) + 1e-9


def test_quad_vacuum_integrand_against_closed_reduction():
    closed = 2 / math.sqrt(5) * math.log((math.sqrt(5) + 1) / (math.sqrt(5) - 1))
    val = quad_semi_infinite(lambda p: 4 / (math.hypot(p, 1) * (4 * (p * p + 1) + 1)))
    assert val == pytest.approx(closed, abs=1e-9)


@pytest.mark.parametrize("f,expected", [
    (lambda p: math.exp(-p), 1.0),
    (lambda p: 1 / (1 + p * p), math.pi / 2),
    (lambda p: 1 / (1 + p) ** 3, 0.5),
])
def test_quad_known_integrals(f, expected):
    assert quad_semi_infinite(f, tol=1e-10) == pytest.approx(expected, rel=1e-10)


def test_quad_scale_argument():
    # int_0^inf m^2/(p^2+m^2)^{3/2} dp = 1
    m = 3.0
    val = quad_semi_infinite(lambda p: m * m / (p * p + m * m) ** 1.5, scale=m)
    assert val == pytest.approx(1.0, rel=1e-10)


def test_quad_non_decaying():
    with pytest.raises(NonConvergence):
        quad_semi_infinite(lambda p: 1 / (1 + p), u_max=60)
