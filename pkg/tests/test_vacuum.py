import math

import numpy as np
import pytest

from diracsea.errors import CutoffTooSmall, InvalidParams
from diracsea.modes import PhysParams
from diracsea.vacuum import (MomentumGrid, pair_values, tail_bound, vacuum_density_direct,
                             vacuum_density_pert, vacuum_energy, vacuum_integral)

P = PhysParams(alpha=-0.01)
CLOSED_I = 2 / math.sqrt(5) * math.log((math.sqrt(5) + 1) / (math.sqrt(5) - 1))


def test_integral_closed_reduction():
    assert CLOSED_I == pytest.approx(0.86081788, abs=1e-8)
    res = vacuum_density_pert(P)
    assert res.integral_I == pytest.approx(CLOSED_I, rel=1e-8)
    assert res.density_pert == pytest.approx(-P.alpha ** 2 * CLOSED_I / (2 * math.pi), rel=1e-8)
    assert res.density_pert == pytest.approx(-1.3700e-5, rel=1e-4)
    assert res.density_pert < 0


@pytest.mark.parametrize("c", [-0.3, -1.0, -2.5])
@pytest.mark.parametrize("m", [0.5, 1.0, 2.0])
def test_integral_general_closed_form(m, c):
    # p = m sinh(v/2) turns the integral into 2m^2 int_0^inf dv/(a + b cosh v)
    a, b = 2 * m * m + c * c, 2 * m * m
    s = math.sqrt(a * a - b * b)
    closed = 2 * m * m / s * math.log((a + b + s) / (a + b - s))
    assert vacuum_integral(PhysParams(m=m, cdecay=c)) == pytest.approx(closed, rel=1e-9)


def test_zero_field_and_massless_limits():
    assert vacuum_density_pert(PhysParams(alpha=0.0)).density_pert == 0.0
    assert vacuum_density_pert(PhysParams(m=1e-8)).density_pert == pytest.approx(0, abs=1e-15)


def test_grid_nodes():
    for scheme in ("uniform", "sinh"):
        g = MomentumGrid(p_max=10, n_points=33, scheme=scheme)
        _, p = g.nodes()
        assert p[0] == 0 and p[-1] == 10
        assert np.all(np.diff(p) > 0)
    with pytest.raises(InvalidParams):
        MomentumGrid(p_max=0)
    with pytest.raises(InvalidParams):
        MomentumGrid(n_points=1)


def test_perturbative_route_reproduces_integral():
    dens, bound = vacuum_density_direct(P, MomentumGrid(p_max=2000, n_points=2049), "perturbative")
    ref = vacuum_density_pert(P).density_pert
    assert abs(dens - ref) <= bound
    assert dens == pytest.approx(ref, rel=1e-6)


def test_uniform_scheme_agrees():
    a, _ = vacuum_density_direct(P, MomentumGrid(scheme="uniform", n_points=4001), "perturbative")
    b, _ = vacuum_density_direct(P, MomentumGrid(), "perturbative")
    assert a == pytest.approx(b, rel=1e-7)


def test_exact_route_close_to_perturbative():
    res = vacuum_energy(P)
    assert res.density_exact < 0
    assert res.density_exact == pytest.approx(res.density_pert, rel=0.01)


def test_oracle_route_pointwise():
    p = np.linspace(0, 4, 9)
    exact = pair_values(P, p, "exact")
    orc = pair_values(P, p, "oracle")
    assert np.abs(exact - orc).max() <= 1e-8


def test_cutoff_convergence():
    d1, b1 = vacuum_density_direct(P, MomentumGrid(p_max=25), "exact")
    d2, _ = vacuum_density_direct(P, MomentumGrid(p_max=50), "exact")
    assert abs(d2 - d1) < b1


def test_grid_refinement():
    d1, _ = vacuum_density_direct(P, MomentumGrid(n_points=513), "exact")
    d2, _ = vacuum_density_direct(P, MomentumGrid(n_points=1025), "exact")
    assert abs(d2 - d1) < 1e-8 * abs(d1)


def test_tail_bound_covers_pair_sum():
    p = np.array([10.0, 50.0, 200.0])
    vals = np.abs(pair_values(P, p, "exact"))
    # second order sits below alpha^2 m^2/p^3; the factor 2 in the bound
    # absorbs higher orders and cancellation error
    assert np.all(vals <= 2 * P.alpha ** 2 * P.m ** 2 / p ** 3)
    assert tail_bound(P, 50.0) == pytest.approx(2e-4 / (2 * 2500) / (2 * math.pi))


def test_small_cutoff_rejected():
    with pytest.raises(CutoffTooSmall):
        vacuum_density_direct(P, MomentumGrid(p_max=0.1))


def test_deterministic():
    a = vacuum_density_direct(P, MomentumGrid(n_points=129))
    b = vacuum_density_direct(P, MomentumGrid(n_points=129))
    assert a == b
