"""Exact, perturbative and brute-force energetics of the 1+1D Dirac sea
under a switched uniform electric field."""
from .errors import (CutoffTooSmall, DiracSeaError, DomainError, IdentityMismatch,
                     InvalidParams, NonConvergence, NumericalFailure,
                     SeedRegimeViolation, StepLimitExceeded)
from .exact import (ExactCoeffs, ModeState, asymptotic_state, evolve_exact, field,
                    free_evolve, potential, seed_time, switch_profile)
from .modes import ModeIndex, PhysParams, Spinor2, free_spinor, mode_energy, mode_norm
from .oracle import OdeRun, evolve_ode, quad_semi_infinite
from .perturb import (EnergyBreakdown, delta_eps, energy_breakdown, eps0, eps1, eps2,
                      ratio_identities, pair_sum, series_products)
from .specfun import KummerParams, kummer_phi, kummer_phi_prime, kummer_residual
from .vacuum import (MomentumGrid, VacuumResult, vacuum_density_direct,
                     vacuum_density_pert)

__version__ = "0.1.0"
