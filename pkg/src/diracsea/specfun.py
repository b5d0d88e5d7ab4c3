"""Kummer's confluent hypergeometric function for complex parameters.

Only the power series is used.  It is reliable for moderate ``|z|``
(documented domain ``|z| <= 30``); in this package the argument is
``z = iR`` with ``R = O(1)`` or smaller.  For ``Re z < 0`` the series is
evaluated through Kummer's transformation ``M(a, b, z) = e^z M(b - a, b, -z)``
so that the partial sums do not suffer from alternating-sign cancellation.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace

from .errors import InvalidParams, NonConvergence

DEFAULT_TOL = 1e-13
DEFAULT_MAX_TERMS = 10_000


def _is_nonpositive_integer(x: complex) -> bool:
    return x.imag == 0.0 and x.real <= 0.0 and x.real == math.floor(x.real)


@dataclass(frozen=True)
class KummerParams:
    """Arguments of ``M(J, K, z) = 1F1(J; K; z)`` plus convergence control."""

    J: complex
    K: complex
    z: complex
    tol: float = DEFAULT_TOL
    max_terms: int = DEFAULT_MAX_TERMS

    def __post_init__(self):
        object.__setattr__(self, "J", complex(self.J))
        object.__setattr__(self, "K", complex(self.K))
        object.__setattr__(self, "z", complex(self.z))
        if _is_nonpositive_integer(self.K):
            raise InvalidParams(f"K={self.K} is a nonpositive integer")
        if not self.tol > 0.0:
            raise InvalidParams(f"tol must be positive, got {self.tol}")
        if self.max_terms < 2:
            raise InvalidParams(f"max_terms must be >= 2, got {self.max_terms}")

    def shifted(self, k: int = 1) -> "KummerParams":
        """Parameters with ``J`` and ``K`` both raised by ``k``."""
        return replace(self, J=self.J + k, K=self.K + k)


def _series(J: complex, K: complex, z: complex, tol: float, max_terms: int) -> complex:
    # term_{n+1} = term_n * (J + n)/(K + n) * z/(n + 1)
    term = 1.0 + 0.0j
    total = 1.0 + 0.0j
    if z == 0:
        return total
    for n in range(max_terms):
        term = term * (J + n) / (K + n) * z / (n + 1)
        total += term
        if term == 0:
            return total
        # the partial sums only settle once n has passed the hump near |z|
        if abs(term) <= tol * abs(total) and n + 1 > abs(z):
            return total
    raise NonConvergence(
        f"Kummer series did not reach tol={tol} in {max_terms} terms "
        f"(J={J}, K={K}, z={z})"
    )


def kummer_phi(params: KummerParams) -> complex:
    """Evaluate ``M(J, K, z)`` by term-ratio summation.

    Raises
    ------
    NonConvergence
        If ``max_terms`` terms are summed without the last term dropping
        below ``tol`` times the running sum.
    """
    J, K, z = params.J, params.K, params.z
    if z.real < 0.0:
        return cmath.exp(z) * _series(K - J, K, -z, params.tol, params.max_terms)
    return _series(J, K, z, params.tol, params.max_terms)


def kummer_phi_prime(params: KummerParams) -> complex:
    """dM/dz through the contiguous relation ``M' = (J/K) M(J+1, K+1, z)``."""
    if params.J == 0:
        return 0j
    return params.J / params.K * kummer_phi(params.shifted(1))


def kummer_phi_second(params: KummerParams) -> complex:
    """d²M/dz² = J(J+1)/(K(K+1)) M(J+2, K+2, z)."""
    J, K = params.J, params.K
    coef = J * (J + 1) / (K * (K + 1))
    if coef == 0:
        return 0j
    return coef * kummer_phi(params.shifted(2))


def kummer_residual(params: KummerParams) -> float:
    """Scaled residual of Kummer's equation ``z w'' + (K - z) w' - J w = 0``."""
    J, K, z = params.J, params.K, params.z
    phi = kummer_phi(params)
    d1 = kummer_phi_prime(params)
    d2 = kummer_phi_second(params)
    return abs(z * d2 + (K - z) * d1 - J * phi) / max(1.0, abs(phi))
