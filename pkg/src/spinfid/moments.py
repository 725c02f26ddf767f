"""Gaussian wave-packet averages of powers of cos(Omega).

The moment of order k is

    m_k = 2 / (gamma sqrt(pi)) * int_0^inf exp(-u^2 / gamma^2) cos^k(Omega(u)) du

where ``u = sinh(xi) = p/mc`` and ``gamma`` is the momentum width in units
of mc.  Writing the average in ``u`` rather than ``xi`` absorbs the
``cosh(xi)`` Jacobian exactly and keeps the weight a plain Gaussian.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

from scipy.integrate import quad

from .errors import ConvergenceError, PreconditionError
from .kinematics import cos_omega_u


class MomentumSupport(enum.Enum):
    """Which momenta the Gaussian packet covers.

    POSITIVE: every particle moves along +x, u in [0, inf).
    SYMMETRIC: the packet is centred on p = 0, u in (-inf, inf).
    """

    POSITIVE = "positive"
    SYMMETRIC = "symmetric"


@dataclass(frozen=True)
class QuadratureSettings:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_subdivisions: int = 200
    truncation_sigmas: float = 6.5

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise PreconditionError("quadrature tolerances must be positive")
        if self.max_subdivisions < 1:
            raise PreconditionError("max_subdivisions must be >= 1")
        if self.truncation_sigmas < 4:
            raise PreconditionError("truncation_sigmas must be >= 4")


DEFAULT_SETTINGS = QuadratureSettings()


@dataclass(frozen=True)
class WignerMoments:
    m1: float
    m2: float
    m3: float

    def as_tuple(self):
        return (self.m1, self.m2, self.m3)


def _check(k, gamma):
    if k not in (1, 2, 3):
        raise PreconditionError(f"moment order must be 1, 2 or 3, got {k}")
    if not (gamma > 0 and math.isfinite(gamma)):
        raise PreconditionError(f"gamma must be positive, got {gamma}")


def _clip(value):
    # |cos^k| <= 1; quadrature round-off can land one ulp outside
    return min(1.0, max(-1.0, value))


def gaussian_average(func, gamma, settings=DEFAULT_SETTINGS):
    """Average of ``func(u)`` over u >= 0 under the normalized half-Gaussian."""
    upper = settings.truncation_sigmas * gamma
    inv_g2 = 1.0 / (gamma * gamma)

    def integrand(u):
        return math.exp(-u * u * inv_g2) * func(u)

    out = quad(
        integrand,
        0.0,
        upper,
        epsabs=settings.abs_tol,
        epsrel=settings.rel_tol,
        limit=settings.max_subdivisions,
        full_output=1,
    )
    value, err = out[0], out[1]
    norm = 2.0 / (gamma * math.sqrt(math.pi))
    if len(out) > 3:
        raise ConvergenceError(
            f"quadrature did not converge: {out[3].splitlines()[0]}",
            norm * value,
            norm * err,
        )
    return norm * value


def wigner_moment(
    k: int,
    gamma: float,
    eta: float,
    theta: float = 0.0,
    settings: QuadratureSettings = DEFAULT_SETTINGS,
    support: MomentumSupport = MomentumSupport.POSITIVE,
) -> float:
    """Gaussian average of cos^k(Omega) for one particle.

    With ``support=SYMMETRIC`` the packet covers both directions of motion,
    i.e. the average of the +u and -u integrands.  At ``theta = 0`` the two
    supports agree because cos(Omega) is even in u.
    """
    _check(k, gamma)
    if eta < 0:
        raise PreconditionError(f"eta must be >= 0, got {eta}")
    if support is MomentumSupport.POSITIVE:
        func = lambda u: cos_omega_u(u, eta, theta) ** k  # noqa: E731
    else:
        func = lambda u: 0.5 * (  # noqa: E731
            cos_omega_u(u, eta, theta) ** k + cos_omega_u(-u, eta, theta) ** k
        )
    return _clip(gaussian_average(func, gamma, settings))


def asymptotic_moment(
    k: int, gamma: float, settings: QuadratureSettings = DEFAULT_SETTINGS
) -> float:
    """Limit of ``wigner_moment(k, gamma, eta, 0)`` as eta -> infinity.

    At theta = 0 the rotation tends to cos(Omega) = 1/cosh(xi), so the
    integrand becomes (1 + u^2)^(-k/2).
    """
    _check(k, gamma)
    return _clip(gaussian_average(lambda u: (1.0 + u * u) ** (-0.5 * k), gamma, settings))


@lru_cache(maxsize=4096)
def compute_moments(
    gamma: float,
    eta: float,
    theta: float = 0.0,
    settings: QuadratureSettings = DEFAULT_SETTINGS,
    support: MomentumSupport = MomentumSupport.POSITIVE,
) -> WignerMoments:
    """All three moments for one (gamma, eta, theta) point."""
    return WignerMoments(
        *(wigner_moment(k, gamma, eta, theta, settings, support) for k in (1, 2, 3))
    )
