"""Rapidities and the Wigner rotation for boosts in the xz-plane.

A particle moves along the x-axis with rapidity ``xi`` (``sinh xi = p/mc``).
The observer is boosted with rapidity ``eta`` along ``(sin theta, 0, cos theta)``.
The resulting Wigner rotation is about the y-axis by an angle Omega.

All array helpers take the signed reduced momentum ``u = p/mc`` directly;
the sign of ``u`` selects motion along +x or -x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class BoostGeometry:
    """Kinematic inputs: particle rapidity, boost rapidity, boost polar angle."""

    xi: float
    eta: float
    theta: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.xi):
            raise DomainError(f"particle rapidity must be finite, got {self.xi}")
        if not (math.isfinite(self.eta) and self.eta >= 0):
            raise DomainError(f"boost rapidity must be >= 0, got {self.eta}")
        if not 0.0 <= self.theta <= math.pi:
            raise DomainError(f"theta must lie in [0, pi], got {self.theta}")


@dataclass(frozen=True)
class WignerAngle:
    cos_omega: float
    sin_omega: float


def rapidity_from_beta(beta: float) -> float:
    """Rapidity of a speed given as a fraction of c."""
    if not abs(beta) < 1.0:
        raise DomainError(f"|beta| must be < 1 (superluminal input {beta})")
    return math.atanh(beta)


def beta_from_rapidity(eta: float) -> float:
    return math.tanh(eta)


def cos_omega_u(u, eta, theta):
    """cos(Omega) for signed reduced momentum ``u`` (scalar or array).

    Uses the regular rational form

        1 - cos^2(theta) (cosh eta - 1)(cosh xi - 1)
              / (1 + cosh eta cosh xi + sin theta sinh eta sinh xi)

    with both ``cosh - 1`` factors evaluated without cancellation, so
    ``eta = 0`` or ``u = 0`` give exactly 1.
    """
    u = np.asarray(u, dtype=float)
    ch = np.sqrt(1.0 + u * u)
    ch_m1 = u * u / (ch + 1.0)
    ce = math.cosh(eta)
    ce_m1 = 2.0 * math.sinh(0.5 * eta) ** 2
    den = 1.0 + ce * ch + math.sin(theta) * math.sinh(eta) * u
    out = 1.0 - math.cos(theta) ** 2 * (ce_m1 * ch_m1) / den
    return out if out.ndim else float(out)


def sin_omega_u(u, eta, theta):
    """Signed sin(Omega) for signed reduced momentum ``u``.

    Built from the half-angle relation in tanh form,
    ``cot(Omega/2) = (1 + s sin(theta) t) / (|cos(theta)| t)`` with
    ``t = tanh(|xi|/2) tanh(eta/2)``, which stays finite at ``xi = 0``.
    The rotation axis e x p / |e x p| is +y for p along +x and
    cos(theta) > 0; it flips with either sign.
    """
    u = np.asarray(u, dtype=float)
    s = np.where(u < 0, -1.0, 1.0)
    axi = np.arcsinh(np.abs(u))
    t = np.tanh(0.5 * axi) * math.tanh(0.5 * eta)
    c = math.cos(theta)
    a = 1.0 + s * math.sin(theta) * t
    b = abs(c) * t
    out = 2.0 * a * b / (a * a + b * b) * s * (1.0 if c >= 0 else -1.0)
    return out if out.ndim else float(out)


def cos_wigner_angle(geom: BoostGeometry, momentum_sign: int = 1) -> WignerAngle:
    """Wigner rotation angle for a particle moving along ``momentum_sign * x``.

    A negative ``geom.xi`` is read as motion opposite to ``momentum_sign``.
    """
    if momentum_sign not in (1, -1):
        raise DomainError(f"momentum_sign must be +1 or -1, got {momentum_sign}")
    u = momentum_sign * math.sinh(geom.xi)
    return WignerAngle(
        cos_omega_u(u, geom.eta, geom.theta),
        sin_omega_u(u, geom.eta, geom.theta),
    )


def half_angles(cos_omega, sin_omega):
    """cos(Omega/2) >= 0 and sin(Omega/2) carrying the sign of Omega.

    Near Omega = 0 the sine is taken from sin(Omega) / (2 cos(Omega/2)),
    which keeps full relative precision for small rotations.
    """
    cos_omega = np.clip(np.asarray(cos_omega, dtype=float), -1.0, 1.0)
    sin_omega = np.asarray(sin_omega, dtype=float)
    ch = np.sqrt(0.5 * (1.0 + cos_omega))
    sign = np.where(sin_omega < 0, -1.0, 1.0)
    from_sqrt = sign * np.sqrt(0.5 * (1.0 - cos_omega))
    with np.errstate(divide="ignore", invalid="ignore"):
        from_sin = sin_omega / (2.0 * ch)
    sh = np.where(ch >= 0.5, from_sin, from_sqrt)
    return ch, sh


def rotation_matrices(cos_omega, sin_omega) -> np.ndarray:
    """Stack of spin-1/2 rotations [[c, s], [-s, c]], shape ``(..., 2, 2)``."""
    c, s = half_angles(cos_omega, sin_omega)
    return np.stack([np.stack([c, s], -1), np.stack([-s, c], -1)], -2)


def wigner_rotation_matrix(angle: WignerAngle) -> np.ndarray:
    """2x2 real orthogonal spin rotation for a single Wigner angle."""
    return rotation_matrices(angle.cos_omega, angle.sin_omega)
