"""Three-spin density matrices and spin fidelities.

Basis order is |s1 s2 s3> with up = 0, down = 1 and particle 1 most
significant, so the row index is 4*b1 + 2*b2 + b3.
"""

from __future__ import annotations

import enum

import numpy as np

from .errors import ConsistencyError, InvalidStateError, PreconditionError
from .moments import WignerMoments

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
NEGATIVE_EIG_TOL = 1e-10
# eigenvalues this small are round-off from rank-deficient inputs; the matrix
# square root is not Lipschitz at zero, so they must not reach np.sqrt
ZERO_EIG_CUTOFF = 1e-14


class SpinState(enum.Enum):
    GHZ = "ghz"
    W = "w"


class Correlation(enum.Enum):
    PRODUCT = "product"
    PAIR = "pair"
    TRIPLE = "triple"


def state_vector(state: SpinState) -> np.ndarray:
    psi = np.zeros(8, dtype=complex)
    if state is SpinState.GHZ:
        psi[[0, 7]] = 1 / np.sqrt(2)
    else:
        # up-down-down, down-up-down, down-down-up
        psi[[3, 5, 6]] = 1 / np.sqrt(3)
    return psi


def rest_density(state: SpinState) -> np.ndarray:
    """Pure rest-frame spin density matrix of a GHZ or W state."""
    rho = np.zeros((8, 8), dtype=complex)
    if state is SpinState.GHZ:
        idx = [0, 7]
        rho[np.ix_(idx, idx)] = 0.5
    else:
        idx = [3, 5, 6]
        rho[np.ix_(idx, idx)] = 1 / 3
    rho.flags.writeable = False
    return rho


def check_density(rho: np.ndarray, name: str = "rho") -> np.ndarray:
    """Validate an 8x8 density matrix and return it as a complex array."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (8, 8):
        raise InvalidStateError(f"{name} must be 8x8, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > HERMITIAN_TOL:
        raise InvalidStateError(f"{name} is not Hermitian")
    if abs(np.trace(rho) - 1) > TRACE_TOL:
        raise InvalidStateError(f"{name} has trace {np.trace(rho).real!r}, not 1")
    if np.linalg.eigvalsh(rho)[0] < -NEGATIVE_EIG_TOL:
        raise InvalidStateError(f"{name} is not positive semidefinite")
    return rho


def _clamped_eigh(m):
    m = 0.5 * (m + m.conj().T)
    vals, vecs = np.linalg.eigh(m)
    if vals[0] < -NEGATIVE_EIG_TOL:
        raise InvalidStateError(f"matrix has eigenvalue {vals[0]:.3e} < 0")
    vals = np.where(vals < ZERO_EIG_CUTOFF, 0.0, vals)
    return vals, vecs


def psd_sqrt(m: np.ndarray) -> np.ndarray:
    """Principal square root of a Hermitian PSD matrix by eigendecomposition."""
    vals, vecs = _clamped_eigh(np.asarray(m, dtype=complex))
    return (vecs * np.sqrt(vals)) @ vecs.conj().T


def uhlmann_fidelity(rho: np.ndarray, sigma: np.ndarray) -> float:
    """Uhlmann fidelity ``[Tr sqrt(sqrt(rho) sigma sqrt(rho))]^2``."""
    rho = check_density(rho, "rho")
    sigma = check_density(sigma, "sigma")
    root = psd_sqrt(rho)
    vals, _ = _clamped_eigh(root @ sigma @ root)
    return float(np.sum(np.sqrt(vals)) ** 2)


def pure_fidelity_against(rho_pure: np.ndarray, sigma: np.ndarray) -> float:
    """Fidelity when the first state is pure: ``Tr(rho_pure sigma)``."""
    rho_pure = check_density(rho_pure, "rho_pure")
    sigma = check_density(sigma, "sigma")
    if abs(np.linalg.eigvalsh(rho_pure)[-1] - 1) > 1e-10:
        raise PreconditionError("rho_pure is not rank one")
    return float(np.real(np.sum(rho_pure.T * sigma)))


def _ghz_poly(corr, m1, m2, m3):
    if corr is Correlation.PRODUCT:
        return (m1**3 + 3 * m1**2 + 3 * m1 + 1) / 8
    if corr is Correlation.PAIR:
        return (m1 * m2 + 2 * m1**2 + m2 + 3 * m1 + 1) / 8
    return (m3 + 3 * m2 + 3 * m1 + 1) / 8


def _w_poly(corr, m1, m2, m3):
    if corr is Correlation.PRODUCT:
        return (7 * m1**3 + 5 * m1**2 + 5 * m1 + 7) / 24
    if corr is Correlation.PAIR:
        return (39 * m1 * m2 + 7 * m2 + 10 * m1**2 - 3 * m1 + 19) / 72
    return (75 * m3 + 25 * m2 - 39 * m1 + 11) / 72


def _checked(value):
    if not (0.0 <= value <= 1.0 + 1e-12):
        raise ConsistencyError(f"fidelity {value!r} outside [0, 1]")
    return value


def closed_form_fidelity(
    state: SpinState, corr: Correlation, moments: WignerMoments
) -> float:
    """Published spin-fidelity polynomial in the Wigner moments."""
    poly = _ghz_poly if state is SpinState.GHZ else _w_poly
    return _checked(poly(corr, *moments.as_tuple()))


def symmetric_w_fidelity(corr: Correlation, moments: WignerMoments) -> float:
    """W-state fidelity polynomial for a packet symmetric about p = 0.

    Obtained by expanding <W|D1 D2 D3|W>^2 and averaging with every
    odd-in-sin(Omega) term set to zero.  The product case coincides with
    the published polynomial; the two correlated cases do not.  In the
    fully correlated case no odd terms arise, so it holds on any support.
    """
    m1, m2, m3 = moments.as_tuple()
    if corr is Correlation.PRODUCT:
        value = (7 * m1**3 + 5 * m1**2 + 5 * m1 + 7) / 24
    elif corr is Correlation.PAIR:
        value = (41 * m1 * m2 + 9 * m2 + 10 * m1**2 - 5 * m1 + 17) / 72
    else:
        value = (9 * m3 + 3 * m2 - 5 * m1 + 1) / 8
    return _checked(value)
