"""Spin fidelity of three-qubit GHZ and W wave packets seen by boosted observers."""

from .errors import (
    ConsistencyError,
    ConvergenceError,
    DomainError,
    InvalidStateError,
    PreconditionError,
    SpinFidError,
)
from .fidelity import (
    Correlation,
    SpinState,
    closed_form_fidelity,
    pure_fidelity_against,
    rest_density,
    symmetric_w_fidelity,
    uhlmann_fidelity,
)
from .kinematics import (
    BoostGeometry,
    WignerAngle,
    beta_from_rapidity,
    cos_wigner_angle,
    rapidity_from_beta,
    wigner_rotation_matrix,
)
from .moments import (
    MomentumSupport,
    QuadratureSettings,
    WignerMoments,
    asymptotic_moment,
    compute_moments,
    wigner_moment,
)
from .oracle import (
    MomentumGrid,
    boosted_density_oracle,
    build_momentum_grid,
    grid_moments,
    oracle_fidelity,
)

__version__ = "0.1.0"
