"""Numerical laboratory for spin information carried by Lorentz-boosted wave packets.

The library discretizes momentum-space spinor packets on quadrature grids, applies
the momentum-dependent spin rotation induced by an x-direction boost, reduces to
2x2 spin states, and checks which measurement statements survive the change of
frame: outcome statistics do not, record orthogonality does.
"""

__version__ = "0.1.0"

from .kinematics import (
    BoostParams,
    FourMomentum,
    apply_forward_boost,
    apply_inverse_boost,
    boost_params,
    momentum_on_shell,
    on_shell_energy,
    rapidity,
)
from .packets import (
    GaussianProfile,
    MomentumEigenstate,
    MomentumGrid,
    SpinorPacket,
    gauss_hermite_grid,
    gaussian_scalar,
    inner_product,
    rectangular_grid,
    sigma_x_packet,
    spinor_packet,
)
from .wigner import WignerMatrix, boost_packet, closed_form_sigma_x, wigner_matrix
from .spinreduce import (
    SpinDensityMatrix,
    analytic_delta,
    analytic_entropy,
    asymptotic_delta,
    pure_spin_state,
    reduce,
    von_neumann_entropy,
)
from .measurement import (
    ClickStats,
    EfficiencyReport,
    MeasurementSetup,
    SIGMA_X_BASIS,
    SIGMA_Z_BASIS,
    apparatus_states,
    boosted_orthogonality_residual,
    born_probabilities,
    click_simulator,
    cross_trace,
    detector_efficiency,
    make_setup,
    packet_efficiency,
    static_orthogonality_residual,
)
from .config import ExperimentConfig, emit_config, load_config, parse_config

__all__ = [name for name in dir() if not name.startswith("_")]
