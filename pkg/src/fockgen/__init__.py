"""Deterministic N-photon Fock-state generation toolkit.

Symmetric-basis Hilbert spaces, the dark-state family with its closed-form
photon statistics, analytic error bounds, and open-system quantum-trajectory
ensembles for N three-level atoms in a driven cavity.
"""

from .basis import Manifold, SymmetricState, enumerate_manifold, manifold_dimension, state_index
from .bounds import (
    BoundReport,
    bound_adiabatic,
    bound_cavity,
    build_bound_report,
    fractional_loss_bound,
    small_photon_params,
    spont_rate_large_delta,
    spont_rate_small_delta,
)
from .darkstates import (
    DarkDerivatives,
    DarkState,
    PropertySuiteReport,
    avg_photons,
    dark_derivatives,
    dark_state,
    dark_state_from_rates,
    max_angular_velocity_bound,
    normalization,
    property_suite,
)
from .ensemble import EnsembleStats, run_ensemble, sweep
from .operators import (
    SparseOperator,
    SystemParams,
    build_cavity_jump,
    build_conditional,
    build_hamiltonian,
    build_number_operator,
    build_spont_jump,
)
from .pulses import ConstantDrive, GaussianPulse, LinearRamp, PiecewiseLinear, pulse_from_config
from .spectral import (
    SpectrumReport,
    degenerate_crossing_scan,
    eigendecompose,
    exact_nondarkness_adiabatic,
    exact_nondarkness_cavity,
    min_bohr_frequency,
    schwinger_limit_check,
    tavis_cummings_check,
)
from .config import ConfigError, SimulationConfig
from .trajectory import TrajectoryEngine, TrajectoryRecord, TrajectoryState, run_trajectory

__version__ = "0.1.0"
