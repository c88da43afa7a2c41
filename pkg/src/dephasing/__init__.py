"""Exact pure dephasing of two qubits and the decay of their concurrence."""

__version__ = "0.1.0"

from .bath import Bath, BathMode, OhmicSpec, discretize_ohmic, spectral_function, thermal_coth
from .entanglement import (
    ConcurrenceResult,
    ScanPoint,
    analytic_concurrence,
    analytic_mu,
    concurrence,
    product_law_concurrence,
    spin_flip,
    verify_upper_bound,
)
from .errors import (
    ConfigError,
    DephasingError,
    InvalidArgument,
    InvalidState,
    InvalidTime,
    NoConvergence,
    NotHermitian,
    NotPositive,
)
from .evolution import (
    DensityMatrix,
    DephasingFactors,
    QubitParams,
    bell_family_state,
    dephasing_factors,
    evolve,
    evolved_bell_family,
)
from .linalg import EigenDecomposition, adjoint, hermitian_eigen, matmul, psd_sqrt
