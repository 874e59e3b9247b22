"""Skew-information correlation measures (UIN, MUIN, LQU) for ``2 x d`` bipartite states."""

from .channels import (
    KrausChannel,
    SweepSeries,
    amplitude_damping,
    apply_channel_b,
    depolarizing,
    phase_damping,
    sweep,
)
from .errors import (
    MeasureRangeError,
    NotPositiveSemidefiniteError,
    PurityError,
    UnsupportedDimensionError,
    ValidationError,
)
from .linalg import hellinger_sq, hermitian_eig, kron, matrix_sqrt, partial_trace_a, partial_trace_b
from .measures import (
    MeasureValue,
    Observable,
    direction_observable,
    lqu,
    min_hs,
    muin,
    skew_information,
    uin,
    uin_pure,
    w_matrix,
)
from .states import (
    BipartiteState,
    DensityMatrix,
    bell_state,
    bloch_vector_a,
    example_state,
    product_state,
    random_density,
    random_pure,
    random_unitary,
    validate_density,
)

__version__ = "0.1.0"
