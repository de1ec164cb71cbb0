"""Three-flavor neutrino oscillations in the time-averaged wave-packet
description: flavor-basis density matrices, transition probabilities and
mixed-state entanglement measures (pairwise concurrence, bipartition
logarithmic negativity)."""

from nuflavor._core import (
    HBAR_C_EV_M,
    SWEEP_COLUMNS,
    CrossValidationError,
    MixingAngles,
    OscillationParams,
    asymptotic_kernel,
    average_log_negativity,
    concurrence,
    concurrence_general,
    decoherence_factor,
    default_params,
    density_matrix,
    flavor_kernel,
    log_negativity,
    log_negativity_general,
    make_params,
    partial_trace,
    partial_transpose,
    phase_argument,
    pmns_matrix,
    report,
    spin_flip,
    sweep,
    trace_norm,
    transition_probability,
)

__all__ = [
    "HBAR_C_EV_M",
    "SWEEP_COLUMNS",
    "CrossValidationError",
    "MixingAngles",
    "OscillationParams",
    "asymptotic_kernel",
    "average_log_negativity",
    "concurrence",
    "concurrence_general",
    "decoherence_factor",
    "default_params",
    "density_matrix",
    "flavor_kernel",
    "log_negativity",
    "log_negativity_general",
    "make_params",
    "partial_trace",
    "partial_transpose",
    "phase_argument",
    "pmns_matrix",
    "report",
    "spin_flip",
    "sweep",
    "trace_norm",
    "transition_probability",
]

__version__ = "0.1.0"
