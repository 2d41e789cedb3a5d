"""Classification predicates: absorbing ideals, omega values, ring classes."""
from .absorbing import (
    colon_stabilization_check,
    is_associated,
    is_n_absorbing,
    is_S_n_absorbing,
    is_S_n_absorbing_relaxed,
    is_S_n_absorbing_via_colon,
    minimal_s_n_absorbing_over,
    omega,
    omega_bound,
    omega_table,
    replay_counterexample,
    s_variant_predicates,
    time_cap,
)
from .ring_classes import ring_class_predicates

__all__ = [
    "colon_stabilization_check",
    "is_associated",
    "is_n_absorbing",
    "is_S_n_absorbing",
    "is_S_n_absorbing_relaxed",
    "is_S_n_absorbing_via_colon",
    "minimal_s_n_absorbing_over",
    "omega",
    "omega_bound",
    "omega_table",
    "replay_counterexample",
    "ring_class_predicates",
    "s_variant_predicates",
    "time_cap",
]
