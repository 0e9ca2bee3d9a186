"""Kronecker coefficients for one hook shape via colored Yamanouchi tableaux."""
from .shapes import Cell, Partition, conjugate, hook_mu, is_ribbon, partitions_of, ribbon_components
from .orders import (
    Letter,
    SwitchStep,
    TotalOrder,
    adjacent_switch_path,
    all_orders,
    is_barred_tight,
    is_unbarred_tight,
    natural_order,
    small_bar_order,
)
from .tableaux import ColoredTableau, content_profile, enumerate_tableaux, toggle_southwest, validate
from .conversion import convert, convert_trace, switch
from .words import barred_word, is_alpha_ballot, is_ballot, total_word, unbarred_word
from .kronecker import (
    corner_split,
    kron_hook,
    kron_oracle,
    kron_sum,
    mn_character,
    verify_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "Cell",
    "Partition",
    "conjugate",
    "hook_mu",
    "is_ribbon",
    "partitions_of",
    "ribbon_components",
    "Letter",
    "SwitchStep",
    "TotalOrder",
    "adjacent_switch_path",
    "all_orders",
    "is_barred_tight",
    "is_unbarred_tight",
    "natural_order",
    "small_bar_order",
    "ColoredTableau",
    "content_profile",
    "enumerate_tableaux",
    "toggle_southwest",
    "validate",
    "convert",
    "convert_trace",
    "switch",
    "barred_word",
    "is_alpha_ballot",
    "is_ballot",
    "total_word",
    "unbarred_word",
    "corner_split",
    "kron_hook",
    "kron_oracle",
    "kron_sum",
    "mn_character",
    "verify_sweep",
]
