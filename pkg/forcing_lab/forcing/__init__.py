"""Color change rules, forts and exhaustive forcing-set search."""

from .engine import (
    PreconditionError,
    forced_in_round,
    is_forcing_set,
    is_slow_forcing_set,
    propagate,
    propagation_time,
    psd_reduce_set,
    step,
)
from .forts import (
    enumerate_forts,
    hits_all_forts,
    is_fort,
    is_psd_fort,
    is_standard_fort,
    minimum_fort_transversal_size,
)
from .search import (
    ForcingScan,
    clear_scan_cache,
    enumerate_forcing_families,
    fixed_pt,
    fixed_pt_census,
    forcing_number,
    forcing_report,
    lower_pt,
    min_psd_set_with_connected_complement,
    pt_sets,
    scan_forcing_sets,
    throttling,
    throttling_of_set,
    time_witnesses,
    upper_forcing_number,
    upper_pt,
    verify_no_fixed_psd_above_one,
)

__all__ = [
    "ForcingScan",
    "PreconditionError",
    "clear_scan_cache",
    "enumerate_forcing_families",
    "enumerate_forts",
    "fixed_pt",
    "fixed_pt_census",
    "forced_in_round",
    "forcing_number",
    "forcing_report",
    "hits_all_forts",
    "is_forcing_set",
    "is_fort",
    "is_psd_fort",
    "is_slow_forcing_set",
    "is_standard_fort",
    "lower_pt",
    "min_psd_set_with_connected_complement",
    "minimum_fort_transversal_size",
    "propagate",
    "propagation_time",
    "psd_reduce_set",
    "pt_sets",
    "scan_forcing_sets",
    "step",
    "throttling",
    "throttling_of_set",
    "time_witnesses",
    "upper_forcing_number",
    "upper_pt",
    "verify_no_fixed_psd_above_one",
]
