"""Star orbits of rotational star maps: heights, train tracks, rotation intervals and pruning."""

from .errors import DomainError
from .farey import admissible_set, farey_parents, left_farey_sequence, xi_inverse, xi_map
from .height import decoration_qw, height, orbit_height, parse_code, prefix_word, star_decoration
from .pruning import construct_from_horseshoe, endo_equivalent, f_endo, g_endo, procedure_L, procedure_R
from .rotation import markov_rotation_interval, rotation_interval_of_code, star_rotation_number
from .starorbit import (
    StarData,
    build_tt_orbit_A,
    build_tt_orbit_B,
    enumerate_orbits,
    horseshoe_code,
    is_train_track,
    renormalize_phi,
    renormalize_psi,
    validate_data,
)
from .symbolic import EventuallyPeriodicSeq, is_maximal_code, unimodal_compare
from .traintrack import build_bh_graph, check_efficient, growth_rate, has_star_train_track

__all__ = [
    "DomainError",
    "EventuallyPeriodicSeq",
    "StarData",
    "admissible_set",
    "build_bh_graph",
    "build_tt_orbit_A",
    "build_tt_orbit_B",
    "check_efficient",
    "construct_from_horseshoe",
    "decoration_qw",
    "endo_equivalent",
    "enumerate_orbits",
    "f_endo",
    "farey_parents",
    "g_endo",
    "growth_rate",
    "has_star_train_track",
    "height",
    "horseshoe_code",
    "is_maximal_code",
    "is_train_track",
    "left_farey_sequence",
    "markov_rotation_interval",
    "orbit_height",
    "parse_code",
    "prefix_word",
    "procedure_L",
    "procedure_R",
    "renormalize_phi",
    "renormalize_psi",
    "rotation_interval_of_code",
    "star_decoration",
    "star_rotation_number",
    "unimodal_compare",
    "validate_data",
    "xi_inverse",
    "xi_map",
]
