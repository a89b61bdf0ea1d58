"""Exact Picard-lattice, Cremona-orbit and base-point computations for blow-ups of the plane."""
from .catalog import (
    FamilyInventory,
    admissible_degrees,
    closed_form_size,
    config_size,
    inventory,
    support_max,
    thresholds,
)
from .cones import (
    RayReport,
    Verdict,
    WeightAssignment,
    build_candidate_class,
    classify_ray,
    conjecture_screen,
    orbit_k_invariance_check,
    search_candidate_degrees,
)
from .cremona import (
    Permute,
    Reflect,
    WeylWord,
    apply_word,
    cremona_reduce,
    enumerate_neg1,
    orbit_ball,
    permute,
    reflect,
    same_orbit,
)
from .errors import PicardLabError
from .lattice import (
    DivisorClass,
    LatticeContext,
    QRegion,
    adjunction_genus,
    k_degree,
    pair,
    primitive,
    q_membership,
    self_int,
    support_count,
)
from .resolution import LocalType, ResolutionChain, chain_length, normalize_type, resolution_chain, simulate_blowups

__version__ = "0.1.0"
