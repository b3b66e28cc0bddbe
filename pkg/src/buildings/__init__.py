"""Buildings of groups with a BN-pair: exact generation, verification, and
3D realization of spherical (GL3, GL4 over a prime field) and affine
(SL2, SL3 over Q with a p-adic valuation) chamber complexes."""

from .algebra import (
    EQUAL,
    INFINITY,
    BuildingSpec,
    Family,
    Fp,
    Matrix,
    bruhat_neighbor_type,
    bruhat_permutation,
    conjugate,
    fp_matrix,
    identity_matrix,
    is_in_B,
    nu_p,
    parse_rational,
    rational_matrix,
    rational_str,
    simple_reflections,
    valuation_pattern,
)
from .geometry import (
    IdentificationConflictError,
    LayoutParams,
    Realization,
    ReflectionModel,
    base_geometry,
    footprint_for_word,
    realize,
)
from .graph import (
    ChamberGraph,
    DuplicateCosetError,
    UnreachableChamberError,
    build_chamber_graph,
    distances_from,
    shortest_gallery,
)
from .labels import (
    ChamberLabel,
    FiltrationProfile,
    ProfileInconsistencyError,
    coset_representatives,
    enumerate_chambers,
    filtration_matrix,
    filtration_profile,
)
from .oracle import (
    brute_force_building,
    bruhat_partition_check,
    build_group_table,
    verify_case,
)
from .scene import (
    SceneDocument,
    SceneFormatError,
    build_scene,
    export_scene,
    parse_scene,
    scene_graph,
)
from .weyl import (
    ResourceCapError,
    WeylElement,
    WeylSignature,
    enumerate_weyl,
    signature_of,
    word_to_matrix,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
