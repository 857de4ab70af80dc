"""Exact tools for isotropic Schur roots of acyclic quivers.

Everything is integer or rational arithmetic end to end; floating point
appears only in plots and in the finite-field sampling oracle's random
matrices (which are integers anyway). See the README for the CLI.
"""

from .analysis import (
    AnalysisReport,
    ChainLevel,
    DeltaChain,
    analyze,
    delta_chain,
    find_tame_pair,
    hypersurface_relation,
    is_smaller_type,
    stable_exceptional_sequence,
)
from .braid import (
    IsoTypeSequence,
    apply_braid,
    brute_isotropic_filter,
    enumerate_isotropic,
    format_braid_word,
    gamma,
    is_tame_type,
    iso_type_sequence,
    parse_braid_word,
    probe_orbits,
    reduce_to_tame_type,
)
from .errors import (
    BudgetExhausted,
    InputError,
    InternalCheckError,
    IsoschurError,
    NormalizeError,
    NotExceptionalError,
    SpectralCertificateError,
)
from .homext import (
    canonical_decomposition,
    embeds,
    generic_ext,
    generic_ext_dual,
    generic_hom_ext,
    generic_quotients,
    generic_subvectors,
    is_prehomogeneous,
    is_schur_root,
    orthogonal,
    sample_end_dim,
    sample_hom_dim,
)
from .fileio import (
    format_vector,
    load_quiver,
    load_sequence,
    parse_vector,
    quiver_from_dict,
    quiver_to_dict,
)
from .quiver import AffineType, Quiver, affine_type, classify_self_pairing
from .sequences import (
    ExceptionalSequence,
    PositionType,
    Rank2Info,
    apply_word,
    coxeter_position,
    isotropic_reflection,
    mutate,
    position_type,
    rank2_tame_info,
    reduce_to_simples,
    relative_coxeter,
    subcategory_quiver,
    validate_sequence,
)
from .stability import (
    ConeReport,
    cone_report,
    in_cone,
    sigma_weight,
    slice_coordinates,
    stability_status,
    stable_decomposition,
    stable_vectors,
)

__version__ = "0.1.0"

__all__ = [
    "AffineType",
    "AnalysisReport",
    "BudgetExhausted",
    "ChainLevel",
    "ConeReport",
    "coxeter_position",
    "DeltaChain",
    "ExceptionalSequence",
    "InputError",
    "InternalCheckError",
    "IsoTypeSequence",
    "IsoschurError",
    "NormalizeError",
    "NotExceptionalError",
    "PositionType",
    "Quiver",
    "Rank2Info",
    "SpectralCertificateError",
    "affine_type",
    "analyze",
    "apply_braid",
    "apply_word",
    "brute_isotropic_filter",
    "canonical_decomposition",
    "classify_self_pairing",
    "cone_report",
    "delta_chain",
    "embeds",
    "enumerate_isotropic",
    "find_tame_pair",
    "format_braid_word",
    "format_vector",
    "gamma",
    "generic_ext",
    "generic_ext_dual",
    "generic_hom_ext",
    "generic_quotients",
    "generic_subvectors",
    "hypersurface_relation",
    "in_cone",
    "is_prehomogeneous",
    "is_schur_root",
    "is_smaller_type",
    "is_tame_type",
    "iso_type_sequence",
    "isotropic_reflection",
    "load_quiver",
    "load_sequence",
    "mutate",
    "orthogonal",
    "parse_braid_word",
    "parse_vector",
    "position_type",
    "probe_orbits",
    "quiver_from_dict",
    "quiver_to_dict",
    "rank2_tame_info",
    "reduce_to_simples",
    "reduce_to_tame_type",
    "relative_coxeter",
    "sample_end_dim",
    "sample_hom_dim",
    "sigma_weight",
    "slice_coordinates",
    "stability_status",
    "stable_decomposition",
    "stable_exceptional_sequence",
    "stable_vectors",
    "subcategory_quiver",
    "validate_sequence",
]
