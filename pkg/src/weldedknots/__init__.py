"""
Combinatorics of welded knots: Gauss codes, welded Gauss diagrams, the
Reidemeister/over-commute rewriting system, reversal operators,
move-invariant fingerprints, and bounded equivalence search.
"""

from .model import (
    DecodeError,
    DomainError,
    GaussCode,
    GaussDiagram,
    Passage,
    WeldedGaussDiagram,
    canonical_code,
    canonical_wgd,
    decode_gauss_code,
    decode_wgd,
    encode_gauss_code,
    encode_wgd,
    normalize_code_labels,
    validate_code,
    validate_wgd,
    wgd_encoding,
)
from .convert import (
    gauss_code_to_gauss_diagram,
    gauss_diagram_to_wgd,
    gauss_to_wgd,
    wgd_to_gauss,
    wgd_to_gauss_diagram,
)
from .moves import (
    ALL_KINDS,
    GROWTH_KINDS,
    MoveKind,
    MoveRecord,
    MoveSite,
    StaleSiteError,
    apply_record,
    enumerate_sites,
    inverse_record,
    oc_class,
    replay,
    wgd_neighbors,
    wgd_neighbors_iter,
)
from .moves import apply as apply_move
from .symmetry import bar, bar_code, global_reversal, reverse
from .invariants import (
    ArcStructure,
    Group,
    InvariantFingerprint,
    arcs,
    builtin_group,
    coloring_count,
    coloring_count_bruteforce,
    dihedral_group,
    fingerprint,
    hom_count,
    symmetric_group_3,
)
from .search import (
    AtlasRecord,
    EquivalenceOutcome,
    SearchBudget,
    are_equivalent,
    atlas_to_jsonl,
    build_atlas,
    derive_path,
    enumerate_canonical_wgds,
    simplify,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_KINDS",
    "ArcStructure",
    "AtlasRecord",
    "DecodeError",
    "DomainError",
    "EquivalenceOutcome",
    "GROWTH_KINDS",
    "GaussCode",
    "GaussDiagram",
    "Group",
    "InvariantFingerprint",
    "MoveKind",
    "MoveRecord",
    "MoveSite",
    "Passage",
    "SearchBudget",
    "StaleSiteError",
    "WeldedGaussDiagram",
    "apply_move",
    "apply_record",
    "arcs",
    "are_equivalent",
    "atlas_to_jsonl",
    "bar",
    "bar_code",
    "build_atlas",
    "builtin_group",
    "canonical_code",
    "canonical_wgd",
    "coloring_count",
    "coloring_count_bruteforce",
    "decode_gauss_code",
    "decode_wgd",
    "derive_path",
    "dihedral_group",
    "encode_gauss_code",
    "encode_wgd",
    "enumerate_canonical_wgds",
    "enumerate_sites",
    "fingerprint",
    "gauss_code_to_gauss_diagram",
    "gauss_diagram_to_wgd",
    "gauss_to_wgd",
    "global_reversal",
    "hom_count",
    "inverse_record",
    "normalize_code_labels",
    "oc_class",
    "replay",
    "reverse",
    "simplify",
    "symmetric_group_3",
    "validate_code",
    "validate_wgd",
    "wgd_encoding",
    "wgd_neighbors",
    "wgd_neighbors_iter",
    "wgd_to_gauss",
    "wgd_to_gauss_diagram",
]
