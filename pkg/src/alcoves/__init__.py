"""Alcove combinatorics for irreducible affine Coxeter systems.

Chimney-induced orientations on the standard apartment, positively folded
galleries and their shadows, exact point-count polynomials for double-coset
intersections in affine flag varieties, and an independent abstract-building
oracle that verifies all of it exhaustively at desk scale.
"""

from .chimney import Chimney, chimney_contains, gate_chimney, orientation
from .cosets import (
    ParahoricFace,
    count_histogram,
    count_intersection,
    count_parahoric,
    count_parahoric_coset,
    count_vertex,
    face_coset_rep,
    is_two_sided_reduced,
    min_coset_rep,
    parahoric_shadow,
)
from .coxeter import (
    AffineElement,
    CoxeterSystem,
    SphericalElement,
    affine_generator,
    build_system,
    element_to_str,
    parse_element,
)
from .errors import InputError, InvariantError
from .galleries import (
    FoldedGallery,
    GalleryType,
    Shadow,
    StepKind,
    classify_step,
    enumerate_folded,
    gallery_type,
    replay,
    shadow_alcove,
    shadow_vertex,
)
from .geometry import (
    HalfSpace,
    Hyperplane,
    Panel,
    act_on_halfspace,
    act_on_hyperplane,
    alcove_side,
    alcove_vertices,
    gate_in_apartment,
    wall_of_panel,
)
from .oracle import (
    AbstractMinimalGallery,
    LabelAlphabets,
    LabeledFoldedGallery,
    all_choice_sequences,
    enumerate_labeled_folded,
    fold_abstract,
    fold_histogram,
    polytope_points,
    unfold,
    uniform_alphabets,
)
from .polynomials import CountPolynomial
from .render import render_svg
from .verify import CheckResult, VerifyConfig, VerifyReport, verify_suite

__version__ = "0.1.0"

__all__ = [
    "AbstractMinimalGallery",
    "AffineElement",
    "CheckResult",
    "Chimney",
    "CountPolynomial",
    "CoxeterSystem",
    "FoldedGallery",
    "GalleryType",
    "HalfSpace",
    "Hyperplane",
    "InputError",
    "InvariantError",
    "LabelAlphabets",
    "LabeledFoldedGallery",
    "Panel",
    "ParahoricFace",
    "Shadow",
    "SphericalElement",
    "StepKind",
    "VerifyConfig",
    "VerifyReport",
    "act_on_halfspace",
    "act_on_hyperplane",
    "affine_generator",
    "alcove_side",
    "alcove_vertices",
    "all_choice_sequences",
    "build_system",
    "chimney_contains",
    "classify_step",
    "count_histogram",
    "count_intersection",
    "count_parahoric",
    "count_parahoric_coset",
    "count_vertex",
    "element_to_str",
    "enumerate_folded",
    "enumerate_labeled_folded",
    "face_coset_rep",
    "fold_abstract",
    "fold_histogram",
    "gallery_type",
    "gate_chimney",
    "gate_in_apartment",
    "is_two_sided_reduced",
    "min_coset_rep",
    "orientation",
    "parahoric_shadow",
    "parse_element",
    "polytope_points",
    "render_svg",
    "replay",
    "shadow_alcove",
    "shadow_vertex",
    "uniform_alphabets",
    "unfold",
    "verify_suite",
    "wall_of_panel",
]
