"""Finite quandles as integer matrices.

Validation of operation tables, construction of the classical families,
isomorphism testing by relabelling, automorphism groups, and exhaustive
classification of all isomorphism classes of a given (small) order.
"""

from ._kernel import backend, has_speedups
from .construct import (
    AlexanderPresentation,
    alexander,
    conjugation,
    conjugation_class,
    dihedral,
    make,
    trivial,
)
from .enumeration import (
    EnumerationOptions,
    EnumerationReport,
    ResourceLimitError,
    column_candidates,
    enumerate_all,
    enumerate_classes,
)
from .matrix import (
    QuandleMatrix,
    QuandleParseError,
    VerificationReport,
    parse_matrix,
    standardize,
    verify_quandle,
)
from .permutation import PermGroup, Permutation, all_permutations
from .symmetry import (
    ClassRecord,
    GroupId,
    are_isomorphic,
    automorphism_group,
    canonical_form,
    determinant,
    identify_group,
    np_count,
    np_count_explicit,
    permute,
)

__version__ = "0.1.0"

__all__ = [
    "AlexanderPresentation",
    "ClassRecord",
    "EnumerationOptions",
    "EnumerationReport",
    "GroupId",
    "PermGroup",
    "Permutation",
    "QuandleMatrix",
    "QuandleParseError",
    "ResourceLimitError",
    "VerificationReport",
    "alexander",
    "all_permutations",
    "are_isomorphic",
    "automorphism_group",
    "backend",
    "canonical_form",
    "column_candidates",
    "conjugation",
    "conjugation_class",
    "determinant",
    "dihedral",
    "enumerate_all",
    "enumerate_classes",
    "has_speedups",
    "identify_group",
    "make",
    "np_count",
    "np_count_explicit",
    "parse_matrix",
    "permute",
    "standardize",
    "trivial",
    "verify_quandle",
]
