"""Parabolic quotients, Howlett decomposition and refinement types."""

from specorder.parabolic.howlett import (
    HowlettDecomposition,
    howlett_decompose,
    howlett_variant_check,
)
from specorder.parabolic.quotients import (
    ParabolicDecomposition,
    QuotientCharacterization,
    conjugate_subset,
    convert,
    decompose,
    double_coset_min,
    double_reps,
    in_quotient,
    min_coset_reps,
    project_quotient,
    quotient_characterizations,
    right_multiplication_case,
)
from specorder.parabolic.refinement import (
    OrbitTypeSequence,
    j_infinity,
    orbit_type_sequence,
    refinement_contains_borel,
    refinement_type,
)

__all__ = [
    "HowlettDecomposition",
    "OrbitTypeSequence",
    "ParabolicDecomposition",
    "QuotientCharacterization",
    "conjugate_subset",
    "convert",
    "decompose",
    "double_coset_min",
    "double_reps",
    "howlett_decompose",
    "howlett_variant_check",
    "in_quotient",
    "j_infinity",
    "min_coset_reps",
    "orbit_type_sequence",
    "project_quotient",
    "quotient_characterizations",
    "refinement_contains_borel",
    "refinement_type",
    "right_multiplication_case",
]
