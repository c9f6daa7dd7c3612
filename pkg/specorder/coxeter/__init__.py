"""Finite Weyl groups: systems, elements, simple subsets and Bruhat order."""

from specorder.coxeter.bruhat import bruhat_cone, bruhat_leq, bruhat_leq_subword
from specorder.coxeter.element import Element, canonical_word, descents
from specorder.coxeter.subsets import SimpleSubset, all_subsets
from specorder.coxeter.system import CoxeterSystem, build_system, parse_type

__all__ = [
    "CoxeterSystem",
    "Element",
    "SimpleSubset",
    "all_subsets",
    "bruhat_cone",
    "bruhat_leq",
    "bruhat_leq_subword",
    "build_system",
    "canonical_word",
    "descents",
    "parse_type",
]
