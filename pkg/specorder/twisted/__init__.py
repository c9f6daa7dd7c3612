"""The twisted specialization order, its lemmas and Springer's orbit criteria."""

from specorder.twisted.lemmas import (
    bruhat_lifting_witness,
    bruhat_witness_lemmas,
    bruhatfour_witness,
    lemma_spec1_witness,
    ymin_ymax,
)
from specorder.twisted.order import (
    TwistedOrder,
    closure_set,
    closure_set_from_cone,
    delta_is_order_preserving,
    lengthequal_check,
    make_abstract_twisted_order,
    make_twisted_order,
    spec_coroll_check,
    spec_leq_bfs,
    spec_leq_naive,
    spec_leq_naive_witness,
    spec_leq_pair_oracle,
    spec_poset,
)
from specorder.twisted.poset import Poset
from specorder.twisted.springer import (
    OrbitPair,
    sigma_closure,
    springer_orbit_equal,
    springer_orbit_in_closure,
)

__all__ = [
    "OrbitPair",
    "Poset",
    "TwistedOrder",
    "bruhat_lifting_witness",
    "bruhat_witness_lemmas",
    "bruhatfour_witness",
    "closure_set",
    "closure_set_from_cone",
    "delta_is_order_preserving",
    "lemma_spec1_witness",
    "lengthequal_check",
    "make_abstract_twisted_order",
    "make_twisted_order",
    "sigma_closure",
    "spec_coroll_check",
    "spec_leq_bfs",
    "spec_leq_naive",
    "spec_leq_naive_witness",
    "spec_leq_pair_oracle",
    "spec_poset",
    "springer_orbit_equal",
    "springer_orbit_in_closure",
    "ymin_ymax",
]
