"""
Tests for refinement types, the root criterion and the stable types J_∞, K_∞.
"""

import pytest

from specorder.core.exceptions import PreconditionError, QuotientMembershipError
from specorder.coxeter.subsets import SimpleSubset, all_subsets
from specorder.coxeter.system import build_system
from specorder.parabolic.quotients import min_coset_reps
from specorder.parabolic.refinement import (
    j_infinity,
    orbit_type_sequence,
    refinement_contains_borel,
    refinement_type,
)

# =============================================================================
# Refinement types
# =============================================================================


def test_refinement_type_examples(a2, subset, word):
    assert refinement_type(subset(1), subset(2), word(a2, [2, 1])) == subset(1)
    assert refinement_type(subset(1), subset(2), a2.identity()) == SimpleSubset()
    full = a2.simple_reflections
    assert refinement_type(full, full, a2.identity()) == full


def test_refinement_type_needs_double_quotient(a2, subset, word):
    with pytest.raises(PreconditionError):
        refinement_type(subset(1), subset(2), word(a2, [2]))


def test_root_criterion(a2, subset, word):
    assert refinement_contains_borel(subset(1), SimpleSubset(), a2.identity())
    assert not refinement_contains_borel(subset(1), SimpleSubset(), word(a2, [1]))
    assert refinement_contains_borel(subset(1), subset(1), word(a2, [1]))


def test_root_criterion_on_quotients(c3):
    for j in all_subsets(3):
        for k in all_subsets(3):
            for w in min_coset_reps(c3, j):
                assert refinement_contains_borel(j, k, w)


# =============================================================================
# J_∞
# =============================================================================


def test_j_infinity_a2(a2, subset, word):
    j = subset(1)
    assert j_infinity(a2.identity(), j) == (SimpleSubset(), SimpleSubset())
    assert j_infinity(word(a2, [2]), j) == (SimpleSubset(), SimpleSubset())
    assert j_infinity(word(a2, [2, 1]), j) == (subset(1), subset(2))


def test_j_infinity_of_empty_subset(c3):
    for w in c3.enumerate_group():
        assert j_infinity(w, SimpleSubset()) == (SimpleSubset(), SimpleSubset())


def test_j_infinity_needs_quotient_element(a2, subset):
    with pytest.raises(QuotientMembershipError):
        j_infinity(a2.generator(0), subset(1))


def test_orbit_type_sequence_a2(a2, subset, word):
    sequence = orbit_type_sequence(word(a2, [2, 1]), subset(1))
    assert len(sequence.trace) == 1
    assert sequence.j_infinity == subset(1)
    assert sequence.k_infinity == subset(2)
    assert sequence.y_infinity == word(a2, [2, 1])

    sequence = orbit_type_sequence(a2.identity(), subset(1))
    assert [step.j for step in sequence.trace] == [subset(1), SimpleSubset()]
    assert sequence.y_infinity == a2.identity()


@pytest.mark.parametrize(("family", "rank"), [("A", 3), ("B", 2), ("C", 2), ("C", 3)])
def test_sequence_matches_fixed_point(family, rank):
    system = build_system(family, rank)
    for j in all_subsets(rank):
        for w in min_coset_reps(system, j):
            sequence = orbit_type_sequence(w, j)
            assert (sequence.j_infinity, sequence.k_infinity) == j_infinity(w, j)
            assert sequence.y_infinity == w
            for before, after in zip(sequence.trace, sequence.trace[1:]):
                assert after.j.issubset(before.j)
                assert after.k.issubset(before.k)
