"""
Tests for the permutation model of Sp_2g and the Ekedahl-Oort poset.
"""

import itertools
import time

import pytest

from specorder.core.exceptions import (
    BoundExceededError,
    InvalidPermutationError,
    PreconditionError,
    QuotientMembershipError,
    UnsupportedSystemError,
)
from specorder.coxeter.bruhat import bruhat_leq
from specorder.parabolic.quotients import min_coset_reps
from specorder.symplectic.eo import (
    EpsTuple,
    SignedPermView,
    all_eps,
    build_symplectic,
    element_of_eps,
    element_of_view,
    eo_poset,
    eo_strata,
    eps_of,
    generator_view,
    jw_bruhat,
    perm_view,
    sigma_of,
    w0_j_view,
)

# =============================================================================
# Permutations
# =============================================================================


def test_generator_views():
    assert generator_view(2, 0).images == (2, 1, 4, 3)
    assert generator_view(2, 1).images == (1, 3, 2, 4)
    for g, s in itertools.product(range(1, 4), range(3)):
        if s < g:
            generator_view(g, s).validate()


def test_validate_rejects_non_symplectic():
    with pytest.raises(InvalidPermutationError):
        SignedPermView((2, 1, 3, 4)).validate()
    with pytest.raises(InvalidPermutationError):
        SignedPermView((1, 1, 3, 4)).validate()
    with pytest.raises(InvalidPermutationError):
        element_of_view(SignedPermView((1, 2, 3)))


def test_compose_and_inverse():
    a = generator_view(2, 0)
    b = generator_view(2, 1)
    ab = a.compose(b)
    assert ab.compose(ab.inverse()).images == (1, 2, 3, 4)
    assert ab(1) == a(b(1))


@pytest.mark.parametrize("g", [1, 2, 3])
def test_view_round_trip(g):
    system, _ = build_symplectic(g)
    for x in system.enumerate_group():
        view = perm_view(x, g)
        view.validate()
        assert element_of_view(view) == x


def test_view_is_a_homomorphism():
    system, _ = build_symplectic(2)
    for x, y in itertools.product(system.enumerate_group(), repeat=2):
        assert perm_view(x * y, 2) == perm_view(x, 2).compose(perm_view(y, 2))


def test_longest_of_j_reverses_first_half():
    assert tuple(w0_j_view(3)) == (3, 2, 1)
    assert tuple(w0_j_view(1)) == (1,)


def test_build_symplectic_rejects_genus_zero():
    with pytest.raises(UnsupportedSystemError):
        build_symplectic(0)


# =============================================================================
# ε-tuples
# =============================================================================


def test_eps_tuple_parsing():
    eps = EpsTuple.parse("101")
    assert eps.eps == (1, 0, 1)
    assert eps.bits == "101"
    assert str(eps) == "101"
    assert eps.genus == 3
    assert eps.dimension == 4


@pytest.mark.parametrize("bits", [(2,), (), (0, -1)])
def test_eps_tuple_rejects_invalid(bits):
    with pytest.raises(PreconditionError):
        EpsTuple(bits)


def test_sigma_of():
    assert sigma_of(EpsTuple((0, 0))) == (1, 2)
    assert sigma_of(EpsTuple((1, 0))) == (2, 4)
    assert sigma_of(EpsTuple((1, 1))) == (3, 4)


def test_elements_of_genus_two():
    assert element_of_eps(EpsTuple((0, 0))).one_based_word() == []
    assert element_of_eps(EpsTuple((0, 1))).one_based_word() == [2]
    assert element_of_eps(EpsTuple((1, 0))).one_based_word() == [2, 1]


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_eps_round_trip_covers_quotient(g):
    system, subset = build_symplectic(g)
    reps = min_coset_reps(system, subset)
    elements = set()
    for eps in all_eps(g):
        element = element_of_eps(eps)
        assert eps_of(element, g) == eps
        assert element.length == eps.dimension
        elements.add(element)
    assert elements == set(reps)
    assert len(reps) == 2**g


def test_eps_of_requires_quotient():
    system, _ = build_symplectic(2)
    with pytest.raises(QuotientMembershipError):
        eps_of(system.generator(0), 2)


@pytest.mark.parametrize("g", [2, 3])
def test_jw_bruhat_matches_bruhat(g):
    system, subset = build_symplectic(g)
    reps = min_coset_reps(system, subset)
    for a, b in itertools.product(reps, repeat=2):
        assert jw_bruhat(a, b, g) == bruhat_leq(a, b)


# =============================================================================
# Strata and poset
# =============================================================================


def test_strata_dimensions():
    assert [s.dimension for s in eo_strata(2)] == [0, 1, 2, 3]
    assert [s.dimension for s in eo_strata(3)] == [0, 1, 2, 3, 3, 4, 5, 6]
    assert [s.eps.bits for s in eo_strata(2)] == ["00", "01", "10", "11"]


def test_genus_one_is_a_chain():
    poset = eo_poset(1)
    assert poset.names == ("0", "1")
    assert poset.covers == ((0, 1),)


def test_genus_two_is_a_chain():
    poset = eo_poset(2)
    assert poset.covers == ((0, 1), (1, 2), (2, 3))
    assert poset.grading == (0, 1, 2, 3)


def test_genus_three():
    poset = eo_poset(3)
    assert poset.minimal() == [0]
    assert poset.maximal() == [7]
    assert poset.grading_is_monotone()
    # 011 and 100 share a dimension
    assert not poset.leq[3, 4] and not poset.leq[4, 3]
    assert poset.rank_profile() == {0: 1, 1: 1, 2: 1, 3: 2, 4: 1, 5: 1, 6: 1}


def test_genus_bound():
    with pytest.raises(BoundExceededError):
        eo_poset(3, max_genus=2)


@pytest.mark.slow
def test_genus_four_is_bounded_and_graded():
    poset = eo_poset(4)
    assert len(poset) == 16
    assert poset.minimal() == [0]
    assert poset.maximal() == [15]
    assert poset.grading_is_monotone()
    bruhat = [[bruhat_leq(a.element, b.element) for b in poset.labels] for a in poset.labels]
    assert poset.contains_relation(bruhat)


@pytest.mark.slow
def test_genus_five_extremes():
    started = time.perf_counter()
    poset = eo_poset(5)
    elapsed = time.perf_counter() - started
    assert elapsed < 60, f"eo_poset(5) took {elapsed:.1f}s"
    assert len(poset) == 32
    assert poset.minimal() == [0]
    assert poset.maximal() == [31]
    assert poset.grading[31] == 15
