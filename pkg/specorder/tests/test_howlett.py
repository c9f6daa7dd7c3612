"""
Tests for the Howlett decomposition w = u·w̄·v and its refinement.
"""

import itertools

import pytest

from specorder.core.exceptions import PreconditionError
from specorder.coxeter.subsets import all_subsets
from specorder.coxeter.system import build_system
from specorder.parabolic.howlett import (
    howlett_decompose,
    howlett_j_prime,
    howlett_k_prime,
    howlett_variant_check,
)
from specorder.parabolic.quotients import double_reps, in_double_quotient, in_quotient


def test_longest_element_a2(a2, subset, word):
    parts = howlett_decompose(a2.longest_element(), subset(1), subset(2))
    assert parts.u == word(a2, [1])
    assert parts.wbar == word(a2, [2, 1])
    assert parts.v == a2.identity()


def test_double_quotient_element_is_its_own_wbar(a2, subset, word):
    w = word(a2, [2, 1])
    parts = howlett_decompose(w, subset(1), subset(2))
    assert (parts.u, parts.wbar, parts.v) == (a2.identity(), w, a2.identity())


def test_subgroup_element(a2, subset, word):
    w = word(a2, [1])
    parts = howlett_decompose(w, subset(1), subset(2))
    assert (parts.u, parts.wbar, parts.v) == (w, a2.identity(), a2.identity())


def test_k_prime_and_j_prime(a2, subset, word):
    wbar = word(a2, [2, 1])
    assert howlett_k_prime(wbar, subset(1), subset(2)) == subset(2)
    assert howlett_j_prime(wbar, subset(1), subset(2)) == subset(1)
    assert howlett_k_prime(a2.identity(), subset(1), subset(2)) == subset()


def _factorizations(w, left, right):
    system = w.system
    found = []
    for wbar in double_reps(system, left, right):
        k_prime = howlett_k_prime(wbar, left, right)
        for u in system.enumerate_subgroup(left):
            for v in system.enumerate_subgroup(right):
                if (
                    u * wbar * v == w
                    and in_quotient(v, k_prime)
                    and u.length + wbar.length + v.length == w.length
                ):
                    found.append((u, wbar, v))
    return found


@pytest.mark.parametrize("family", ["A", "C"])
def test_decomposition_is_unique(family):
    system = build_system(family, 2 if family == "C" else 3)
    subsets = all_subsets(system.rank)
    for left, right in itertools.product(subsets, subsets):
        for w in system.enumerate_group():
            parts = howlett_decompose(w, left, right)
            assert parts.product() == w
            assert in_double_quotient(parts.wbar, left, right)
            assert in_quotient(parts.wbar * parts.v, left)
            assert _factorizations(w, left, right) == [(parts.u, parts.wbar, parts.v)]


def test_variant_holds(c3):
    subsets = all_subsets(3)
    for left, right in itertools.product(subsets, subsets):
        for wbar in double_reps(c3, left, right):
            for z in c3.enumerate_subgroup(right):
                assert howlett_variant_check(wbar * z, wbar, left, right)


def test_variant_preconditions(a2, subset, word):
    assert howlett_variant_check(word(a2, [2, 1]), word(a2, [2, 1]), subset(1), subset(2))
    with pytest.raises(PreconditionError):
        howlett_variant_check(word(a2, [1]), a2.identity(), subset(1), subset(2))
    with pytest.raises(PreconditionError):
        howlett_variant_check(word(a2, [2]), word(a2, [2]), subset(1), subset(2))
