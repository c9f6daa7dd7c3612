"""
Tests for the witness searches behind the specialization order.
"""

import itertools

import pytest

from specorder.core.exceptions import PreconditionError, QuotientMembershipError
from specorder.coxeter.bruhat import bruhat_cone, bruhat_leq
from specorder.parabolic.quotients import decompose, in_quotient
from specorder.twisted.lemmas import (
    bruhat_lifting_witness,
    bruhat_witness_lemmas,
    bruhatfour_witness,
    lemma_spec1_witness,
    ymin_ymax,
)
from specorder.twisted.order import make_twisted_order, quotient_elements, spec_leq_bfs

# =============================================================================
# Pure Bruhat lemmas
# =============================================================================


def test_ymin_ymax_identity(a2):
    for x in a2.enumerate_group():
        assert ymin_ymax(a2.identity(), x) == (a2.identity(), x)


def test_ymin_ymax_below_longest(c2):
    w0 = c2.longest_element()
    for w in c2.enumerate_group():
        assert ymin_ymax(w, w0) == (c2.identity(), w0)


def test_ymin_ymax_small_case(a2, word):
    assert ymin_ymax(word(a2, [1]), word(a2, [2])) == (word(a2, [1]), word(a2, [1, 2]))


@pytest.mark.parametrize("fixture", ["a2", "c2"])
def test_ymin_ymax_bounds_every_member(fixture, request):
    system = request.getfixturevalue(fixture)
    elements = system.enumerate_group()
    for w, x in itertools.product(elements, elements):
        smallest, largest = ymin_ymax(w, x)
        members = [y for y in elements if bruhat_leq(w * y, x)]
        assert all(bruhat_leq(smallest, y) and bruhat_leq(y, largest) for y in members)


@pytest.mark.parametrize("variant", [1, 2])
def test_witness_lemmas(c2, variant):
    elements = c2.enumerate_group()
    for w, w2 in itertools.product(elements, elements):
        if not bruhat_leq(w, w2):
            continue
        for x_prime in elements:
            x = bruhat_witness_lemmas(x_prime, w, w2, variant)
            assert bruhat_leq(x, x_prime)
            if variant == 1:
                assert bruhat_leq(x * w, x_prime * w2)
            else:
                assert bruhat_leq(x_prime * w, x * w2)


def test_witness_lemmas_equal_elements(a2):
    w0 = a2.longest_element()
    for w in a2.enumerate_group():
        x = bruhat_witness_lemmas(w0, w, w, 1)
        assert bruhat_leq(x * w, w0 * w)


def test_witness_lemmas_precondition(a2, word):
    with pytest.raises(PreconditionError):
        bruhat_witness_lemmas(a2.identity(), word(a2, [1]), word(a2, [2]), 1)


# =============================================================================
# Lifting
# =============================================================================


def test_lifting_witness(c3, subset):
    j = subset(1, 2)
    for x in quotient_elements(make_twisted_order(c3, j)):
        for u in c3.enumerate_group():
            if (x * u).length != x.length + u.length:
                continue
            parts = decompose(x * u, j)
            for u1_prime in bruhat_cone(parts.u):
                u1 = bruhat_lifting_witness(x, u, u1_prime, j)
                assert bruhat_leq(u1, u)
                assert x * u1 == u1_prime * parts.w


def test_lifting_witness_preconditions(c2, subset):
    j = subset(1)
    s1, s2 = c2.generator(0), c2.generator(1)
    with pytest.raises(QuotientMembershipError):
        bruhat_lifting_witness(s1, c2.identity(), c2.identity(), j)
    with pytest.raises(PreconditionError):
        bruhat_lifting_witness(s2, s2, c2.identity(), j)


# =============================================================================
# Twisted lemmas
# =============================================================================


def test_length_preserving_witness_trivial(c2, subset):
    order = make_twisted_order(c2, subset(1))
    e = c2.identity()
    for w in quotient_elements(order):
        assert bruhatfour_witness(w, e, e, order) == (e, ())


@pytest.mark.parametrize(("fixture", "letters"), [("c2", (1,)), ("c3", (1, 2)), ("a3_flip", (1, 3))])
def test_length_preserving_witness(fixture, letters, request, subset):
    system = request.getfixturevalue(fixture)
    order = make_twisted_order(system, subset(*letters))
    subgroup = order.subgroup()
    for w in quotient_elements(order):
        for u, v in itertools.product(subgroup, subgroup):
            if not bruhat_leq(v, u):
                continue
            x, letters_found = bruhatfour_witness(w, u, v, order)
            assert bruhat_leq(x, v)
            assert system.from_word(letters_found) == x
            assert len(letters_found) == x.length
            assert order.twisted_conjugate(x, w).length == w.length
            assert bruhat_leq(order.twisted_conjugate(x, w), u.inverse() * w * order.delta(v))


def test_length_preserving_witness_preconditions(c2, subset):
    order = make_twisted_order(c2, subset(1))
    e, s1 = c2.identity(), c2.generator(0)
    with pytest.raises(PreconditionError):
        bruhatfour_witness(e, e, s1, order)
    with pytest.raises(QuotientMembershipError):
        bruhatfour_witness(e, c2.generator(1), e, order)


@pytest.mark.parametrize("fixture", ["c2", "c3"])
def test_twisted_witness(fixture, request, subset):
    system = request.getfixturevalue(fixture)
    order = make_twisted_order(system, subset(*range(1, system.rank)))
    elements = quotient_elements(order)
    for w, w2 in itertools.product(elements, elements):
        if not spec_leq_bfs(w, w2, order):
            continue
        u, u_prime = lemma_spec1_witness(w, w2, order)
        w1 = u_prime * w2 * order.delta(u_prime).inverse() * order.delta(u)
        assert in_quotient(w1, order.j)
        assert bruhat_leq(u * w, w1)


def test_twisted_witness_precondition(c2, subset, word):
    order = make_twisted_order(c2, subset(1))
    with pytest.raises(PreconditionError):
        lemma_spec1_witness(word(c2, [2]), c2.identity(), order)
