"""
Tests for finite posets and their cover relations.
"""

import networkx as nx
import numpy as np
import pytest

from specorder.core.exceptions import TheoremViolationError
from specorder.twisted.poset import Poset, check_partial_order, cover_relations, poset_from_predicate


def chain(n: int) -> np.ndarray:
    return np.triu(np.ones((n, n), dtype=bool))


@pytest.fixture
def diamond() -> Poset[str]:
    """0 < 1, 2 < 3 with 1 and 2 incomparable."""
    leq = np.array(
        [
            [1, 1, 1, 1],
            [0, 1, 0, 1],
            [0, 0, 1, 1],
            [0, 0, 0, 1],
        ],
        dtype=bool,
    )
    return Poset(["bottom", "left", "right", "top"], leq, grading=[0, 1, 1, 2])


# =============================================================================
# Validation
# =============================================================================


def test_accepts_chain():
    check_partial_order(chain(4))


def test_rejects_non_reflexive():
    leq = chain(3)
    leq[1, 1] = False
    with pytest.raises(TheoremViolationError, match="reflexive"):
        check_partial_order(leq)


def test_rejects_non_antisymmetric():
    leq = chain(3)
    leq[2, 0] = True
    with pytest.raises(TheoremViolationError, match="antisymmetric"):
        check_partial_order(leq)


def test_rejects_non_transitive():
    leq = np.eye(3, dtype=bool)
    leq[0, 1] = leq[1, 2] = True
    with pytest.raises(TheoremViolationError) as exc_info:
        check_partial_order(leq)
    assert exc_info.value.details["pair"] == [0, 2]


def test_rejects_shape_mismatch():
    with pytest.raises(ValueError):
        Poset(["a", "b"], chain(3))


# =============================================================================
# Covers
# =============================================================================


def test_chain_covers():
    assert cover_relations(chain(4)) == ((0, 1), (1, 2), (2, 3))


def test_antichain_has_no_covers():
    assert cover_relations(np.eye(3, dtype=bool)) == ()


def test_diamond_covers(diamond):
    assert diamond.covers == ((0, 1), (0, 2), (1, 3), (2, 3))


# =============================================================================
# Structure
# =============================================================================


def test_extremes(diamond):
    assert diamond.minimal() == [0]
    assert diamond.maximal() == [3]


def test_down_and_up_sets(diamond):
    assert diamond.down_set(3) == [0, 1, 2, 3]
    assert diamond.down_set(1) == [0, 1]
    assert diamond.up_set(2) == [2, 3]


def test_less_equal_by_label(diamond):
    assert diamond.less_equal("bottom", "top")
    assert not diamond.less_equal("left", "right")


def test_rank_profile(diamond):
    assert diamond.rank_profile() == {0: 1, 1: 2, 2: 1}
    assert Poset(["a"], [[True]]).rank_profile() == {}


def test_grading(diamond):
    assert diamond.grading_is_monotone()
    assert not diamond.grading_is_monotone([0, 1, 5, 2])
    with pytest.raises(ValueError):
        Poset(["a"], [[True]]).grading_is_monotone()


def test_contains_relation(diamond):
    assert diamond.contains_relation(np.eye(4, dtype=bool))
    assert not diamond.contains_relation(chain(4))


def test_names_default_to_labels(diamond):
    assert diamond.names == ("bottom", "left", "right", "top")


def test_matrix_is_read_only(diamond):
    with pytest.raises(ValueError):
        diamond.leq[0, 0] = False


def test_to_graph(diamond):
    graph = diamond.to_graph()
    assert set(graph.edges) == {(0, 1), (0, 2), (1, 3), (2, 3)}
    assert nx.is_directed_acyclic_graph(graph)


def test_from_predicate_divisibility():
    labels = [1, 2, 3, 6]
    poset = poset_from_predicate(labels, lambda a, b: b % a == 0, names=["1", "2", "3", "6"])
    assert poset.covers == ((0, 1), (0, 2), (1, 3), (2, 3))
    assert poset.less_equal(2, 6)
    assert not poset.less_equal(2, 3)
