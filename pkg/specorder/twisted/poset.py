"""
Specorder - Finite Posets
Labeled elements, a full relation matrix and its cover relations
"""

from collections.abc import Callable, Sequence
from typing import Generic, TypeVar

import networkx as nx
import numpy as np

from specorder.core.exceptions import TheoremViolationError
from specorder.core.logging import get_logger

logger = get_logger(__name__)

L = TypeVar("L")


class Poset(Generic[L]):
    """
    A finite partial order.

    ``leq[i, j]`` is True iff labels[i] ≤ labels[j]. ``covers`` lists pairs
    (i, j) with labels[i] covered by labels[j], sorted.
    """

    def __init__(
        self,
        labels: Sequence[L],
        leq: np.ndarray,
        names: Sequence[str] | None = None,
        grading: Sequence[int] | None = None,
    ) -> None:
        leq = np.array(leq, dtype=bool)
        if leq.shape != (len(labels), len(labels)):
            raise ValueError(f"relation matrix shape {leq.shape} does not match {len(labels)} labels")
        leq.setflags(write=False)

        self.labels: tuple[L, ...] = tuple(labels)
        self.leq = leq
        self.names: tuple[str, ...] = tuple(names) if names is not None else tuple(
            str(label) for label in labels
        )
        self.grading: tuple[int, ...] | None = tuple(grading) if grading is not None else None

        check_partial_order(leq)
        self.covers: tuple[tuple[int, int], ...] = cover_relations(leq)

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, label: L) -> int:
        return self.labels.index(label)

    def less_equal(self, a: L, b: L) -> bool:
        return bool(self.leq[self.index(a), self.index(b)])

    # =========================================================================
    # Structure
    # =========================================================================

    def minimal(self) -> list[int]:
        strict = self.leq & ~np.eye(len(self), dtype=bool)
        return [j for j in range(len(self)) if not strict[:, j].any()]

    def maximal(self) -> list[int]:
        strict = self.leq & ~np.eye(len(self), dtype=bool)
        return [i for i in range(len(self)) if not strict[i, :].any()]

    def down_set(self, i: int) -> list[int]:
        """Indices below labels[i], including i."""
        return [int(j) for j in np.flatnonzero(self.leq[:, i])]

    def up_set(self, i: int) -> list[int]:
        return [int(j) for j in np.flatnonzero(self.leq[i, :])]

    def rank_profile(self) -> dict[int, int]:
        """Number of elements per grade."""
        if self.grading is None:
            return {}
        profile: dict[int, int] = {}
        for grade in self.grading:
            profile[grade] = profile.get(grade, 0) + 1
        return dict(sorted(profile.items()))

    def grading_is_monotone(self, grading: Sequence[int] | None = None) -> bool:
        """i ≤ j implies grade(i) ≤ grade(j)."""
        grading = grading if grading is not None else self.grading
        if grading is None:
            raise ValueError("poset has no grading")
        grades = np.asarray(grading)
        rows, cols = np.nonzero(self.leq)
        return bool((grades[rows] <= grades[cols]).all())

    def contains_relation(self, other: np.ndarray) -> bool:
        """Whether every pair related in ``other`` is related here."""
        return bool((self.leq | ~np.asarray(other, dtype=bool)).all())

    def to_graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self)))
        graph.add_edges_from(self.covers)
        return graph


def check_partial_order(leq: np.ndarray) -> None:
    """Raise TheoremViolationError unless leq is reflexive, antisymmetric and transitive."""
    n = leq.shape[0]
    if not leq.diagonal().all():
        raise TheoremViolationError("relation is not reflexive")

    both = leq & leq.T & ~np.eye(n, dtype=bool)
    if both.any():
        i, j = (int(v) for v in np.argwhere(both)[0])
        raise TheoremViolationError("relation is not antisymmetric", details={"pair": [i, j]})

    as_int = leq.astype(np.int64)
    composed = (as_int @ as_int) > 0
    if (composed & ~leq).any():
        i, j = (int(v) for v in np.argwhere(composed & ~leq)[0])
        raise TheoremViolationError("relation is not transitive", details={"pair": [i, j]})


def cover_relations(leq: np.ndarray) -> tuple[tuple[int, int], ...]:
    """
    Transitive reduction of the strict order, computed with networkx and
    cross-checked against the matrix reduction.
    """
    n = leq.shape[0]
    strict = leq & ~np.eye(n, dtype=bool)

    graph = nx.DiGraph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from((int(i), int(j)) for i, j in np.argwhere(strict))
    reduced = {(int(i), int(j)) for i, j in nx.transitive_reduction(graph).edges}

    as_int = strict.astype(np.int64)
    matrix_covers = strict & ~((as_int @ as_int) > 0)
    expected = {(int(i), int(j)) for i, j in np.argwhere(matrix_covers)}

    if reduced != expected:
        raise TheoremViolationError(
            "cover relations disagree between graph and matrix reduction",
            details={"graph_only": sorted(reduced - expected), "matrix_only": sorted(expected - reduced)},
        )
    return tuple(sorted(reduced))


def poset_from_predicate(
    labels: Sequence[L],
    leq: Callable[[L, L], bool],
    names: Sequence[str] | None = None,
    grading: Sequence[int] | None = None,
    progress_every: int = 0,
) -> Poset[L]:
    """Evaluate leq on every ordered pair and build the poset."""
    n = len(labels)
    matrix = np.zeros((n, n), dtype=bool)
    done = 0
    for i, a in enumerate(labels):
        for j, b in enumerate(labels):
            matrix[i, j] = i == j or leq(a, b)
            done += 1
            if progress_every and done % progress_every == 0:
                logger.info("Relation matrix progress", extra={"done": done, "total": n * n})
    return Poset(labels, matrix, names=names, grading=grading)
