"""
Specorder - Weyl Group Elements
Elements as integer matrices acting on simple-root coordinates
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Literal

import numpy as np

from specorder.core.exceptions import MixedSystemError
from specorder.coxeter.subsets import SimpleSubset

if TYPE_CHECKING:
    from specorder.coxeter.system import CoxeterSystem

Side = Literal["left", "right"]


class Element:
    """
    A group element given by its matrix in the reflection representation.

    Elements are interned by their owning system, so two equal elements are
    usually the same object and share their cached length, descents and
    canonical word. Never construct directly; use ``CoxeterSystem.element``.
    """

    __slots__ = (
        "_hash",
        "_inverse",
        "_key",
        "_left",
        "_length",
        "_matrix",
        "_right",
        "_system",
        "_word",
    )

    def __init__(self, system: CoxeterSystem, matrix: np.ndarray) -> None:
        matrix = np.array(matrix, dtype=np.int64, copy=True)
        matrix.setflags(write=False)
        self._system = system
        self._matrix = matrix
        self._key = matrix.tobytes()
        self._hash = hash(self._key)
        self._length: int | None = None
        self._word: tuple[int, ...] | None = None
        self._inverse: Element | None = None
        self._left: SimpleSubset | None = None
        self._right: SimpleSubset | None = None

    # =========================================================================
    # Identity
    # =========================================================================

    @property
    def system(self) -> CoxeterSystem:
        return self._system

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def key(self) -> bytes:
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self._system is other._system and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        word = "".join(f"s{i + 1}" for i in self.word) or "e"
        return f"Element({self._system.name}: {word})"

    # =========================================================================
    # Group structure
    # =========================================================================

    def _check(self, other: Element) -> None:
        if self._system is not other._system:
            raise MixedSystemError()

    def __mul__(self, other: Element) -> Element:
        self._check(other)
        return self._system.element(self._matrix @ other._matrix)

    def inverse(self) -> Element:
        if self._inverse is None:
            inv = self._system.element(self._system.inverse_matrix(self._matrix))
            inv._inverse = self
            self._inverse = inv
        return self._inverse

    def conjugate(self, by: Element) -> Element:
        """Return by · self · by⁻¹."""
        return by * self * by.inverse()

    @property
    def is_identity(self) -> bool:
        return self.length == 0

    # =========================================================================
    # Length and descents
    # =========================================================================

    @property
    def length(self) -> int:
        """Number of positive roots sent to negative roots."""
        if self._length is None:
            self._length = self._system.inversion_count(self._matrix)
        return self._length

    @property
    def right_descents(self) -> SimpleSubset:
        """{s : ℓ(a·s) < ℓ(a)}, i.e. simple roots sent negative."""
        if self._right is None:
            negative = np.flatnonzero(self._matrix.sum(axis=0) < 0)
            self._right = SimpleSubset.of(int(i) for i in negative)
        return self._right

    @property
    def left_descents(self) -> SimpleSubset:
        """{s : ℓ(s·a) < ℓ(a)}."""
        if self._left is None:
            self._left = self.inverse().right_descents
        return self._left

    def descents(self, side: Side) -> SimpleSubset:
        return self.left_descents if side == "left" else self.right_descents

    @property
    def word(self) -> tuple[int, ...]:
        """
        Canonical reduced word (0-based generator indices).

        Leftmost-descent-greedy: repeatedly strip the smallest-indexed
        left descent.
        """
        if self._word is None:
            letters: list[int] = []
            x: Element = self
            while x.length:
                s = x.left_descents.members[0]
                letters.append(s)
                x = self._system.generator(s) * x
            self._word = tuple(letters)
        return self._word

    def one_based_word(self) -> list[int]:
        return [i + 1 for i in self.word]

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Deterministic ordering: by length, then canonical word."""
        return (self.length, self.word)

    def lies_in(self, subset: SimpleSubset) -> bool:
        """True iff the element belongs to the parabolic subgroup W_J."""
        return all(s in subset for s in self.word)

    def act(self, vector: np.ndarray) -> np.ndarray:
        """Image of a root (or any coordinate vector) under the element."""
        return self._matrix @ vector


def canonical_word(a: Element) -> tuple[int, ...]:
    return a.word


def descents(a: Element, side: Side) -> SimpleSubset:
    return a.descents(side)
