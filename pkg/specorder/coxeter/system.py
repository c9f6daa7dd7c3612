"""
Specorder - Coxeter Systems
Finite Weyl groups of types A, B, C, D with their root systems
"""

import math
import re
from collections.abc import Iterable, Sequence
from typing import Literal

import numpy as np

from specorder.config import settings
from specorder.core.exceptions import (
    BoundExceededError,
    InvalidSubsetError,
    NotAnAutomorphismError,
    UnsupportedSystemError,
)
from specorder.core.logging import get_logger
from specorder.coxeter.element import Element
from specorder.coxeter.subsets import SimpleSubset

logger = get_logger(__name__)

Family = Literal["A", "B", "C", "D"]
FAMILIES: tuple[Family, ...] = ("A", "B", "C", "D")

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}
_TYPE_PATTERN = re.compile(r"^\s*([ABCDabcd])\s*(\d+)\s*$")

# a_ij · a_ji -> m(s_i, s_j) for i != j
_COXETER_FROM_CARTAN = {0: 2, 1: 3, 2: 4, 3: 6}


def cartan_matrix(family: str, rank: int) -> np.ndarray:
    """
    Cartan matrix with a_ij = <α_j, α_i^∨>, so that s_i(α_j) = α_j − a_ij·α_i.

    B and C share the C root datum (α_n long); the Weyl groups coincide.
    """
    a = 2 * np.eye(rank, dtype=np.int64)
    if family == "D":
        for i in range(rank - 2):
            a[i, i + 1] = a[i + 1, i] = -1
        a[rank - 3, rank - 1] = a[rank - 1, rank - 3] = -1
        return a
    for i in range(rank - 1):
        a[i, i + 1] = a[i + 1, i] = -1
    if family in ("B", "C") and rank >= 2:
        a[rank - 2, rank - 1] = -2
    return a


class CoxeterSystem:
    """
    A finite Weyl group W with simple reflections I = {0..rank-1}, its
    positive roots in the simple-root basis and a diagram automorphism F.

    Immutable after construction apart from idempotent caches (interned
    elements, subgroup enumerations, the Bruhat memo), which tolerate
    concurrent identical inserts.
    """

    def __init__(
        self,
        family: Family,
        rank: int,
        cartan: np.ndarray,
        frobenius: Sequence[int] | None = None,
        max_order: int | None = None,
    ) -> None:
        self.family: Family = family
        self.rank = rank
        self.max_order = max_order or settings.max_group_order

        cartan = np.array(cartan, dtype=np.int64)
        cartan.setflags(write=False)
        self.cartan = cartan
        self.coxeter_matrix: tuple[tuple[int, ...], ...] = tuple(
            tuple(
                1 if i == j else _COXETER_FROM_CARTAN[int(cartan[i, j] * cartan[j, i])]
                for j in range(rank)
            )
            for i in range(rank)
        )

        self._generators = tuple(self._reflection_matrix(i) for i in range(rank))
        self.positive_roots = self._enumerate_positive_roots()
        self.roots = np.hstack([self.positive_roots, -self.positive_roots])
        self.roots.setflags(write=False)

        self._elements: dict[bytes, Element] = {}
        self._subgroups: dict[int, tuple[Element, ...]] = {}
        self.bruhat_memo: dict[tuple[bytes, bytes], bool] = {}

        self.frobenius: tuple[int, ...] = self._validate_frobenius(
            tuple(range(rank)) if frobenius is None else tuple(frobenius)
        )

        logger.debug(
            "Built Coxeter system",
            extra={"system": self.name, "positive_roots": self.num_positive_roots},
        )

    # =========================================================================
    # Construction helpers
    # =========================================================================

    def _reflection_matrix(self, i: int) -> np.ndarray:
        m = np.eye(self.rank, dtype=np.int64)
        m[i, :] -= self.cartan[i, :]
        m[i, i] = -1
        m.setflags(write=False)
        return m

    def _enumerate_positive_roots(self) -> np.ndarray:
        simple = [tuple(int(v) for v in row) for row in np.eye(self.rank, dtype=np.int64)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for root in frontier:
                vec = np.array(root, dtype=np.int64)
                for gen in self._generators:
                    image = tuple(int(v) for v in gen @ vec)
                    if image not in seen:
                        seen.add(image)
                        nxt.append(image)
            frontier = nxt
        positive = sorted((r for r in seen if min(r) >= 0), key=lambda r: (sum(r), r))
        roots = np.array(positive, dtype=np.int64).T
        roots.setflags(write=False)
        return roots

    def _validate_frobenius(self, frobenius: tuple[int, ...]) -> tuple[int, ...]:
        if sorted(frobenius) != list(range(self.rank)):
            raise NotAnAutomorphismError(frobenius, "not a bijection of I")
        m = self.coxeter_matrix
        for s in range(self.rank):
            for t in range(self.rank):
                if m[frobenius[s]][frobenius[t]] != m[s][t]:
                    raise NotAnAutomorphismError(
                        frobenius,
                        f"m(F(s{s + 1}), F(s{t + 1})) != m(s{s + 1}, s{t + 1})",
                    )
        return frobenius

    # =========================================================================
    # Descriptive properties
    # =========================================================================

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def num_positive_roots(self) -> int:
        return int(self.positive_roots.shape[1])

    @property
    def order(self) -> int:
        """|W| from the classical formulas."""
        n = self.rank
        if self.family == "A":
            return math.factorial(n + 1)
        if self.family == "D":
            return 2 ** (n - 1) * math.factorial(n)
        return 2**n * math.factorial(n)

    @property
    def simple_reflections(self) -> SimpleSubset:
        return SimpleSubset.full(self.rank)

    @property
    def frobenius_is_identity(self) -> bool:
        return self.frobenius == tuple(range(self.rank))

    def __repr__(self) -> str:
        return f"CoxeterSystem({self.name}, F={[i + 1 for i in self.frobenius]})"

    # =========================================================================
    # Elements
    # =========================================================================

    def element(self, matrix: np.ndarray) -> Element:
        """Intern an element by its matrix."""
        key = np.ascontiguousarray(matrix, dtype=np.int64).tobytes()
        found = self._elements.get(key)
        if found is None:
            found = self._elements.setdefault(key, Element(self, matrix))
        return found

    def identity(self) -> Element:
        return self.element(np.eye(self.rank, dtype=np.int64))

    def generator(self, s: int) -> Element:
        return self.element(self._generators[s])

    def from_word(self, word: Iterable[int]) -> Element:
        """Product of the generators along a 0-based word."""
        m = np.eye(self.rank, dtype=np.int64)
        for s in word:
            m = m @ self._generators[s]
        return self.element(m)

    def multiply(self, a: Element, b: Element) -> Element:
        return a * b

    def inverse(self, a: Element) -> Element:
        return a.inverse()

    def inversion_count(self, matrix: np.ndarray) -> int:
        return int(np.count_nonzero((matrix @ self.positive_roots).sum(axis=0) < 0))

    def inverse_matrix(self, matrix: np.ndarray) -> np.ndarray:
        """
        Exact inverse through the root permutation: column s of the inverse
        is the root that the matrix sends to α_s.
        """
        images = matrix @ self.roots
        inverse = np.empty((self.rank, self.rank), dtype=np.int64)
        for s in range(self.rank):
            target = np.zeros(self.rank, dtype=np.int64)
            target[s] = 1
            hits = np.flatnonzero((images == target[:, None]).all(axis=0))
            inverse[:, s] = self.roots[:, hits[0]]
        return inverse

    def apply_frobenius(self, a: Element) -> Element:
        """Image of a under the automorphism extending F letterwise."""
        if self.frobenius_is_identity:
            return a
        return self.from_word(self.frobenius[s] for s in a.word)

    def frobenius_subset(self, subset: SimpleSubset) -> SimpleSubset:
        return SimpleSubset.of(self.frobenius[s] for s in subset)

    # =========================================================================
    # Parabolic subgroups
    # =========================================================================

    def check_subset(self, subset: SimpleSubset) -> SimpleSubset:
        if subset.max_index() >= self.rank:
            raise InvalidSubsetError(subset.one_based(), self.rank)
        return subset

    def longest_element(self, subset: SimpleSubset | None = None) -> Element:
        """w_{0,J}: climb by right ascents in J until none is left."""
        subset = self.simple_reflections if subset is None else self.check_subset(subset)
        x = self.identity()
        while True:
            ascents = [s for s in subset if s not in x.right_descents]
            if not ascents:
                return x
            x = x * self.generator(ascents[0])

    def longest_in_quotient(
        self, subset: SimpleSubset, side: Literal["left", "right"] = "right"
    ) -> Element:
        """w₀^J = w₀·w_{0,J} (longest of W^J) or ^Jw₀ = w_{0,J}·w₀ (longest of ^JW)."""
        w0, w0j = self.longest_element(), self.longest_element(subset)
        return w0 * w0j if side == "right" else w0j * w0

    def opposite(self, subset: SimpleSubset) -> SimpleSubset:
        """J^opp = w₀Jw₀."""
        w0 = self.longest_element()
        return SimpleSubset.of(self.generator_index(self.generator(s).conjugate(w0)) for s in subset)

    def generator_index(self, a: Element) -> int:
        """Index of a simple reflection, or -1 if a is not simple."""
        if a.length != 1:
            return -1
        return a.word[0]

    def enumerate_subgroup(self, subset: SimpleSubset | None = None) -> tuple[Element, ...]:
        """
        All elements of W_J, each exactly once, by breadth-first closure under
        right multiplication by J. Sorted by length, then canonical word.
        """
        subset = self.simple_reflections if subset is None else self.check_subset(subset)
        cached = self._subgroups.get(subset.mask)
        if cached is not None:
            return cached

        gens = [self.generator(s) for s in subset]
        e = self.identity()
        seen: dict[Element, None] = {e: None}
        frontier = [e]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = x * g
                    if y not in seen:
                        seen[y] = None
                        nxt.append(y)
                        if len(seen) > self.max_order:
                            raise BoundExceededError(f"W_{subset!r} of {self.name}", self.max_order)
            frontier = nxt

        result = tuple(sorted(seen, key=Element.sort_key))
        logger.debug(
            "Enumerated parabolic subgroup",
            extra={"system": self.name, "subset": repr(subset), "order": len(result)},
        )
        return self._subgroups.setdefault(subset.mask, result)

    def enumerate_group(self) -> tuple[Element, ...]:
        if self.order > self.max_order:
            raise BoundExceededError(f"W({self.name})", self.max_order)
        return self.enumerate_subgroup(self.simple_reflections)

    # =========================================================================
    # Roots
    # =========================================================================

    def root_support(self, root: np.ndarray) -> SimpleSubset:
        return SimpleSubset.of(int(i) for i in np.flatnonzero(root))

    def positive_roots_of(self, subset: SimpleSubset) -> np.ndarray:
        """Φ_J⁺ as columns: positive roots supported in J."""
        outside = [i for i in range(self.rank) if i not in subset]
        if not outside:
            return self.positive_roots
        keep = (self.positive_roots[outside, :] == 0).all(axis=0)
        return self.positive_roots[:, keep]


def parse_type(text: str) -> tuple[Family, int]:
    """Parse a Cartan type label such as ``"C3"``."""
    match = _TYPE_PATTERN.match(text)
    if match is None:
        raise UnsupportedSystemError(text, 0, "expected a label like A3 or C2")
    family = match.group(1).upper()
    return family, int(match.group(2))  # type: ignore[return-value]


def build_system(
    family: str,
    rank: int,
    frobenius_map: Sequence[int] | None = None,
    max_order: int | None = None,
) -> CoxeterSystem:
    """
    Build the finite Weyl group of the given Dynkin type.

    Args:
        family: One of A, B, C, D
        rank: Number of simple reflections
        frobenius_map: 0-based permutation of I; identity when omitted
        max_order: Enumeration bound; ``settings.max_group_order`` when omitted

    Raises:
        UnsupportedSystemError: Unknown family or rank below the family minimum
        NotAnAutomorphismError: frobenius_map does not preserve the Coxeter matrix
    """
    family = family.upper()
    if family not in FAMILIES:
        raise UnsupportedSystemError(family, rank, "family must be one of A, B, C, D")
    if rank < _MIN_RANK[family]:
        raise UnsupportedSystemError(
            family, rank, f"family {family} requires rank >= {_MIN_RANK[family]}"
        )
    return CoxeterSystem(
        family,  # type: ignore[arg-type]
        rank,
        cartan_matrix(family, rank),
        frobenius=frobenius_map,
        max_order=max_order,
    )
