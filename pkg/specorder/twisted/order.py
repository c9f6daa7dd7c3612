"""
Specorder - Twisted Specialization Order
The automorphism δ: W_J → W_K and the order w ⪯ w' on ^JW
"""

from collections.abc import Mapping

from specorder.config import settings
from specorder.core.exceptions import (
    BoundExceededError,
    NotAnAutomorphismError,
    PreconditionError,
)
from specorder.core.logging import get_context_logger
from specorder.coxeter.bruhat import bruhat_cone, bruhat_leq
from specorder.coxeter.element import Element
from specorder.coxeter.subsets import SimpleSubset
from specorder.coxeter.system import CoxeterSystem
from specorder.parabolic.quotients import (
    conjugate_generator,
    decompose,
    in_quotient,
    min_coset_reps,
    require_quotient,
    require_subgroup,
)
from specorder.twisted.poset import Poset, poset_from_predicate


class TwistedOrder:
    """
    The data (J, δ) defining ⪯_{J,δ}.

    δ is stored on generators (``generator_map[s] = δ(s)``) and extended
    letterwise; images are cached per element. The twisted-conjugation orbits
    used by :func:`spec_leq_bfs` are cached per starting element.
    """

    def __init__(
        self,
        system: CoxeterSystem,
        subset: SimpleSubset,
        target: SimpleSubset,
        generator_map: Mapping[int, int],
        label: str = "abstract",
    ) -> None:
        self.system = system
        self.j = system.check_subset(subset)
        self.k = system.check_subset(target)
        self.generator_map: dict[int, int] = dict(sorted(generator_map.items()))
        self.label = label
        self._validate()
        self._inverse_map = {t: s for s, t in self.generator_map.items()}
        self._delta: dict[Element, Element] = {}
        self._orbits: dict[Element, tuple[Element, ...]] = {}
        self.logger = get_context_logger(
            __name__, system=system.name, j=self.j.one_based(), delta=label
        )

    def _validate(self) -> None:
        if set(self.generator_map) != set(self.j) or sorted(self.generator_map.values()) != list(
            self.k
        ):
            raise PreconditionError(
                "δ must map J bijectively onto K",
                details={"j": self.j.one_based(), "k": self.k.one_based()},
            )
        m = self.system.coxeter_matrix
        for s, ds in self.generator_map.items():
            for t, dt in self.generator_map.items():
                if m[ds][dt] != m[s][t]:
                    raise NotAnAutomorphismError(
                        tuple(self.generator_map[i] for i in self.j),
                        f"m(δ(s{s + 1}), δ(s{t + 1})) != m(s{s + 1}, s{t + 1})",
                    )

    def __repr__(self) -> str:
        pairs = ", ".join(f"s{s + 1}->s{t + 1}" for s, t in self.generator_map.items())
        return f"TwistedOrder({self.system.name}, J={self.j!r}, δ: {pairs or 'trivial'})"

    # =========================================================================
    # δ
    # =========================================================================

    def delta(self, u: Element) -> Element:
        """δ(u), for u ∈ W_J."""
        image = self._delta.get(u)
        if image is None:
            require_subgroup(u, self.j)
            image = self.system.from_word(self.generator_map[s] for s in u.word)
            self._delta[u] = image
        return image

    def delta_inverse(self, v: Element) -> Element:
        require_subgroup(v, self.k)
        return self.system.from_word(self._inverse_map[t] for t in v.word)

    def subgroup(self) -> tuple[Element, ...]:
        """W_J, bounded by ``settings.max_subgroup_order``."""
        elements = self.system.enumerate_subgroup(self.j)
        if len(elements) > settings.max_subgroup_order:
            raise BoundExceededError(f"W_{self.j!r}", settings.max_subgroup_order)
        return elements

    def twisted_conjugate(self, u: Element, w: Element) -> Element:
        """u⁻¹·w·δ(u)."""
        return u.inverse() * w * self.delta(u)

    # =========================================================================
    # Orbits
    # =========================================================================

    def length_preserving_orbit(self, w: Element) -> tuple[Element, ...]:
        """
        Breadth-first closure of {w} under x ↦ s·x·δ(s), s ∈ J, keeping only
        images of length ℓ(w). Sorted by length then canonical word.
        """
        cached = self._orbits.get(w)
        if cached is not None:
            return cached
        moves = [(self.system.generator(s), self.system.generator(t)) for s, t in self.generator_map.items()]
        seen = {w}
        frontier = [w]
        while frontier:
            nxt = []
            for x in frontier:
                for gen, image in moves:
                    y = gen * x * image
                    if y.length == w.length and y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        orbit = tuple(sorted(seen, key=Element.sort_key))
        return self._orbits.setdefault(w, orbit)


# =============================================================================
# Factories
# =============================================================================


def make_twisted_order(system: CoxeterSystem, subset: SimpleSubset) -> TwistedOrder:
    """
    δ(u) = w₀^J·F(u)·(w₀^J)⁻¹ with K = w₀Jw₀.

    Raises:
        PreconditionError: F(J) ≠ J
    """
    system.check_subset(subset)
    if system.frobenius_subset(subset) != subset:
        raise PreconditionError(
            "Frobenius must stabilize J",
            details={"j": subset.one_based(), "frobenius": [i + 1 for i in system.frobenius]},
        )
    w0_j = system.longest_in_quotient(subset, "right")
    mapping = {s: conjugate_generator(w0_j, system.frobenius[s]) for s in subset}
    return TwistedOrder(system, subset, system.opposite(subset), mapping, label="frobenius")


def make_abstract_twisted_order(
    system: CoxeterSystem,
    subset: SimpleSubset,
    target: SimpleSubset,
    generator_map: Mapping[int, int],
) -> TwistedOrder:
    """Any isomorphism W_J → W_K given on generators."""
    return TwistedOrder(system, subset, target, generator_map, label="abstract")


def delta_is_order_preserving(order: TwistedOrder) -> bool:
    """u ≤ u' iff δ(u) ≤ δ(u') on all of W_J."""
    elements = order.subgroup()
    images = [order.delta(u) for u in elements]
    return all(
        bruhat_leq(a, b) == bruhat_leq(da, db)
        for a, da in zip(elements, images, strict=True)
        for b, db in zip(elements, images, strict=True)
    )


# =============================================================================
# The order
# =============================================================================


def spec_leq_naive_witness(w: Element, w2: Element, order: TwistedOrder) -> Element | None:
    """The first u ∈ W_J (by length, then word) with u⁻¹wδ(u) ≤ w', or None."""
    for u in order.subgroup():
        if bruhat_leq(order.twisted_conjugate(u, w), w2):
            return u
    return None


def spec_leq_naive(w: Element, w2: Element, order: TwistedOrder) -> bool:
    """w ⪯ w' by exhaustive search over W_J."""
    return spec_leq_naive_witness(w, w2, order) is not None


def spec_leq_bfs(w: Element, w2: Element, order: TwistedOrder) -> bool:
    """w ⪯ w' via the length-preserving twisted-conjugation orbit of w."""
    if w.length > w2.length:
        return False
    return any(bruhat_leq(x, w2) for x in order.length_preserving_orbit(w))


def spec_coroll_check(
    w: Element, w2: Element, u: Element, v: Element, order: TwistedOrder
) -> bool:
    """
    Whether u·w'·δ(v)⁻¹ ≤ w. When it holds, w' ⪯ w.

    Raises:
        PreconditionError: w, w' not in ^JW; u, v not in W_J; or v ≰ u
    """
    require_quotient(w, order.j)
    require_quotient(w2, order.j)
    require_subgroup(u, order.j)
    require_subgroup(v, order.j)
    if not bruhat_leq(v, u):
        raise PreconditionError(
            "need v ≤ u", details={"u": u.one_based_word(), "v": v.one_based_word()}
        )
    return bruhat_leq(u * w2 * order.delta(v).inverse(), w)


def spec_leq_pair_witness(
    w: Element, w2: Element, order: TwistedOrder
) -> tuple[Element, Element] | None:
    """Some (u, v) with v ≤ u in W_J and u·w·δ(v)⁻¹ ≤ w', or None."""
    for u in order.subgroup():
        left = u * w
        for v in bruhat_cone(u):
            if bruhat_leq(left * order.delta(v).inverse(), w2):
                return u, v
    return None


def spec_leq_pair_oracle(w: Element, w2: Element, order: TwistedOrder) -> bool:
    """w ⪯ w' iff some v ≤ u in W_J has u·w·δ(v)⁻¹ ≤ w'."""
    return spec_leq_pair_witness(w, w2, order) is not None


def lengthequal_check(w: Element, w2: Element, order: TwistedOrder) -> bool:
    """True exactly for a violation: w ⪯ w', ℓ(w) = ℓ(w') and w ≠ w'."""
    return w != w2 and w.length == w2.length and spec_leq_bfs(w, w2, order)


# =============================================================================
# Posets and closures
# =============================================================================


def quotient_elements(order: TwistedOrder) -> list[Element]:
    return min_coset_reps(order.system, order.j, "left")


def spec_poset(order: TwistedOrder) -> Poset[Element]:
    """(^JW, ⪯) with the partial-order axioms checked and covers computed."""
    elements = quotient_elements(order)
    order.logger.info("Building specialization poset", extra={"size": len(elements)})
    poset = poset_from_predicate(
        elements,
        lambda a, b: spec_leq_bfs(a, b, order),
        names=["".join(f"s{i + 1}" for i in x.word) or "e" for x in elements],
        grading=[x.length for x in elements],
        progress_every=settings.progress_every,
    )
    order.logger.info("Specialization poset complete", extra={"covers": len(poset.covers)})
    return poset


def bruhat_poset(elements: list[Element]) -> Poset[Element]:
    return poset_from_predicate(
        elements,
        bruhat_leq,
        names=["".join(f"s{i + 1}" for i in x.word) or "e" for x in elements],
        grading=[x.length for x in elements],
        progress_every=settings.progress_every,
    )


def closure_set(w: Element, order: TwistedOrder) -> frozenset[Element]:
    """{w' ∈ ^JW : w' ⪯ w}."""
    require_quotient(w, order.j)
    return frozenset(x for x in quotient_elements(order) if spec_leq_bfs(x, w, order))


def closure_set_from_cone(w: Element, order: TwistedOrder) -> frozenset[Element]:
    """
    The closure through the Bruhat cone of w: every x'·δ(v) ∈ ^JW with
    x ≤ w, x = u·x' its parabolic decomposition and v ≤ u.
    """
    require_quotient(w, order.j)
    found: set[Element] = set()
    for x in bruhat_cone(w):
        parts = decompose(x, order.j)
        for v in bruhat_cone(parts.u):
            candidate = parts.w * order.delta(v)
            if in_quotient(candidate, order.j):
                found.add(candidate)
    return frozenset(found)
