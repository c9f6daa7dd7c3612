"""
Specorder - Parabolic Quotients
Minimal coset representatives, parabolic decomposition and the quotient bijections
"""

from dataclasses import dataclass
from typing import Literal, NamedTuple

import numpy as np

from specorder.core.exceptions import (
    PreconditionError,
    QuotientMembershipError,
    TheoremViolationError,
)
from specorder.coxeter.bruhat import bruhat_leq
from specorder.coxeter.element import Element, Side
from specorder.coxeter.subsets import SimpleSubset
from specorder.coxeter.system import CoxeterSystem

ConvertKind = Literal["inverse", "conjugate_w0", "reverse_to_WK"]


@dataclass(frozen=True, slots=True)
class ParabolicDecomposition:
    """x = u·w with u ∈ W_J and w ∈ ^JW."""

    u: Element
    w: Element


class QuotientCharacterization(NamedTuple):
    """The four descriptions of ^JW, evaluated independently."""

    bruhat_minimal: bool
    no_left_descent: bool
    length_additive: bool
    roots_positive: bool

    @property
    def consistent(self) -> bool:
        return len(set(self)) == 1


# =============================================================================
# Membership
# =============================================================================


def in_quotient(x: Element, subset: SimpleSubset, side: Side = "left") -> bool:
    """True iff x ∈ ^JW (side="left") or x ∈ W^J (side="right")."""
    return not (x.descents(side) & subset)


def in_double_quotient(x: Element, left: SimpleSubset, right: SimpleSubset) -> bool:
    return in_quotient(x, left, "left") and in_quotient(x, right, "right")


def require_quotient(x: Element, subset: SimpleSubset, side: Side = "left") -> None:
    if not in_quotient(x, subset, side):
        label = f"^{subset!r}W" if side == "left" else f"W^{subset!r}"
        raise QuotientMembershipError(x.word, label)


def require_subgroup(x: Element, subset: SimpleSubset) -> None:
    if not x.lies_in(subset):
        raise QuotientMembershipError(x.word, f"W_{subset!r}")


# =============================================================================
# Enumeration
# =============================================================================


def min_coset_reps(
    system: CoxeterSystem, subset: SimpleSubset, side: Side = "left"
) -> list[Element]:
    """
    ^JW (side="left") or W^J (side="right"): the elements without a
    descent in J on that side, sorted by length then canonical word.
    """
    system.check_subset(subset)
    return [x for x in system.enumerate_group() if in_quotient(x, subset, side)]


def double_reps(
    system: CoxeterSystem, left: SimpleSubset, right: SimpleSubset
) -> list[Element]:
    """^JW^K, one minimal representative per double coset W_J\\W/W_K."""
    system.check_subset(left)
    system.check_subset(right)
    return [x for x in system.enumerate_group() if in_double_quotient(x, left, right)]


def double_coset_min(x: Element, left: SimpleSubset, right: SimpleSubset) -> Element:
    """The ^JW^K representative of W_J·x·W_K."""
    system = x.system
    while True:
        lower = x.left_descents & left
        if lower:
            x = system.generator(lower.members[0]) * x
            continue
        lower = x.right_descents & right
        if lower:
            x = x * system.generator(lower.members[0])
            continue
        return x


# =============================================================================
# Decomposition
# =============================================================================


def decompose(x: Element, subset: SimpleSubset) -> ParabolicDecomposition:
    """Strip left descents in J until x lands in ^JW."""
    system = x.system
    u = system.identity()
    while True:
        lower = x.left_descents & subset
        if not lower:
            return ParabolicDecomposition(u=u, w=x)
        gen = system.generator(lower.members[0])
        x = gen * x
        u = u * gen


def project_quotient(x: Element, finer: SimpleSubset, coarser: SimpleSubset) -> Element:
    """The canonical surjection ^{J'}W → ^JW for J' ⊆ J."""
    if not finer.issubset(coarser):
        raise PreconditionError(
            f"{finer!r} is not contained in {coarser!r}",
            details={"finer": finer.one_based(), "coarser": coarser.one_based()},
        )
    require_quotient(x, finer)
    return decompose(x, coarser).w


def quotient_characterizations(w: Element, subset: SimpleSubset) -> QuotientCharacterization:
    system = w.system
    coset = system.enumerate_subgroup(subset)

    bruhat_minimal = all(bruhat_leq(w, u * w) for u in coset)
    no_left_descent = all((system.generator(s) * w).length > w.length for s in subset)
    length_additive = all((u * w).length == u.length + w.length for u in coset)

    roots_positive = bool((root_images(w, subset) >= 0).all())

    return QuotientCharacterization(
        bruhat_minimal, no_left_descent, length_additive, roots_positive
    )


def right_multiplication_case(
    w: Element, s: int, subset: SimpleSubset
) -> tuple[Literal[1, 2, 3], int | None]:
    """
    For w ∈ ^JW and a simple reflection s, decide which of the three cases holds:
    1 (ws > w, ws ∈ ^JW), 2 (ws > w, ws = tw with t ∈ J; t is returned)
    or 3 (ws < w, ws ∈ ^JW).
    """
    require_quotient(w, subset)
    ws = w * w.system.generator(s)
    if ws.length < w.length:
        if not in_quotient(ws, subset):
            raise TheoremViolationError(
                "ws < w must stay in ^JW", details={"w": w.one_based_word(), "s": s + 1}
            )
        return 3, None
    if in_quotient(ws, subset):
        return 1, None
    t = w.system.generator_index(ws * w.inverse())
    if t < 0 or t not in subset:
        raise TheoremViolationError(
            "ws > w outside ^JW must equal tw with t in J",
            details={"w": w.one_based_word(), "s": s + 1},
        )
    return 2, t


# =============================================================================
# Conjugation of subsets
# =============================================================================


def conjugate_generator(w: Element, s: int) -> int:
    """Index of w·s·w⁻¹ if it is a simple reflection, else -1."""
    system = w.system
    return system.generator_index(system.generator(s).conjugate(w))


def conjugate_subset(w: Element, subset: SimpleSubset) -> SimpleSubset | None:
    """^wJ = wJw⁻¹ when every conjugate is simple, otherwise None."""
    images = [conjugate_generator(w, s) for s in subset]
    if any(i < 0 for i in images):
        return None
    return SimpleSubset.of(images)


# =============================================================================
# Quotient bijections
# =============================================================================


def convert(x: Element, subset: SimpleSubset, kind: ConvertKind) -> Element:
    """
    The three bijections between quotients, with K = w₀Jw₀:

    - ``inverse``: ^JW → W^J, x ↦ x⁻¹
    - ``conjugate_w0``: W^J → W^K, x ↦ w₀xw₀
    - ``reverse_to_WK``: ^JW → W^K, x ↦ x⁻¹w₀^K (reverses Bruhat order)
    """
    system = x.system
    if kind == "inverse":
        require_quotient(x, subset, "left")
        return x.inverse()
    if kind == "conjugate_w0":
        require_quotient(x, subset, "right")
        return x.conjugate(system.longest_element())
    if kind == "reverse_to_WK":
        require_quotient(x, subset, "left")
        opposite = system.opposite(subset)
        return x.inverse() * system.longest_in_quotient(opposite, "right")
    raise PreconditionError(f"Unknown conversion '{kind}'", details={"kind": kind})


def convert_target(system: CoxeterSystem, subset: SimpleSubset, kind: ConvertKind) -> list[Element]:
    """The quotient a conversion lands in, for bijectivity checks."""
    if kind == "inverse":
        return min_coset_reps(system, subset, "right")
    return min_coset_reps(system, system.opposite(subset), "right")


def root_images(w: Element, subset: SimpleSubset) -> np.ndarray:
    """w⁻¹(Φ_J⁺) as columns."""
    return w.inverse().matrix @ w.system.positive_roots_of(subset)
