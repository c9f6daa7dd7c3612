"""
Specorder - Refinement Types
Refinement of parabolic types, the root criterion and the stable types J_∞, K_∞
"""

from dataclasses import dataclass

import numpy as np

from specorder.core.exceptions import PreconditionError, TheoremViolationError
from specorder.core.logging import get_logger
from specorder.coxeter.element import Element
from specorder.coxeter.subsets import SimpleSubset
from specorder.parabolic.quotients import (
    conjugate_generator,
    conjugate_subset,
    double_coset_min,
    in_double_quotient,
    require_quotient,
)

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class OrbitTypeStep:
    j: SimpleSubset
    k: SimpleSubset
    y: Element


@dataclass(frozen=True, slots=True)
class OrbitTypeSequence:
    """Types (J_n, K_n) and relative positions y_n until the first repeat."""

    trace: tuple[OrbitTypeStep, ...]
    stable_index: int

    @property
    def stable(self) -> OrbitTypeStep:
        return self.trace[self.stable_index]

    @property
    def j_infinity(self) -> SimpleSubset:
        return self.stable.j

    @property
    def k_infinity(self) -> SimpleSubset:
        return self.stable.k

    @property
    def y_infinity(self) -> Element:
        return self.stable.y


def refinement_type(left: SimpleSubset, right: SimpleSubset, w: Element) -> SimpleSubset:
    """J ∩ ^wK = {s ∈ J : w⁻¹·s·w ∈ K} for w ∈ ^JW^K."""
    if not in_double_quotient(w, left, right):
        raise PreconditionError(
            "refinement type needs w in ^JW^K",
            details={"w": w.one_based_word(), "j": left.one_based(), "k": right.one_based()},
        )
    inverse = w.inverse()
    return SimpleSubset.of(s for s in left if conjugate_generator(inverse, s) in right)


def refinement_contains_borel(left: SimpleSubset, right: SimpleSubset, w: Element) -> bool:
    """Whether every root of w⁻¹(Φ_J⁺) is positive or lies in Φ_K."""
    system = w.system
    images = w.inverse().matrix @ system.positive_roots_of(left)
    positive = (images >= 0).all(axis=0)
    outside = [i for i in range(system.rank) if i not in right]
    in_k = (images[outside, :] == 0).all(axis=0) if outside else np.ones_like(positive)
    return bool((positive | in_k).all())


def _shift(subset: SimpleSubset, by: Element) -> SimpleSubset:
    image = conjugate_subset(by, subset)
    if image is None:
        raise TheoremViolationError(
            "conjugate of a simple subset is not simple",
            details={"subset": subset.one_based(), "by": by.one_based_word()},
        )
    return image


def j_infinity(w: Element, subset: SimpleSubset) -> tuple[SimpleSubset, SimpleSubset]:
    """
    The largest J' ⊆ J with ^{ww₀^J}J' = J', and K_∞ = ^{w₀^J}J_∞.

    Shrinks J'_{k+1} = {s ∈ J'_k : (ww₀^J)s(ww₀^J)⁻¹ ∈ J'_k} to its fixed
    point, then checks K_∞ = ^{w⁻¹}J_∞.
    """
    require_quotient(w, subset)
    system = w.system
    w0_j = system.longest_in_quotient(subset, "right")
    y = w * w0_j

    current = subset
    while True:
        shrunk = SimpleSubset.of(s for s in current if conjugate_generator(y, s) in current)
        if shrunk == current:
            break
        current = shrunk

    k_inf = _shift(current, w0_j)
    if conjugate_subset(w.inverse(), current) != k_inf:
        raise TheoremViolationError(
            "K_∞ must equal both ^{w₀^J}J_∞ and ^{w⁻¹}J_∞",
            details={"w": w.one_based_word(), "j_inf": current.one_based()},
        )
    return current, k_inf


def orbit_type_sequence(w: Element, subset: SimpleSubset) -> OrbitTypeSequence:
    """
    J_0 = J, K_0 = w₀Jw₀; y_n is the ^{J_n}W^{K_n} representative of w,
    J_{n+1} = J_n ∩ ^{y_n}K_n and K_{n+1} = ^{w₀^J}J_{n+1}. Stops at the
    first repeated step.
    """
    require_quotient(w, subset)
    system = w.system
    w0_j = system.longest_in_quotient(subset, "right")

    left, right = subset, system.opposite(subset)
    trace: list[OrbitTypeStep] = []
    while True:
        step = OrbitTypeStep(j=left, k=right, y=double_coset_min(w, left, right))
        if trace and trace[-1] == step:
            break
        trace.append(step)
        left = refinement_type(step.j, step.k, step.y)
        right = _shift(left, w0_j)

    logger.debug(
        "Orbit type sequence stabilized",
        extra={"w": w.one_based_word(), "steps": len(trace)},
    )
    return OrbitTypeSequence(trace=tuple(trace), stable_index=len(trace) - 1)
