"""
Specorder - Howlett Decomposition
w = u·w̄·v across a double coset W_J w̄ W_K
"""

from dataclasses import dataclass

from specorder.core.exceptions import PreconditionError, TheoremViolationError
from specorder.core.logging import get_logger
from specorder.coxeter.element import Element
from specorder.coxeter.subsets import SimpleSubset
from specorder.parabolic.quotients import (
    conjugate_generator,
    decompose,
    double_coset_min,
    in_double_quotient,
    in_quotient,
)

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class HowlettDecomposition:
    """
    w = u·w̄·v with u ∈ W_J, w̄ ∈ ^JW^K and v ∈ W_K ∩ ^{K'}W,
    where K' = K ∩ ^{w̄⁻¹}J.
    """

    u: Element
    wbar: Element
    v: Element
    k_prime: SimpleSubset

    def product(self) -> Element:
        return self.u * self.wbar * self.v


def howlett_k_prime(wbar: Element, left: SimpleSubset, right: SimpleSubset) -> SimpleSubset:
    """K' = {t ∈ K : w̄·t·w̄⁻¹ ∈ J}."""
    return SimpleSubset.of(t for t in right if conjugate_generator(wbar, t) in left)


def howlett_j_prime(wbar: Element, left: SimpleSubset, right: SimpleSubset) -> SimpleSubset:
    """J' = J ∩ ^{w̄}K = {s ∈ J : w̄⁻¹·s·w̄ ∈ K}."""
    inverse = wbar.inverse()
    return SimpleSubset.of(s for s in left if conjugate_generator(inverse, s) in right)


def howlett_decompose(w: Element, left: SimpleSubset, right: SimpleSubset) -> HowlettDecomposition:
    """
    The unique factorization of w in W_J w̄ W_K.

    u is the W_J-part of w, since w̄·v lies in ^JW; v is then w̄⁻¹ times the
    ^JW-part. Membership and length additivity are checked on the way out.
    """
    wbar = double_coset_min(w, left, right)
    k_prime = howlett_k_prime(wbar, left, right)
    parts = decompose(w, left)
    v = wbar.inverse() * parts.w

    if not v.lies_in(right) or not in_quotient(v, k_prime):
        raise TheoremViolationError(
            "Howlett factor v must lie in W_K ∩ ^{K'}W",
            details={"w": w.one_based_word(), "v": v.one_based_word()},
        )
    if w.length != parts.u.length + wbar.length + v.length:
        raise TheoremViolationError(
            "Howlett factorization must be length additive",
            details={"w": w.one_based_word()},
        )
    return HowlettDecomposition(u=parts.u, wbar=wbar, v=v, k_prime=k_prime)


def howlett_variant_check(
    w: Element, wbar: Element, left: SimpleSubset, right: SimpleSubset
) -> bool:
    """
    For w ∈ w̄·W_K, whether the Howlett factor u lies in W_{J'} with
    J' = J ∩ ^{w̄}K. Always true for valid input.
    """
    if not in_double_quotient(wbar, left, right):
        raise PreconditionError(
            "w̄ must lie in ^JW^K", details={"wbar": wbar.one_based_word()}
        )
    if not (wbar.inverse() * w).lies_in(right):
        raise PreconditionError(
            "w must lie in w̄·W_K",
            details={"w": w.one_based_word(), "wbar": wbar.one_based_word()},
        )
    decomposition = howlett_decompose(w, left, right)
    j_prime = howlett_j_prime(wbar, left, right)
    result = decomposition.u.lies_in(j_prime)
    if not result:
        logger.warning(
            "Howlett variant failed",
            extra={"w": w.one_based_word(), "j_prime": j_prime.one_based()},
        )
    return result
