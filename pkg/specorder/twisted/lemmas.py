"""
Specorder - Bruhat Order Lemmas
Witness searches for the statements the specialization order is built on.
Each search is guaranteed to succeed; a miss raises TheoremViolationError.
"""

from typing import Literal

from specorder.core.exceptions import PreconditionError, TheoremViolationError
from specorder.coxeter.bruhat import bruhat_cone, bruhat_leq
from specorder.coxeter.element import Element
from specorder.coxeter.subsets import SimpleSubset
from specorder.parabolic.quotients import (
    decompose,
    in_quotient,
    require_quotient,
    require_subgroup,
)
from specorder.twisted.order import TwistedOrder, spec_leq_bfs


def _words(**elements: Element) -> dict[str, list[int]]:
    return {name: x.one_based_word() for name, x in elements.items()}


def ymin_ymax(w: Element, x: Element) -> tuple[Element, Element]:
    """
    Smallest and largest elements of {y : w·y ≤ x} in Bruhat order.

    The set is {w⁻¹·z : z ≤ x}; it always contains w⁻¹.
    """
    w_inv = w.inverse()
    members = sorted((w_inv * z for z in bruhat_cone(x)), key=Element.sort_key)

    smallest = next((y for y in members if all(bruhat_leq(y, o) for o in members)), None)
    largest = next(
        (y for y in reversed(members) if all(bruhat_leq(o, y) for o in members)), None
    )
    if smallest is None or largest is None:
        raise TheoremViolationError(
            "{y : wy ≤ x} must have a smallest and a largest element", details=_words(w=w, x=x)
        )
    if smallest.length != w.length - (w * smallest).length:
        raise TheoremViolationError("ℓ(y_min) = ℓ(w) − ℓ(wy_min) fails", details=_words(w=w, x=x))
    if largest.length != w.length + (w * largest).length:
        raise TheoremViolationError("ℓ(y_max) = ℓ(w) + ℓ(wy_max) fails", details=_words(w=w, x=x))
    return smallest, largest


def bruhat_witness_lemmas(
    x_prime: Element, w: Element, w_prime: Element, variant: Literal[1, 2]
) -> Element:
    """
    For w ≤ w', some x ≤ x' with x·w ≤ x'·w' (variant 1) or x'·w ≤ x·w'
    (variant 2). The first witness by length, then word, is returned.
    """
    if not bruhat_leq(w, w_prime):
        raise PreconditionError("need w ≤ w'", details=_words(w=w, w_prime=w_prime))
    for x in bruhat_cone(x_prime):
        if variant == 1 and bruhat_leq(x * w, x_prime * w_prime):
            return x
        if variant == 2 and bruhat_leq(x_prime * w, x * w_prime):
            return x
    raise TheoremViolationError(
        f"no Bruhat witness for variant {variant}",
        details=_words(x_prime=x_prime, w=w, w_prime=w_prime),
    )


def bruhat_lifting_witness(
    x: Element, u: Element, u1_prime: Element, subset: SimpleSubset
) -> Element:
    """
    For x ∈ ^JW with ℓ(xu) = ℓ(x) + ℓ(u), write xu = u'x'. Given u'₁ ≤ u',
    return the u₁ ≤ u with x·u₁ = u'₁·x'.
    """
    require_quotient(x, subset)
    xu = x * u
    if xu.length != x.length + u.length:
        raise PreconditionError("need ℓ(xu) = ℓ(x) + ℓ(u)", details=_words(x=x, u=u))
    parts = decompose(xu, subset)
    if not bruhat_leq(u1_prime, parts.u):
        raise PreconditionError("need u'₁ ≤ u'", details=_words(u1_prime=u1_prime, u_prime=parts.u))

    # x·u₁ = u'₁·x' has exactly one solution
    u1 = x.inverse() * u1_prime * parts.w
    if not bruhat_leq(u1, u):
        raise TheoremViolationError(
            "lifting witness u₁ is not below u", details=_words(x=x, u=u, u1_prime=u1_prime)
        )
    return u1


def bruhatfour_witness(
    w: Element, u: Element, v: Element, order: TwistedOrder
) -> tuple[Element, tuple[int, ...]]:
    """
    For w ∈ ^JW and v ≤ u in W_J: some x ≤ v with a reduced word s₁…s_r whose
    prefixes keep ℓ(s_i…s₁·w·δ(s₁)…δ(s_i)) = ℓ(w), and x⁻¹wδ(x) ≤ u⁻¹wδ(v).

    Returns x and its 0-based word.
    """
    subset = order.j
    require_quotient(w, subset)
    require_subgroup(u, subset)
    require_subgroup(v, subset)
    if not bruhat_leq(v, u):
        raise PreconditionError("need v ≤ u", details=_words(u=u, v=v))

    system = order.system
    target = u.inverse() * w * order.delta(v)
    level: dict[Element, tuple[int, ...]] = {system.identity(): ()}
    while level:
        for x in sorted(level, key=Element.sort_key):
            if bruhat_leq(order.twisted_conjugate(x, w), target):
                return x, level[x]
        nxt: dict[Element, tuple[int, ...]] = {}
        for x, word in level.items():
            for s in subset:
                y = x * system.generator(s)
                if y in nxt or y.length != x.length + 1 or not bruhat_leq(y, v):
                    continue
                if order.twisted_conjugate(y, w).length == w.length:
                    nxt[y] = (*word, s)
        level = nxt
    raise TheoremViolationError("no length-preserving witness below v", details=_words(w=w, u=u, v=v))


def lemma_spec1_witness(
    w: Element, w_prime: Element, order: TwistedOrder
) -> tuple[Element, Element]:
    """
    For w ⪯ w' in ^JW: u, u' ∈ W_J with u·w ≤ u'·w'·δ(u')⁻¹·δ(u) and the
    right-hand side in ^JW.
    """
    subset = order.j
    require_quotient(w, subset)
    require_quotient(w_prime, subset)
    if not spec_leq_bfs(w, w_prime, order):
        raise PreconditionError("need w ⪯ w'", details=_words(w=w, w_prime=w_prime))

    elements = order.subgroup()
    for u in elements:
        uw = u * w
        for u_prime in elements:
            w1 = u_prime * w_prime * order.delta(u_prime).inverse() * order.delta(u)
            if in_quotient(w1, subset) and bruhat_leq(uw, w1):
                return u, u_prime
    raise TheoremViolationError("no (u, u') witness", details=_words(w=w, w_prime=w_prime))
