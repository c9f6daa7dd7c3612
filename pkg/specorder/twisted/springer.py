"""
Specorder - Springer Orbit Criteria
Equality and closure of (B×B)-orbit labels (x, w) ∈ W × W
"""

from dataclasses import dataclass

from specorder.coxeter.bruhat import bruhat_cone, bruhat_leq
from specorder.coxeter.element import Element
from specorder.parabolic.quotients import require_quotient
from specorder.twisted.order import TwistedOrder


@dataclass(frozen=True, slots=True)
class OrbitPair:
    """The label (x, w) of the orbit Σ^{x,w}."""

    x: Element
    w: Element


def springer_orbit_equal(p: OrbitPair, q: OrbitPair, order: TwistedOrder) -> bool:
    """
    Σ^p = Σ^q iff some u ∈ W_J has q.x = p.x·F(u)⁻¹ and q.w·u = p.w.

    The second equation fixes u = q.w⁻¹·p.w.
    """
    u = q.w.inverse() * p.w
    if not u.lies_in(order.j):
        return False
    return q.x == p.x * order.system.apply_frobenius(u).inverse()


def springer_orbit_in_closure(p: OrbitPair, q: OrbitPair, order: TwistedOrder) -> bool:
    """
    Σ^q ⊆ closure(Σ^p) for p.x, q.x ∈ W^J: some u ∈ W_J has
    p.x·u⁻¹ ≤ q.x and F(q.w)·u ≤ F(p.w).
    """
    require_quotient(p.x, order.j, "right")
    require_quotient(q.x, order.j, "right")
    system = order.system
    fw, fw_q = system.apply_frobenius(p.w), system.apply_frobenius(q.w)
    return any(
        bruhat_leq(p.x * u.inverse(), q.x) and bruhat_leq(fw_q * u, fw)
        for u in order.subgroup()
    )


def sigma_closure(w: Element) -> frozenset[Element]:
    """The labels x with Σ^{xw₀^J,1} in the closure of Σ^{ww₀^J,1}: the Bruhat cone of w."""
    return frozenset(bruhat_cone(w))
