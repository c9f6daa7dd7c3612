"""
Specorder - Bruhat Order
Lifting-criterion comparison with a per-system memo, plus a subword oracle
"""

from specorder.core.exceptions import MixedSystemError
from specorder.coxeter.element import Element


def bruhat_leq(a: Element, b: Element) -> bool:
    """
    Return True iff a ≤ b in Bruhat order.

    Uses the lifting property: for s with ℓ(sb) < ℓ(b), a ≤ b iff sa ≤ sb
    when ℓ(sa) < ℓ(a), else a ≤ sb. Every step reduces to a single smaller
    pair, so the chain is walked iteratively and each visited pair memoized.
    """
    if a.system is not b.system:
        raise MixedSystemError()
    system = a.system
    memo = system.bruhat_memo

    visited: list[tuple[bytes, bytes]] = []
    while True:
        key = (a.key, b.key)
        cached = memo.get(key)
        if cached is not None:
            result = cached
            break
        visited.append(key)
        if a.length > b.length:
            result = False
            break
        if a.length == b.length:
            result = a == b
            break
        if a.length == 0:
            result = True
            break
        s = b.left_descents.members[0]
        gen = system.generator(s)
        if s in a.left_descents:
            a = gen * a
        b = gen * b

    for key in visited:
        memo[key] = result
    return result


def bruhat_leq_subword(a: Element, b: Element) -> bool:
    """Brute-force oracle: a is a product of some subword of b's reduced word."""
    if a.system is not b.system:
        raise MixedSystemError()
    return a in _subword_products(b)


def bruhat_cone(w: Element) -> list[Element]:
    """{x : x ≤ w}, sorted by length then canonical word."""
    return sorted(_subword_products(w), key=Element.sort_key)


def _subword_products(w: Element) -> set[Element]:
    system = w.system
    products = {system.identity()}
    for s in w.word:
        gen = system.generator(s)
        products |= {x * gen for x in products}
    return products
