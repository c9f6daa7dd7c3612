"""
Specorder - Ekedahl-Oort Strata
The Weyl group of Sp_2g as permutations of {1..2g}, the ε-tuple model of ^JW
and the specialization poset of the strata
"""

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache

from specorder.config import settings
from specorder.core.exceptions import (
    BoundExceededError,
    InvalidPermutationError,
    PreconditionError,
    QuotientMembershipError,
    TheoremViolationError,
    UnsupportedSystemError,
)
from specorder.core.logging import get_context_logger
from specorder.coxeter.element import Element
from specorder.coxeter.subsets import SimpleSubset
from specorder.coxeter.system import CoxeterSystem, cartan_matrix
from specorder.parabolic.quotients import in_quotient
from specorder.twisted.order import make_twisted_order, spec_leq_bfs
from specorder.twisted.poset import Poset, poset_from_predicate


# =============================================================================
# Permutation model
# =============================================================================


@dataclass(frozen=True, slots=True)
class SignedPermView:
    """One-line notation (w(1), …, w(2g))."""

    images: tuple[int, ...]

    @property
    def genus(self) -> int:
        return len(self.images) // 2

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: "SignedPermView") -> "SignedPermView":
        """(self ∘ other)(i) = self(other(i))."""
        return SignedPermView(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "SignedPermView":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return SignedPermView(tuple(inv))

    def validate(self) -> None:
        n = len(self.images)
        if n % 2 or sorted(self.images) != list(range(1, n + 1)):
            raise InvalidPermutationError(self.images, "not a permutation of {1..2g}")
        for i in range(1, n // 2 + 1):
            if self(i) + self(n + 1 - i) != n + 1:
                raise InvalidPermutationError(self.images, f"w({i}) + w({n + 1 - i}) != {n + 1}")


def identity_view(g: int) -> SignedPermView:
    return SignedPermView(tuple(range(1, 2 * g + 1)))


def _swap(images: list[int], a: int, b: int) -> None:
    images[a - 1], images[b - 1] = images[b - 1], images[a - 1]


@lru_cache(maxsize=None)
def generator_view(g: int, s: int) -> SignedPermView:
    """s_i = τ_i·τ_{2g−i} for i < g and s_g = τ_g (1-based i = s + 1)."""
    images = list(range(1, 2 * g + 1))
    i = s + 1
    if i < g:
        _swap(images, i, i + 1)
        _swap(images, 2 * g - i, 2 * g - i + 1)
    else:
        _swap(images, g, g + 1)
    return SignedPermView(tuple(images))


def build_symplectic(g: int) -> tuple[CoxeterSystem, SimpleSubset]:
    """The type C_g system (F trivial) and J = {s₁, …, s_{g−1}}."""
    if g < 1:
        raise UnsupportedSystemError("C", g, "genus must be at least 1")
    system = _symplectic_system(g)
    return system, SimpleSubset.of(range(g - 1))


@lru_cache(maxsize=16)
def _symplectic_system(g: int) -> CoxeterSystem:
    # rank 1 is allowed here, unlike build_system
    return CoxeterSystem("C", g, cartan_matrix("C", g))


def perm_view(a: Element, g: int) -> SignedPermView:
    view = identity_view(g)
    for s in a.word:
        view = view.compose(generator_view(g, s))
    return view


def _left_descent(winv: SignedPermView, g: int) -> int:
    for s in range(g):
        i = s + 1
        if winv(i) > winv(i + 1):
            return s
    return -1


def element_of_view(view: SignedPermView) -> Element:
    """Inverse of :func:`perm_view`, by peeling the smallest left descent."""
    view.validate()
    g = view.genus
    if g < 1:
        raise InvalidPermutationError(view.images, "empty permutation")
    letters: list[int] = []
    current = view
    while True:
        s = _left_descent(current.inverse(), g)
        if s < 0:
            break
        letters.append(s)
        current = generator_view(g, s).compose(current)
    system, _ = build_symplectic(g)
    return system.from_word(letters)


# =============================================================================
# ε-tuples
# =============================================================================


@dataclass(frozen=True, slots=True, order=True)
class EpsTuple:
    """(ε₁, …, ε_g) ∈ {0,1}^g."""

    eps: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.eps or any(e not in (0, 1) for e in self.eps):
            raise PreconditionError("ε must be a nonempty 0/1 tuple", details={"eps": list(self.eps)})

    @classmethod
    def parse(cls, bits: str) -> "EpsTuple":
        return cls(tuple(int(c) for c in bits.strip()))

    @property
    def genus(self) -> int:
        return len(self.eps)

    @property
    def bits(self) -> str:
        return "".join(str(e) for e in self.eps)

    @property
    def dimension(self) -> int:
        """Σ ε_i(g+1−i)."""
        g = self.genus
        return sum(e * (g + 1 - i) for i, e in enumerate(self.eps, start=1))

    def __str__(self) -> str:
        return self.bits


@dataclass(frozen=True, slots=True)
class EOStratum:
    eps: EpsTuple
    element: Element
    dimension: int


def sigma_of(eps: EpsTuple) -> tuple[int, ...]:
    """Σ = {j₁ < … < j_g}: i when ε_i = 0, otherwise 2g+1−i."""
    g = eps.genus
    return tuple(sorted(i if e == 0 else 2 * g + 1 - i for i, e in enumerate(eps.eps, start=1)))


def element_of_eps(eps: EpsTuple) -> Element:
    """w_Σ ∈ ^JW, defined by w⁻¹(i) = j_i."""
    g = eps.genus
    winv = [0] * (2 * g)
    for i, j in enumerate(sigma_of(eps), start=1):
        winv[i - 1] = j
        winv[2 * g - i] = 2 * g + 1 - j
    return element_of_view(SignedPermView(tuple(winv)).inverse())


def _require_jw(w: Element, g: int) -> SignedPermView:
    if not in_quotient(w, SimpleSubset.of(range(g - 1))):
        raise QuotientMembershipError(w.word, "^JW")
    return perm_view(w, g).inverse()


def eps_of(w: Element, g: int) -> EpsTuple:
    winv = _require_jw(w, g)
    sigma = {winv(i) for i in range(1, g + 1)}
    return EpsTuple(tuple(0 if i in sigma else 1 for i in range(1, g + 1)))


def jw_bruhat(w: Element, w_prime: Element, g: int) -> bool:
    """w ≤ w' on ^JW iff w⁻¹(i) ≤ w'⁻¹(i) for i = 1..g."""
    a, b = _require_jw(w, g), _require_jw(w_prime, g)
    return all(a(i) <= b(i) for i in range(1, g + 1))


# =============================================================================
# Strata
# =============================================================================


def all_eps(g: int) -> Iterable[EpsTuple]:
    """{0,1}^g in lexicographic order."""
    return (EpsTuple(bits) for bits in itertools.product((0, 1), repeat=g))


def eo_strata(g: int) -> list[EOStratum]:
    strata = []
    for eps in all_eps(g):
        element = element_of_eps(eps)
        if element.length != eps.dimension:
            raise TheoremViolationError(
                "stratum dimension must equal the length of its element",
                details={"eps": eps.bits, "length": element.length},
            )
        strata.append(EOStratum(eps=eps, element=element, dimension=eps.dimension))
    return strata


def eo_poset(g: int, max_genus: int | None = None) -> Poset[EOStratum]:
    """
    Closure order of the Ekedahl-Oort strata of 𝒜_g: ε ≤ ε' iff the stratum
    of ε lies in the closure of the stratum of ε'. Vertices in lexicographic ε order.
    """
    bound = max_genus if max_genus is not None else settings.max_eo_genus
    if g > bound:
        raise BoundExceededError(f"Ekedahl-Oort strata of genus {g}", bound)
    system, subset = build_symplectic(g)
    order = make_twisted_order(system, subset)
    logger = get_context_logger(__name__, genus=g)

    strata = eo_strata(g)
    logger.info("Building Ekedahl-Oort poset", extra={"strata": len(strata)})
    return poset_from_predicate(
        strata,
        lambda a, b: spec_leq_bfs(a.element, b.element, order),
        names=[stratum.eps.bits for stratum in strata],
        grading=[stratum.dimension for stratum in strata],
        progress_every=settings.progress_every,
    )


def w0_j_view(g: int) -> Sequence[int]:
    """w_{0,J} restricted to {1..g}: i ↦ g+1−i."""
    system, subset = build_symplectic(g)
    view = perm_view(system.longest_element(subset), g)
    return view.images[:g]
