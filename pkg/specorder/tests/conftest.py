"""
Shared fixtures: small Weyl groups and a word helper with 1-based letters.
"""

from collections.abc import Callable

import pytest

from specorder.coxeter.element import Element
from specorder.coxeter.subsets import SimpleSubset
from specorder.coxeter.system import CoxeterSystem, build_system


@pytest.fixture(scope="session")
def a2() -> CoxeterSystem:
    return build_system("A", 2)


@pytest.fixture(scope="session")
def a3() -> CoxeterSystem:
    return build_system("A", 3)


@pytest.fixture(scope="session")
def a3_flip() -> CoxeterSystem:
    """A3 with the diagram flip s1 <-> s3."""
    return build_system("A", 3, frobenius_map=[2, 1, 0])


@pytest.fixture(scope="session")
def c2() -> CoxeterSystem:
    return build_system("C", 2)


@pytest.fixture(scope="session")
def c3() -> CoxeterSystem:
    return build_system("C", 3)


@pytest.fixture
def word() -> Callable[[CoxeterSystem, list[int]], Element]:
    """word(system, [2, 1]) is s2·s1."""

    def build(system: CoxeterSystem, letters: list[int]) -> Element:
        return system.from_word(i - 1 for i in letters)

    return build


@pytest.fixture
def subset() -> Callable[..., SimpleSubset]:
    """subset(1, 3) is {s1, s3}."""

    def build(*letters: int) -> SimpleSubset:
        return SimpleSubset.of(i - 1 for i in letters)

    return build
