"""Shared fixtures: small symmetric groups and a cyclic group with non-self-inverse classes."""
import pytest

from hurwitz_lab.services.finite_group import conjugacy_classes, load_cayley_table
from hurwitz_lab.services.hurwitz_engine import HurwitzContext

Z3_TABLE = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]


@pytest.fixture(scope="session")
def s2() -> HurwitzContext:
    return HurwitzContext.symmetric(2)


@pytest.fixture(scope="session")
def s3() -> HurwitzContext:
    return HurwitzContext.symmetric(3)


@pytest.fixture(scope="session")
def s4() -> HurwitzContext:
    return HurwitzContext.symmetric(4)


@pytest.fixture(scope="session")
def z3() -> HurwitzContext:
    group = load_cayley_table(Z3_TABLE)
    return HurwitzContext.from_group(group, conjugacy_classes(group))
