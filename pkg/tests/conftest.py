"""Shared fixtures: small structures with hand-checkable behavior."""

from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest

from modbasis import (
    KModuleStructure,
    ModuleOverAlgebra,
    NAryAlgebra,
    module_slot as M,
    space_slot as S,
)


def make_e1() -> KModuleStructure:
    # Indices 0 and 1 feed each other, index 2 only feeds itself.
    return KModuleStructure(
        2,
        1,
        3,
        1,
        {
            (M(0), S(0)): (1, 1),
            (M(1), S(0)): (0, 1),
            (M(2), S(0)): (2, 2),
        },
    )


def make_e2() -> KModuleStructure:
    # Every ordered triple over {0, 1} targets its sum mod 2.
    table = {}
    for triple in product(range(2), repeat=3):
        placement = tuple(M(i) for i in triple)
        table[placement] = (sum(triple) % 2, 1)
    return KModuleStructure(3, 3, 2, 0, table)


def make_e3(n=2, k=1, module_dim=3, space_dim=1) -> KModuleStructure:
    return KModuleStructure(n, k, module_dim, space_dim, {})


def make_e4() -> ModuleOverAlgebra:
    # Two idempotents, each acting on its own module line.
    algebra = NAryAlgebra(2, 2, {(0, 0): (0, 1), (1, 1): (1, 1)})
    action = KModuleStructure(
        2,
        1,
        2,
        2,
        {
            (M(0), S(0)): (0, 1),
            (M(1), S(1)): (1, 1),
        },
    )
    return ModuleOverAlgebra(algebra, action)


def make_e1_one_way() -> KModuleStructure:
    # E1 without the entry sending 1 back to 0: edge (0, 1) loses its reverse.
    structure = make_e1()
    table = dict(structure.table)
    del table[(M(1), S(0))]
    return KModuleStructure(2, 1, 3, 1, table)


@pytest.fixture
def e1() -> KModuleStructure:
    return make_e1()


@pytest.fixture
def e2() -> KModuleStructure:
    return make_e2()


@pytest.fixture
def e3() -> KModuleStructure:
    return make_e3()


@pytest.fixture
def e4() -> ModuleOverAlgebra:
    return make_e4()


@pytest.fixture
def e1_one_way() -> KModuleStructure:
    return make_e1_one_way()
