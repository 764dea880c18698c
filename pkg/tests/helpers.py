"""Shared generation helpers for the fuzzing and acceptance suites."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from modbasis import (
    COEFFICIENT_POOL,
    GenSpec,
    KModuleStructure,
    ModuleOverAlgebra,
    NAryAlgebra,
    Step,
    placement_module_multiset,
    placement_space_multiset,
    random_structure,
    support,
)


def corpus_spec(index: int, salt: int = 0xA5EED) -> GenSpec:
    """Deterministic parameter draw for the random-structure corpus."""
    rng = random.Random(salt + index)
    n = rng.randint(1, 3)
    k = rng.randint(1, n)
    module_dim = rng.randint(1, 5)
    space_dim = rng.randint(1, 3) if k < n else rng.randint(0, 3)
    density = Fraction(rng.randint(1, 3), 10)
    return GenSpec(
        seed=index, n=n, k=k, module_dim=module_dim,
        space_dim=space_dim, density=density,
    )


def random_algebra(seed: int, n: int, dim: int, density: Fraction) -> NAryAlgebra:
    """Seeded sparse n-ary algebra over ``dim`` basis vectors."""
    rng = random.Random(seed)
    table = {}
    for key in product(range(dim), repeat=n):
        if rng.random() < density:
            table[key] = (rng.randrange(dim), rng.choice(COEFFICIENT_POOL))
    return NAryAlgebra(n, dim, table)


def random_pair(index: int, salt: int = 0xBEEF) -> ModuleOverAlgebra:
    """Deterministic algebra/action pair with arity 3 and two module slots."""
    rng = random.Random(salt + index)
    module_dim = rng.randint(1, 4)
    algebra_dim = rng.randint(1, 3)
    density = Fraction(rng.randint(1, 3), 10)
    algebra = random_algebra(rng.getrandbits(32), 3, algebra_dim, density)
    action = random_structure(
        GenSpec(
            seed=rng.getrandbits(32),
            n=3,
            k=2,
            module_dim=module_dim,
            space_dim=algebra_dim,
            density=density,
        )
    )
    return ModuleOverAlgebra(algebra, action)


def support_steps(structure: KModuleStructure, direction: str) -> list[Step]:
    """Every step the support can actually match, in one direction."""
    seen = set()
    for placement, _, _ in support(structure):
        occupants = placement_module_multiset(placement)
        spaces = placement_space_multiset(placement)
        for position in range(len(occupants)):
            rest = occupants[:position] + occupants[position + 1 :]
            seen.add((rest, spaces))
    return [Step(direction, rest, spaces) for rest, spaces in sorted(seen)]
