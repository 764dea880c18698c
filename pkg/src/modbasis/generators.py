"""Seeded construction of structures.

Random sparse tables for fuzzing, symmetric completion of one-way
tables, a fully populated modular family with known components, and the
zero table.  All generation is deterministic in the seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterator

from .core import (
    MODULE_TAG,
    SPACE_TAG,
    KModuleStructure,
    enumeration_budget,
    placement_module_multiset,
    placement_space_size,
)
from .errors import BudgetError, SymmetrizeConflict

COEFFICIENT_POOL = (
    Fraction(1),
    Fraction(-1),
    Fraction(2),
    Fraction(-2),
    Fraction(1, 2),
)


@dataclass(frozen=True)
class GenSpec:
    """Shape and density of a structure to generate.

    ``density`` is the inclusion probability of each placement, kept as
    an exact rational in [0, 1].
    """

    seed: int
    n: int
    k: int
    module_dim: int
    space_dim: int
    density: Fraction

    def __post_init__(self):
        object.__setattr__(self, "density", Fraction(self.density))


def _check_spec(spec: GenSpec):
    if spec.n < 1:
        raise ValueError(f"arity must be at least 1, got {spec.n}")
    if not 1 <= spec.k <= spec.n:
        raise ValueError(f"k must lie in 1..{spec.n}, got {spec.k}")
    if spec.module_dim < 0 or spec.space_dim < 0:
        raise ValueError("dimensions must be nonnegative")
    if not 0 <= spec.density <= 1:
        raise ValueError(f"density must lie in [0, 1], got {spec.density}")


def _all_placements(
    n: int, k: int, module_dim: int, space_dim: int
) -> Iterator[tuple]:
    for module_positions in combinations(range(n), k):
        chosen = set(module_positions)
        for module_fill in product(range(module_dim), repeat=k):
            for space_fill in product(range(space_dim), repeat=n - k):
                slots = []
                module_iter = iter(module_fill)
                space_iter = iter(space_fill)
                for position in range(n):
                    if position in chosen:
                        slots.append((MODULE_TAG, next(module_iter)))
                    else:
                        slots.append((SPACE_TAG, next(space_iter)))
                yield tuple(slots)


def random_structure(spec: GenSpec) -> KModuleStructure:
    """Independently include each placement with the requested density.

    Included placements get a uniform target and a coefficient from a
    small pool of units.  Identical specs always give identical tables.
    Raises BudgetError when the placement space itself is too large to
    enumerate.
    """
    _check_spec(spec)
    size = placement_space_size(spec.n, spec.k, spec.module_dim, spec.space_dim)
    if size > enumeration_budget():
        raise BudgetError(
            f"placement space has {size} candidates, budget is "
            f"{enumeration_budget()}"
        )
    rng = random.Random(spec.seed)
    table = {}
    for placement in _all_placements(
        spec.n, spec.k, spec.module_dim, spec.space_dim
    ):
        if rng.random() < spec.density:
            target = rng.randrange(spec.module_dim)
            coeff = rng.choice(COEFFICIENT_POOL)
            table[placement] = (target, coeff)
    return KModuleStructure(
        spec.n, spec.k, spec.module_dim, spec.space_dim, table
    )


def _edges_of(table: dict) -> set[tuple[int, int]]:
    edges = set()
    for placement, (target, _) in table.items():
        for occupant in set(placement_module_multiset(placement)):
            edges.add((occupant, target))
    return edges


def symmetrize(structure: KModuleStructure) -> KModuleStructure:
    """Complete the table so that every edge has a reverse edge.

    A one-way edge (i, r) is repaired by rewriting one of its witness
    placements: the slot holding i receives r instead and the new entry
    targets i with coefficient 1.  Witnesses are tried in placement
    order with slot positions ascending; a candidate already occupied
    with a different target is skipped.  Because a repair can itself
    introduce new one-way edges through the other occupants of the
    rewritten placement, passes repeat until the edge relation is
    symmetric; a pass that adds nothing while edges remain raises
    SymmetrizeConflict listing them.  The input table is always a subset
    of the output table.
    """
    table = dict(structure.table)
    while True:
        edges = _edges_of(table)
        missing = sorted((a, b) for (a, b) in edges if (b, a) not in edges)
        if not missing:
            break
        progress = False
        stuck = []
        for here, there in missing:
            if (there, here) in edges:
                continue  # repaired earlier in this pass
            repaired = False
            witnesses = sorted(
                placement
                for placement, (target, _) in table.items()
                if target == there
                and here in placement_module_multiset(placement)
            )
            for witness in witnesses:
                for position, (tag, index) in enumerate(witness):
                    if tag != MODULE_TAG or index != here:
                        continue
                    candidate = (
                        witness[:position]
                        + ((MODULE_TAG, there),)
                        + witness[position + 1 :]
                    )
                    if candidate in table:
                        continue
                    table[candidate] = (here, Fraction(1))
                    for occupant in set(placement_module_multiset(candidate)):
                        edges.add((occupant, here))
                    repaired = True
                    progress = True
                    break
                if repaired:
                    break
            if not repaired:
                stuck.append((here, there))
        if not progress:
            raise SymmetrizeConflict(stuck)
    return KModuleStructure(
        structure.n, structure.k, structure.module_dim, structure.space_dim, table
    )


def modular_family(n: int, k: int, m: int) -> KModuleStructure:
    """Fully populated structure on residues mod m.

    Both index sets are the residues 0..m-1, every placement is present,
    each product targets the sum of all occupant values mod m with
    coefficient 1.  When k equals n no slot ever takes a space index and
    the space side is dropped to dimension zero.
    """
    if m < 1:
        raise ValueError(f"modulus must be at least 1, got {m}")
    if n < 2:
        raise ValueError(f"arity must be at least 2, got {n}")
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}, got {k}")
    space_dim = 0 if k == n else m
    table = {}
    for placement in _all_placements(n, k, m, space_dim):
        total = sum(index for _, index in placement) % m
        table[placement] = (total, Fraction(1))
    return KModuleStructure(n, k, m, space_dim, table)


def trivial_structure(n: int, k: int, dims: tuple[int, int]) -> KModuleStructure:
    """The zero product: an empty table of the requested shape."""
    module_dim, space_dim = dims
    return KModuleStructure(n, k, module_dim, space_dim, {})
