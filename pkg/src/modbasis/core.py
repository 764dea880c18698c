"""Data model for modules with multiplicative bases under n-linear products.

A structure of arity n multiplies k arguments drawn from a module basis
(indices 0..module_dim-1) together with n-k arguments drawn from an
auxiliary space basis (indices 0..space_dim-1), in any arrangement of
slots.  With a multiplicative basis every such product of basis vectors
lands on a scalar multiple of a single module basis vector, so the whole
map is a sparse table from slot assignments to (target index,
coefficient) pairs.  Assignments absent from the table multiply to zero.

Coefficients are exact rationals.  The decomposition algorithms in the
rest of the package only ever look at which table entries exist, so the
coefficient values ride along unchanged.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Optional

from .errors import CollisionError, DimensionError

# Stdlib Fraction already maintains lowest terms and a positive
# denominator, which is exactly the normal form required here.
Scalar = Fraction

MODULE_TAG = "m"
SPACE_TAG = "s"

Slot = tuple[str, int]
Placement = tuple[Slot, ...]

DEFAULT_BUDGET = 10**7
BUDGET_ENV = "MODBASIS_BUDGET"


def module_slot(index: int) -> tuple[str, int]:
    return (MODULE_TAG, index)


def space_slot(index: int) -> tuple[str, int]:
    return (SPACE_TAG, index)


def enumeration_budget() -> int:
    """Candidate budget for exhaustive enumerations; see BUDGET_ENV."""
    raw = os.environ.get(BUDGET_ENV)
    if not raw:
        return DEFAULT_BUDGET
    return int(raw)


def placement_space_size(n: int, k: int, module_dim: int, space_dim: int) -> int:
    """Number of distinct placements a table of this shape could hold."""
    return comb(n, k) * module_dim**k * space_dim ** (n - k)


@dataclass(frozen=True)
class KModuleStructure:
    """Sparse product table of an arity-n map with k module slots.

    ``table`` maps a placement, i.e. an ordered length-n tuple of tagged
    slots ``("m", i)`` or ``("s", j)``, to the pair (target module
    index, coefficient).  Instances are immutable after construction and
    safe to share between threads.  The constructor normalizes entry
    shapes but does not enforce invariants; ``validate`` reports every
    violation explicitly so that malformed data can be inspected.
    """

    n: int
    k: int
    module_dim: int
    space_dim: int
    table: dict

    def __post_init__(self):
        normalized = {}
        for placement, (target, coeff) in self.table.items():
            key = tuple((tag, int(index)) for tag, index in placement)
            normalized[key] = (int(target), Fraction(coeff))
        object.__setattr__(self, "table", normalized)


@dataclass(frozen=True)
class NAryAlgebra:
    """Sparse n-ary product table on a single basis (indices 0..dim-1).

    Keys are ordered index tuples of length n; values are (target index,
    coefficient) pairs, and absent keys multiply to zero.
    """

    n: int
    dim: int
    table: dict

    def __post_init__(self):
        normalized = {}
        for key, (target, coeff) in self.table.items():
            normalized[tuple(int(j) for j in key)] = (int(target), Fraction(coeff))
        object.__setattr__(self, "table", normalized)

    def entries(self) -> Iterator[tuple[tuple[int, ...], int, Fraction]]:
        """Deterministic iteration: keys in ascending lexicographic order."""
        for key in sorted(self.table):
            target, coeff = self.table[key]
            yield key, target, coeff


@dataclass(frozen=True)
class SigmaEntry:
    """One product stated in permutation form.

    ``sigma`` is a bijection on {1..n}, stored so that ``sigma[l-1]`` is
    the 1-based slot receiving the l-th argument.  Arguments are the k
    module indices followed by the n-k space indices; the entry asserts
    that this arrangement multiplies to ``coeff`` times the ``target``
    module basis vector.
    """

    sigma: tuple
    module_args: tuple
    space_args: tuple
    target: int
    coeff: Fraction


@dataclass(frozen=True)
class Violation:
    """A single invariant breach found by ``validate``."""

    code: str
    message: str
    placement: Optional[tuple] = None


def placement_module_multiset(placement) -> tuple[int, ...]:
    """Sorted module indices occupying the placement."""
    return tuple(sorted(index for tag, index in placement if tag == MODULE_TAG))


def placement_space_multiset(placement) -> tuple[int, ...]:
    """Sorted space indices occupying the placement."""
    return tuple(sorted(index for tag, index in placement if tag == SPACE_TAG))


def validate(structure: KModuleStructure) -> list[Violation]:
    """Check every structural invariant; an empty report means valid."""
    report = []
    if structure.n < 1:
        report.append(Violation("arity", f"arity must be at least 1, got {structure.n}"))
    if not 1 <= structure.k <= structure.n:
        report.append(
            Violation("k-range", f"k must lie in 1..{structure.n}, got {structure.k}")
        )
    if structure.module_dim < 0 or structure.space_dim < 0:
        report.append(Violation("dims", "dimensions must be nonnegative"))
    if structure.k < structure.n and structure.space_dim < 1 and structure.table:
        report.append(
            Violation(
                "space-dim",
                "k < n requires a nonzero space dimension unless the table is empty",
            )
        )
    for placement in sorted(structure.table):
        target, coeff = structure.table[placement]
        report.extend(_placement_violations(structure, placement))
        if not 0 <= target < structure.module_dim:
            report.append(
                Violation(
                    "target-range",
                    f"target {target} outside 0..{structure.module_dim - 1}",
                    placement,
                )
            )
        if coeff == 0:
            report.append(
                Violation("zero-coefficient", "stored coefficient is zero", placement)
            )
    return report


def _placement_violations(structure: KModuleStructure, placement) -> list[Violation]:
    report = []
    if len(placement) != structure.n:
        report.append(
            Violation(
                "length",
                f"placement has {len(placement)} slots, expected {structure.n}",
                placement,
            )
        )
    module_count = 0
    for tag, index in placement:
        if tag == MODULE_TAG:
            module_count += 1
            if not 0 <= index < structure.module_dim:
                report.append(
                    Violation(
                        "slot-range",
                        f"module index {index} outside 0..{structure.module_dim - 1}",
                        placement,
                    )
                )
        elif tag == SPACE_TAG:
            if not 0 <= index < structure.space_dim:
                report.append(
                    Violation(
                        "slot-range",
                        f"space index {index} outside 0..{structure.space_dim - 1}",
                        placement,
                    )
                )
        else:
            report.append(Violation("slot-tag", f"unknown slot tag {tag!r}", placement))
    if module_count != structure.k:
        report.append(
            Violation(
                "slot-count",
                f"placement has {module_count} module slots, expected {structure.k}",
                placement,
            )
        )
    return report


def _resolve_sigma(n: int, k: int, entry: SigmaEntry):
    sigma = tuple(entry.sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise DimensionError(f"sigma {sigma} is not a permutation of 1..{n}")
    if len(entry.module_args) != k:
        raise DimensionError(
            f"expected {k} module arguments, got {len(entry.module_args)}"
        )
    if len(entry.space_args) != n - k:
        raise DimensionError(
            f"expected {n - k} space arguments, got {len(entry.space_args)}"
        )
    slots = [None] * n
    for position, index in enumerate(entry.module_args, start=1):
        slots[sigma[position - 1] - 1] = (MODULE_TAG, int(index))
    for position, index in enumerate(entry.space_args, start=k + 1):
        slots[sigma[position - 1] - 1] = (SPACE_TAG, int(index))
    return tuple(slots)


def from_sigma_entries(
    n: int, k: int, dims: tuple[int, int], entries: Iterable[SigmaEntry]
) -> KModuleStructure:
    """Resolve permutation-form entries into a plain placement table.

    Two entries may resolve to the same placement only if they agree on
    target and coefficient; otherwise CollisionError is raised.
    """
    module_dim, space_dim = dims
    table = {}
    for entry in entries:
        placement = _resolve_sigma(n, k, entry)
        value = (int(entry.target), Fraction(entry.coeff))
        existing = table.get(placement)
        if existing is not None and existing != value:
            raise CollisionError(
                f"placement {placement} assigned both {existing} and {value}"
            )
        table[placement] = value
    return KModuleStructure(n, k, module_dim, space_dim, table)


def evaluate(structure: KModuleStructure, placement):
    """Lookup of one placement: (target, coeff) or None when it is zero."""
    key = tuple((tag, int(index)) for tag, index in placement)
    problems = _placement_violations(structure, key)
    if problems:
        raise DimensionError(problems[0].message)
    return structure.table.get(key)


def support(structure: KModuleStructure) -> Iterator[tuple]:
    """Yield (placement, target, coeff), placements in lexicographic order."""
    for placement in sorted(structure.table):
        target, coeff = structure.table[placement]
        yield placement, target, coeff
