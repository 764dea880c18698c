"""Connectivity of module indices through the product table.

A step reads the table in one of two directions.  A forward step moves
from an index occupying a slot to the target of a matching product; a
backward step moves from a target back to a possible occupant.  Chains
of steps induce an equivalence on the module index set.  ``components``
computes that equivalence quickly through union-find on symmetrized
single-step edges, while ``components_oracle`` replays chains literally
and exists purely as the slow cross-check for the fast path.
"""

from __future__ import annotations

import threading
from collections import Counter, deque
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Optional

from .core import (
    KModuleStructure,
    enumeration_budget,
    placement_module_multiset,
    placement_space_multiset,
    support,
)
from .errors import BudgetError, DimensionError, InvalidWitness

FORWARD = "forward"
BACKWARD = "backward"


@dataclass(frozen=True)
class Step:
    """One traversal move: a direction plus the remaining slot occupants.

    ``module_args`` lists the other k-1 module occupants and
    ``space_args`` the n-k space occupants.  Argument order never
    matters, so both tuples are kept sorted as canonical multisets.  A
    step is wholly forward or wholly backward; there is deliberately no
    way to mix directions inside one step.
    """

    direction: str
    module_args: tuple
    space_args: tuple

    def __post_init__(self):
        if self.direction not in (FORWARD, BACKWARD):
            raise ValueError(f"unknown direction {self.direction!r}")
        object.__setattr__(self, "module_args", tuple(sorted(self.module_args)))
        object.__setattr__(self, "space_args", tuple(sorted(self.space_args)))

    def flipped(self) -> "Step":
        other = BACKWARD if self.direction == FORWARD else FORWARD
        return Step(other, self.module_args, self.space_args)


@dataclass(frozen=True)
class Connection:
    """A replayable chain of steps starting at ``source``.

    An empty chain is the marker for the trivial connection of an index
    to itself; any other chain witnesses reachability of its final image.
    """

    source: int
    steps: tuple

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))


class ComponentPartition:
    """Partition of {0..size-1}; every class is named by its minimum index."""

    def __init__(self, representatives: Iterable[int]):
        reps = list(representatives)
        # Normalize so that rep[i] really is the minimum of i's class.
        smallest = {}
        for index, rep in enumerate(reps):
            smallest[rep] = min(smallest.get(rep, index), index)
        self._rep = tuple(smallest[rep] for rep in reps)

    @classmethod
    def from_pairs(cls, size: int, pairs: Iterable[tuple[int, int]]):
        forest = _UnionFind(size)
        for a, b in pairs:
            forest.union(a, b)
        return cls(forest.find(i) for i in range(size))

    @property
    def size(self) -> int:
        return len(self._rep)

    def representative(self, index: int) -> int:
        return self._rep[index]

    def same_class(self, first: int, second: int) -> bool:
        return self._rep[first] == self._rep[second]

    def class_of(self, index: int) -> tuple[int, ...]:
        rep = self._rep[index]
        return tuple(i for i, r in enumerate(self._rep) if r == rep)

    def classes(self) -> tuple[tuple[int, ...], ...]:
        grouped = {}
        for index, rep in enumerate(self._rep):
            grouped.setdefault(rep, []).append(index)
        return tuple(tuple(grouped[rep]) for rep in sorted(grouped))

    def __eq__(self, other):
        if not isinstance(other, ComponentPartition):
            return NotImplemented
        return self._rep == other._rep

    def __hash__(self):
        return hash(self._rep)

    def __repr__(self):
        body = ", ".join("{" + ", ".join(map(str, cls)) + "}" for cls in self.classes())
        return f"ComponentPartition({body})"


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]  # path halving
            x = self.parent[x]
        return x

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:  # smaller tree under larger
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]


@dataclass(frozen=True)
class _StepIndex:
    forward: dict
    backward: dict


_INDEX_LOCK = threading.Lock()


def _step_index(structure: KModuleStructure) -> _StepIndex:
    # Double-checked so the index is built once even under concurrent use.
    cached = structure.__dict__.get("_step_index")
    if cached is None:
        with _INDEX_LOCK:
            cached = structure.__dict__.get("_step_index")
            if cached is None:
                cached = _build_step_index(structure)
                structure.__dict__["_step_index"] = cached
    return cached


def _build_step_index(structure: KModuleStructure) -> _StepIndex:
    forward: dict = {}
    backward: dict = {}
    for placement, (target, _) in structure.table.items():
        occupants = placement_module_multiset(placement)
        spaces = placement_space_multiset(placement)
        for position, occupant in enumerate(occupants):
            if position > 0 and occupants[position - 1] == occupant:
                continue  # each distinct occupant once
            rest = occupants[:position] + occupants[position + 1 :]
            forward.setdefault((occupant, rest, spaces), set()).add(target)
            backward.setdefault((target, rest, spaces), set()).add(occupant)
    return _StepIndex(
        {key: frozenset(value) for key, value in forward.items()},
        {key: frozenset(value) for key, value in backward.items()},
    )


def _check_step(structure: KModuleStructure, step: Step):
    if len(step.module_args) != structure.k - 1:
        raise DimensionError(
            f"step carries {len(step.module_args)} module arguments, "
            f"expected {structure.k - 1}"
        )
    if len(step.space_args) != structure.n - structure.k:
        raise DimensionError(
            f"step carries {len(step.space_args)} space arguments, "
            f"expected {structure.n - structure.k}"
        )


def _check_index(structure: KModuleStructure, index: int):
    if not 0 <= index < structure.module_dim:
        raise DimensionError(
            f"index {index} outside 0..{structure.module_dim - 1}"
        )


def mu(structure: KModuleStructure, index: int, step: Step) -> set[int]:
    """Single-step image of ``index`` under ``step``.

    Forward: the targets of all table entries whose module occupants are
    ``index`` plus the step's module arguments (as a multiset) and whose
    space occupants equal the step's space arguments.  Backward: the
    occupants from which the corresponding forward move reaches
    ``index``.
    """
    _check_step(structure, step)
    table_index = _step_index(structure)
    key = (index, step.module_args, step.space_args)
    if step.direction == FORWARD:
        return set(table_index.forward.get(key, ()))
    return set(table_index.backward.get(key, ()))


def phi(structure: KModuleStructure, indices: Iterable[int], step: Step) -> set[int]:
    """Union of ``mu`` over a set of indices; empty input gives empty output."""
    _check_step(structure, step)
    result: set[int] = set()
    for index in indices:
        result |= mu(structure, index, step)
    return result


def forward_edges(structure: KModuleStructure) -> set[tuple[int, int]]:
    """Ordered pairs (occupant, target) realized by some table entry."""
    edges = set()
    for placement, (target, _) in structure.table.items():
        for occupant in set(placement_module_multiset(placement)):
            edges.add((occupant, target))
    return edges


def components(structure: KModuleStructure) -> ComponentPartition:
    """Connected components of the symmetrized forward-edge graph.

    This is the fast path; ``components_oracle`` recomputes the same
    partition by literal chain replay and the two must always agree.
    """
    return ComponentPartition.from_pairs(structure.module_dim, forward_edges(structure))


def _all_steps(structure: KModuleStructure) -> list[Step]:
    module_choices = combinations_with_replacement(
        range(structure.module_dim), structure.k - 1
    )
    steps = []
    for module_args in module_choices:
        for space_args in combinations_with_replacement(
            range(structure.space_dim), structure.n - structure.k
        ):
            steps.append(Step(FORWARD, module_args, space_args))
            steps.append(Step(BACKWARD, module_args, space_args))
    return steps


def _multiset_minus(whole: tuple, part: tuple) -> Optional[tuple]:
    counts = Counter(whole)
    for item in part:
        if counts[item] == 0:
            return None
        counts[item] -= 1
    return tuple(item for item, count in counts.items() for _ in range(count))


def _mu_by_scan(entries, index: int, step: Step) -> set[int]:
    # Independent slow evaluation: a direct pass over the support, no index.
    found = set()
    if step.direction == FORWARD:
        needed = tuple(sorted(step.module_args + (index,)))
        for occupants, spaces, target in entries:
            if occupants == needed and spaces == step.space_args:
                found.add(target)
    else:
        for occupants, spaces, target in entries:
            if target != index or spaces != step.space_args:
                continue
            leftover = _multiset_minus(occupants, step.module_args)
            if leftover is not None and len(leftover) == 1:
                found.add(leftover[0])
    return found


def components_oracle(structure: KModuleStructure, max_depth: int) -> ComponentPartition:
    """Depth-bounded literal recomputation of the component partition.

    Every possible step (all argument multisets over both index sets, in
    both directions) is enumerated, and chains of single-step images are
    chased breadth-first from every index for at most ``max_depth``
    steps.  Images come from a direct scan of the support rather than
    the indexed lookup, and the partition is assembled by merging
    overlapping reach sets, so this path shares nothing with
    ``components``.  A depth of twice the module dimension always
    saturates.  Raises BudgetError once the number of scanned
    (entry, step) candidates passes the configured budget.
    """
    if max_depth < 1:
        raise ValueError(f"max_depth must be at least 1, got {max_depth}")
    budget = enumeration_budget()
    entries = [
        (placement_module_multiset(p), placement_space_multiset(p), target)
        for p, target, _ in support(structure)
    ]
    steps = _all_steps(structure)
    cost = 0
    cells: list[set[int]] = []
    for start in range(structure.module_dim):
        reached = {start}
        frontier = [start]
        depth = 0
        while frontier and depth < max_depth:
            depth += 1
            next_frontier = []
            for node in frontier:
                for step in steps:
                    cost += len(entries) + 1
                    if cost > budget:
                        raise BudgetError(
                            f"chain enumeration passed {budget} candidates"
                        )
                    for found in _mu_by_scan(entries, node, step):
                        if found not in reached:
                            reached.add(found)
                            next_frontier.append(found)
            frontier = next_frontier
        cell = set(reached)
        overlapping = [other for other in cells if other & cell]
        for other in overlapping:
            cells.remove(other)
            cell |= other
        cells.append(cell)
    representatives = [0] * structure.module_dim
    for cell in cells:
        rep = min(cell)
        for member in cell:
            representatives[member] = rep
    return ComponentPartition(representatives)


def _edge_step(structure: KModuleStructure, here: int, there: int) -> Step:
    # Forward witnesses win; ties go to the smallest placement, which is
    # exactly the order support() yields.
    for placement, target, _ in support(structure):
        occupants = placement_module_multiset(placement)
        if target == there and here in occupants:
            rest = _multiset_minus(occupants, (here,))
            return Step(FORWARD, rest, placement_space_multiset(placement))
    for placement, target, _ in support(structure):
        occupants = placement_module_multiset(placement)
        if target == here and there in occupants:
            rest = _multiset_minus(occupants, (there,))
            return Step(BACKWARD, rest, placement_space_multiset(placement))
    raise AssertionError(f"edge {here}->{there} has no witness entry")


def find_connection(
    structure: KModuleStructure, source: int, target: int
) -> Optional[Connection]:
    """Shortest witness chain from ``source`` to ``target``, if any.

    Breadth-first search over the symmetrized edge graph with ascending
    neighbor order, so results are deterministic.  An equal source and
    target yield the empty chain.  Returns None when not connected.
    """
    _check_index(structure, source)
    _check_index(structure, target)
    if source == target:
        return Connection(source, ())
    neighbors: dict[int, set[int]] = {}
    for a, b in forward_edges(structure):
        neighbors.setdefault(a, set()).add(b)
        neighbors.setdefault(b, set()).add(a)
    parent: dict[int, Optional[int]] = {source: None}
    queue = deque([source])
    while queue:
        node = queue.popleft()
        if node == target:
            break
        for nxt in sorted(neighbors.get(node, ())):
            if nxt not in parent:
                parent[nxt] = node
                queue.append(nxt)
    if target not in parent:
        return None
    path = [target]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    steps = [
        _edge_step(structure, here, there) for here, there in zip(path, path[1:])
    ]
    return Connection(source, steps)


def verify_connection(
    structure: KModuleStructure, connection: Connection, claimed_target: int
) -> bool:
    """Replay the chain; true iff every prefix image is nonempty and the
    final image contains ``claimed_target``."""
    image = {connection.source}
    for step in connection.steps:
        image = phi(structure, image, step)
        if not image:
            return False
    return claimed_target in image


def reverse_connection(
    structure: KModuleStructure, connection: Connection, original_target: int
) -> Connection:
    """Walk a verified chain backwards with every direction flipped.

    The result starts at ``original_target`` and verifies against the
    original source.  Raises InvalidWitness when the input chain does
    not verify in the first place.
    """
    if not verify_connection(structure, connection, original_target):
        raise InvalidWitness(
            f"chain from {connection.source} does not reach {original_target}"
        )
    steps = tuple(step.flipped() for step in reversed(connection.steps))
    return Connection(original_target, steps)
