"""Exhaustive reference solvers for small instances.

These are the ground truth the distinguishers are checked against: plain
branch-and-bound searches over bitmask state, feasible only at desk scale.
Every search counts the nodes it expands and raises
:class:`~gapcover.errors.BudgetExceededError` past its node budget or size
cap, and every returned witness is re-validated before it leaves this
module.  Optimum ``None`` means infeasible (no exact cover exists); it is
deliberately not a sentinel integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceededError
from .instances import GapParams, HypergraphInstance, SetCoverInstance

__all__ = [
    "OracleResult",
    "min_exact_cover_size",
    "min_cover_size",
    "min_vertex_cover_size",
    "has_exact_vertex_cover",
    "classify_set_cover",
    "classify_hypergraph",
    "DEFAULT_NODE_BUDGET",
]

DEFAULT_NODE_BUDGET = 2_000_000
SET_COVER_SIZE_CAP = 20
HYPERGRAPH_SIZE_CAP = 24


@dataclass(frozen=True)
class OracleResult:
    """Search outcome: exact optimum (None = infeasible), witness, node count."""

    optimum: int | None
    witness: tuple[int, ...] | None
    nodes_explored: int


class _Counter:
    __slots__ = ("nodes", "budget")

    def __init__(self, budget: int):
        self.nodes = 0
        self.budget = budget

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(f"search exceeded node budget of {self.budget}")


def _check_set_cover_size(inst: SetCoverInstance, size_cap: int) -> None:
    if inst.universe_size > size_cap or inst.num_sets > size_cap:
        raise BudgetExceededError(
            f"instance size {inst.universe_size}x{inst.num_sets} exceeds oracle cap {size_cap}"
        )


def _set_masks(inst: SetCoverInstance) -> list[int]:
    return [sum(1 << e for e in s) for s in inst.sets]


def _sets_by_element(inst: SetCoverInstance) -> list[list[int]]:
    table: list[list[int]] = [[] for _ in range(inst.universe_size)]
    for i, s in enumerate(inst.sets):
        for e in s:
            table[e].append(i)
    return table


def min_exact_cover_size(
    inst: SetCoverInstance,
    limit: int | None = None,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
    size_cap: int = SET_COVER_SIZE_CAP,
) -> OracleResult:
    """Minimum number of pairwise disjoint subsets covering the ground set.

    Branches on the lowest uncovered element and only tries subsets disjoint
    from what is already covered.  ``limit`` restricts the search to covers
    of at most that many subsets; optimum is None when no exact cover exists
    within the limit.
    """
    _check_set_cover_size(inst, size_cap)
    masks = _set_masks(inst)
    by_element = _sets_by_element(inst)
    full = (1 << inst.universe_size) - 1
    cap = inst.num_sets if limit is None else min(limit, inst.num_sets)
    counter = _Counter(node_budget)
    best: list = [None, None]  # size, chosen tuple

    def walk(covered: int, chosen: list[int]) -> None:
        counter.tick()
        if covered == full:
            if best[0] is None or len(chosen) < best[0]:
                best[0] = len(chosen)
                best[1] = tuple(sorted(chosen))
            return
        if len(chosen) >= cap:
            return
        if best[0] is not None and len(chosen) + 1 >= best[0]:
            return
        element = ((covered ^ full) & -(covered ^ full)).bit_length() - 1
        for i in by_element[element]:
            if masks[i] & covered:
                continue
            chosen.append(i)
            walk(covered | masks[i], chosen)
            chosen.pop()

    walk(0, [])
    if best[0] is not None:
        _assert_exact_cover(inst, best[1])
    return OracleResult(best[0], best[1], counter.nodes)


def min_cover_size(
    inst: SetCoverInstance,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
    size_cap: int = SET_COVER_SIZE_CAP,
) -> OracleResult:
    """Minimum number of subsets covering the ground set (overlaps allowed).

    Branch and bound: branches on the lowest uncovered element, lower bound
    is ceil(uncovered / largest subset size).
    """
    _check_set_cover_size(inst, size_cap)
    masks = _set_masks(inst)
    by_element = _sets_by_element(inst)
    full = (1 << inst.universe_size) - 1
    max_size = max(len(s) for s in inst.sets)
    counter = _Counter(node_budget)
    # every instance covers its universe, so taking all subsets is feasible
    best: list = [inst.num_sets, tuple(range(inst.num_sets))]

    def walk(covered: int, chosen: list[int]) -> None:
        counter.tick()
        if covered == full:
            if len(chosen) < best[0]:
                best[0] = len(chosen)
                best[1] = tuple(sorted(chosen))
            return
        uncovered = (full ^ covered).bit_count()
        bound = len(chosen) + -(-uncovered // max_size)
        if bound >= best[0]:
            return
        element = ((covered ^ full) & -(covered ^ full)).bit_length() - 1
        for i in by_element[element]:
            new = covered | masks[i]
            if new == covered:
                continue
            chosen.append(i)
            walk(new, chosen)
            chosen.pop()

    walk(0, [])
    _assert_cover(inst, best[1])
    return OracleResult(best[0], best[1], counter.nodes)


def _check_hypergraph_size(inst: HypergraphInstance, size_cap: int) -> None:
    if inst.vertex_count > size_cap or inst.num_edges > size_cap:
        raise BudgetExceededError(
            f"hypergraph size {inst.vertex_count}x{inst.num_edges} exceeds oracle cap {size_cap}"
        )


def min_vertex_cover_size(
    inst: HypergraphInstance,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
    size_cap: int = HYPERGRAPH_SIZE_CAP,
) -> OracleResult:
    """Minimum vertex set meeting every edge.

    Branches on the vertices of the first unmet edge; lower bound is the
    size of a greedy disjoint-edge packing among unmet edges.
    """
    _check_hypergraph_size(inst, size_cap)
    edge_masks = [sum(1 << v for v in e) for e in inst.edges]
    counter = _Counter(node_budget)
    best: list = [inst.vertex_count, tuple(range(inst.vertex_count))]

    def packing_bound(chosen_mask: int) -> int:
        used = 0
        count = 0
        for em in edge_masks:
            if em & chosen_mask or em & used:
                continue
            used |= em
            count += 1
        return count

    def walk(chosen_mask: int, chosen: list[int]) -> None:
        counter.tick()
        open_edge = None
        for em in edge_masks:
            if not em & chosen_mask:
                open_edge = em
                break
        if open_edge is None:
            if len(chosen) < best[0]:
                best[0] = len(chosen)
                best[1] = tuple(sorted(chosen))
            return
        if len(chosen) + packing_bound(chosen_mask) >= best[0]:
            return
        rest = open_edge
        while rest:
            bit = rest & -rest
            rest ^= bit
            v = bit.bit_length() - 1
            chosen.append(v)
            walk(chosen_mask | bit, chosen)
            chosen.pop()

    walk(0, [])
    _assert_vertex_cover(inst, best[1])
    return OracleResult(best[0], best[1], counter.nodes)


def has_exact_vertex_cover(
    inst: HypergraphInstance,
    d: int,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
    size_cap: int = HYPERGRAPH_SIZE_CAP,
) -> OracleResult:
    """Smallest vertex set meeting every edge exactly once, searched up to size d.

    Optimum is None when no such set of size at most d exists.  A chosen
    vertex is rejected as soon as it would give any edge two chosen
    vertices, so the search only ever visits partial exact covers.
    """
    _check_hypergraph_size(inst, size_cap)
    if d < 0:
        raise ValueError("size bound d must be non-negative")
    edge_masks = [sum(1 << v for v in e) for e in inst.edges]
    edges_by_vertex: list[list[int]] = [[] for _ in range(inst.vertex_count)]
    for i, e in enumerate(inst.edges):
        for v in e:
            edges_by_vertex[v].append(i)
    counter = _Counter(node_budget)
    best: list = [None, None]

    def walk(chosen_mask: int, hits: list[int], chosen: list[int]) -> None:
        counter.tick()
        open_edge = None
        for i, em in enumerate(edge_masks):
            if hits[i] == 0:
                open_edge = em
                break
        if open_edge is None:
            if best[0] is None or len(chosen) < best[0]:
                best[0] = len(chosen)
                best[1] = tuple(sorted(chosen))
            return
        if len(chosen) >= d:
            return
        if best[0] is not None and len(chosen) + 1 >= best[0]:
            return
        rest = open_edge & ~chosen_mask
        while rest:
            bit = rest & -rest
            rest ^= bit
            v = bit.bit_length() - 1
            if any(hits[i] for i in edges_by_vertex[v]):
                continue  # would meet some edge twice
            for i in edges_by_vertex[v]:
                hits[i] += 1
            chosen.append(v)
            walk(chosen_mask | bit, hits, chosen)
            chosen.pop()
            for i in edges_by_vertex[v]:
                hits[i] -= 1

    walk(0, [0] * inst.num_edges, [])
    if best[0] is not None:
        _assert_exact_vertex_cover(inst, best[1])
    return OracleResult(best[0], best[1], counter.nodes)


def classify_set_cover(
    inst: SetCoverInstance, params: GapParams, *, node_budget: int = DEFAULT_NODE_BUDGET
) -> str:
    """Ground-truth promise class: 'YES', 'NO', or 'neither'.

    YES when an exact cover of size at most d exists, NO when the minimum
    cover exceeds eta * d; instances in the gap between are 'neither'.
    """
    if min_exact_cover_size(inst, limit=params.d, node_budget=node_budget).optimum is not None:
        return "YES"
    cover = min_cover_size(inst, node_budget=node_budget)
    if Fraction(cover.optimum) > params.gap_bound():
        return "NO"
    return "neither"


def classify_hypergraph(
    inst: HypergraphInstance, params: GapParams, *, node_budget: int = DEFAULT_NODE_BUDGET
) -> str:
    """Ground-truth promise class for hypergraph vertex cover."""
    if has_exact_vertex_cover(inst, params.d, node_budget=node_budget).optimum is not None:
        return "YES"
    cover = min_vertex_cover_size(inst, node_budget=node_budget)
    if Fraction(cover.optimum) > params.gap_bound():
        return "NO"
    return "neither"


def _assert_exact_cover(inst: SetCoverInstance, chosen: tuple[int, ...]) -> None:
    seen: set[int] = set()
    for i in chosen:
        subset = set(inst.sets[i])
        assert not subset & seen, "witness subsets overlap"
        seen |= subset
    assert seen == set(range(inst.universe_size)), "witness does not cover the universe"


def _assert_cover(inst: SetCoverInstance, chosen: tuple[int, ...]) -> None:
    seen: set[int] = set()
    for i in chosen:
        seen |= set(inst.sets[i])
    assert seen == set(range(inst.universe_size)), "witness does not cover the universe"


def _assert_vertex_cover(inst: HypergraphInstance, chosen: tuple[int, ...]) -> None:
    picked = set(chosen)
    for e in inst.edges:
        assert picked & set(e), "witness misses an edge"


def _assert_exact_vertex_cover(inst: HypergraphInstance, chosen: tuple[int, ...]) -> None:
    picked = set(chosen)
    for e in inst.edges:
        assert len(picked & set(e)) == 1, "witness must meet every edge exactly once"
