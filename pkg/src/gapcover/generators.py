"""Seeded instance generators with oracle-verified promise membership.

Each generator is deterministic for a given seed and re-checks its own
output with the exhaustive solvers before returning, so a returned instance
is guaranteed to lie in the advertised promise class.  That confinement to
oracle-checkable sizes is deliberate: these generators feed the test
batteries, not the benchmark (which builds unverified planted instances of
its own at larger sizes).

YES set cover plants a random partition of the ground set into at most d
parts and hides it among random distractor subsets.  NO set cover builds a
partition into min(n, m) parts, whose cover number is exactly the part
count, padded with distractors that are subsets of single parts (which
cannot lower the cover number).  The hypergraph generators follow the same
pattern with planted exact vertex covers and disjoint-edge packings.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import InfeasibleParametersError, ParameterRangeError
from .instances import GapParams, HypergraphInstance, SetCoverInstance
from .oracle import (
    has_exact_vertex_cover,
    min_cover_size,
    min_exact_cover_size,
    min_vertex_cover_size,
)

__all__ = [
    "generate_yes_set_cover",
    "generate_no_set_cover",
    "generate_yes_hypergraph",
    "generate_no_hypergraph",
    "generate_promise_batch",
    "BatchItem",
]


def _random_partition(rng: random.Random, n: int, parts: int) -> list[list[int]]:
    """Split {0,...,n-1} into ``parts`` disjoint non-empty blocks at random."""
    elements = list(range(n))
    rng.shuffle(elements)
    cuts = sorted(rng.sample(range(1, n), parts - 1)) if parts > 1 else []
    blocks = []
    start = 0
    for cut in cuts + [n]:
        blocks.append(sorted(elements[start:cut]))
        start = cut
    return blocks


def generate_yes_set_cover(
    n: int, m: int, d: int, eta: Fraction, rng_seed: int
) -> SetCoverInstance:
    """Set cover instance with a planted exact cover of size at most d.

    Requires the range predicate d > 2m/(3*eta - 1) and d <= m.  The plant
    is re-verified through the exact cover oracle before returning.
    """
    params = GapParams(d, Fraction(eta))
    if not params.in_range_set_cover(m):
        raise ParameterRangeError(f"need d > 2m/(3*eta-1): d={d}, m={m}, eta={eta}")
    if d > m:
        raise InfeasibleParametersError(f"generator requires d <= m, got d={d}, m={m}")
    rng = random.Random(rng_seed)
    parts = rng.randint(1, min(d, n, m))
    blocks = _random_partition(rng, n, parts)
    sets = [list(b) for b in blocks]
    while len(sets) < m:
        size = rng.randint(1, n)
        sets.append(sorted(rng.sample(range(n), size)))
    rng.shuffle(sets)
    inst = SetCoverInstance.from_sets(n, sets)
    check = min_exact_cover_size(inst, limit=d)
    if check.optimum is None:
        raise InfeasibleParametersError("planted exact cover not confirmed by oracle")
    return inst


def generate_no_set_cover(
    n: int, m: int, d: int, eta: Fraction, rng_seed: int
) -> SetCoverInstance:
    """Set cover instance whose minimum cover exceeds eta * d.

    Requires the range predicate and eta * d < min(n, m): a family of m
    subsets over n elements can never force a cover larger than min(n, m),
    so outside that bound no NO instance exists at the requested sizes.
    """
    params = GapParams(d, Fraction(eta))
    if not params.in_range_set_cover(m):
        raise ParameterRangeError(f"need d > 2m/(3*eta-1): d={d}, m={m}, eta={eta}")
    bound = params.gap_bound()
    if bound >= m:
        raise InfeasibleParametersError(
            f"eta*d = {bound} >= m = {m}: every family of m subsets has a cover of size m"
        )
    max_parts = min(n, m)
    if bound >= max_parts:
        raise InfeasibleParametersError(
            f"eta*d = {bound} >= min(n, m) = {max_parts}: cover number cannot exceed min(n, m)"
        )
    rng = random.Random(rng_seed)
    # any part count above eta*d works; fewer parts leave room for distractors
    parts = rng.randint(int(bound) + 1, max_parts)
    blocks = _random_partition(rng, n, parts)
    sets = [list(b) for b in blocks]
    while len(sets) < m:
        block = blocks[rng.randrange(parts)]
        # exact duplicates put nonzero vectors in the kernel lattice, which
        # the support-bound checks want to see; proper subsets add variety
        if len(block) == 1 or rng.random() < 0.5:
            sets.append(list(block))
        else:
            size = rng.randint(1, len(block) - 1)
            sets.append(sorted(rng.sample(block, size)))
    rng.shuffle(sets)
    inst = SetCoverInstance.from_sets(n, sets)
    check = min_cover_size(inst)
    if not Fraction(check.optimum) > bound:
        raise InfeasibleParametersError(
            f"oracle found a cover of size {check.optimum}, not above {bound}"
        )
    return inst


def generate_yes_hypergraph(
    n: int, m: int, k: int, d: int, eta: Fraction, rng_seed: int
) -> HypergraphInstance:
    """k-uniform hypergraph with a planted exact vertex cover of size at most d.

    Every edge takes exactly one vertex from the planted cover and k-1 from
    the rest, so the cover meets each edge exactly once by construction; the
    oracle re-confirms before returning.
    """
    params = GapParams(d, Fraction(eta))
    if not params.in_range_hypergraph(n):
        raise ParameterRangeError(f"need d > n/(2*eta): d={d}, n={n}, eta={eta}")
    if k < 2 or k > n:
        raise InfeasibleParametersError(f"uniformity k={k} impossible on {n} vertices")
    max_cover = min(d, m, n - k + 1)
    if max_cover < 1:
        raise InfeasibleParametersError(
            f"no room for a cover vertex plus k-1 = {k - 1} others on {n} vertices"
        )
    rng = random.Random(rng_seed)
    t = rng.randint(1, max_cover)
    cover = rng.sample(range(n), t)
    outside = [v for v in range(n) if v not in set(cover)]
    edges = []
    for i in range(m):
        anchor = cover[i] if i < t else rng.choice(cover)
        edges.append(sorted([anchor] + rng.sample(outside, k - 1)))
    rng.shuffle(edges)
    inst = HypergraphInstance.from_edges(n, k, edges)
    check = has_exact_vertex_cover(inst, d)
    if check.optimum is None:
        raise InfeasibleParametersError("planted exact vertex cover not confirmed by oracle")
    return inst


def generate_no_hypergraph(
    n: int, m: int, k: int, d: int, eta: Fraction, rng_seed: int
) -> HypergraphInstance:
    """k-uniform hypergraph whose minimum vertex cover exceeds eta * d.

    In range, eta * d exceeds n/2, so only dense families qualify.  The
    plant is a complete k-uniform hypergraph on a random block of
    w = floor(eta * d) + k vertices, which forces cover number w - k + 1
    (any k - 1 vertices of the block are an independent set, no more);
    remaining edges are random fill, which can only raise the cover number.
    Falls back to purely random families when the block does not fit, and
    verifies every candidate through the vertex cover oracle.
    """
    params = GapParams(d, Fraction(eta))
    if not params.in_range_hypergraph(n):
        raise ParameterRangeError(f"need d > n/(2*eta): d={d}, n={n}, eta={eta}")
    if k < 2 or k > n:
        raise InfeasibleParametersError(f"uniformity k={k} impossible on {n} vertices")
    bound = params.gap_bound()
    rng = random.Random(rng_seed)
    block_size = int(bound) + k
    for _ in range(64):
        edges = []
        if block_size <= n and comb(block_size, k) <= m:
            block = sorted(rng.sample(range(n), block_size))
            edges = [list(c) for c in combinations(block, k)]
        while len(edges) < m:
            edges.append(sorted(rng.sample(range(n), k)))
        rng.shuffle(edges)
        inst = HypergraphInstance.from_edges(n, k, edges)
        check = min_vertex_cover_size(inst)
        if Fraction(check.optimum) > bound:
            return inst
    raise InfeasibleParametersError(
        f"could not produce a vertex cover number above {bound} at n={n}, m={m}, k={k}"
    )


@dataclass(frozen=True)
class BatchItem:
    """One generated promise instance with its parameters and true class."""

    kind: str
    instance: SetCoverInstance | HypergraphInstance
    params: GapParams
    expected: str


_FAMILIES = ("sc-yes", "sc-no", "hg-yes", "hg-no")


def _min_d_set_cover(m: int, eta: Fraction) -> int:
    threshold = Fraction(2 * m) / (3 * eta - 1)
    d = threshold.__ceil__()
    return d + 1 if d <= threshold else d


def _min_d_hypergraph(n: int, eta: Fraction) -> int:
    threshold = Fraction(n) / (2 * eta)
    d = threshold.__ceil__()
    return d + 1 if d <= threshold else d


def generate_promise_batch(
    count: int,
    seed: int,
    *,
    max_n: int = 12,
    max_m: int = 12,
    etas: tuple[Fraction, ...] = (Fraction(3, 2), Fraction(2), Fraction(3)),
) -> list[BatchItem]:
    """A reproducible mix of all four promise families.

    Families are cycled round-robin so the mix stays balanced; parameter
    draws that admit no instance are simply re-drawn.  Deterministic in
    ``seed``.
    """
    rng = random.Random(seed)
    items: list[BatchItem] = []
    family_index = 0
    while len(items) < count:
        kind = _FAMILIES[family_index % len(_FAMILIES)]
        eta = rng.choice(list(etas))
        item_seed = rng.getrandbits(32)
        try:
            if kind == "sc-yes":
                n = rng.randint(2, max_n)
                m = rng.randint(2, max_m)
                lo = _min_d_set_cover(m, eta)
                if lo > m:
                    continue
                d = rng.randint(lo, m)
                inst: SetCoverInstance | HypergraphInstance = generate_yes_set_cover(
                    n, m, d, eta, item_seed
                )
                expected = "YES"
            elif kind == "sc-no":
                n = rng.randint(2, max_n)
                m = rng.randint(2, max_m)
                lo = _min_d_set_cover(m, eta)
                if eta * lo >= min(n, m):
                    continue
                hi = lo
                while eta * (hi + 1) < min(n, m):
                    hi += 1
                # small d leaves the most room between eta*d and the cover
                # number, hence the most distractor subsets and the richest
                # kernels for the support-bound checks
                d = lo if rng.random() < 0.6 else rng.randint(lo, hi)
                inst = generate_no_set_cover(n, m, d, eta, item_seed)
                expected = "NO"
            elif kind == "hg-yes":
                n = rng.randint(3, max_n)
                k = rng.randint(2, min(4, n - 1))
                m = rng.randint(1, max_m)
                lo = _min_d_hypergraph(n, eta)
                d = rng.randint(lo, max(lo, n))
                inst = generate_yes_hypergraph(n, m, k, d, eta, item_seed)
                expected = "YES"
            else:
                n = rng.randint(4, max_n)
                k = rng.randint(2, 3)
                d = _min_d_hypergraph(n, eta)
                # the dense plant needs its complete block to fit the size caps
                block = int(eta * d) + k
                if block > n or comb(block, k) > max_m:
                    continue
                m = rng.randint(comb(block, k), max_m)
                inst = generate_no_hypergraph(n, m, k, d, eta, item_seed)
                expected = "NO"
        except InfeasibleParametersError:
            continue
        params = GapParams(d, eta)
        items.append(BatchItem(kind, inst, params, expected))
        family_index += 1
    return items
