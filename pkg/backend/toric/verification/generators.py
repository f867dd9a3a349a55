"""Seeded instance generators for the verification suite.

Every instance is drawn from its own ``random.Random`` keyed by seed,
property name and instance index, so the stream does not depend on the
order properties run in.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from toric.homotopy import (
    Contractible,
    FormalSpace,
    LoopOf,
    PairSpec,
    DiskSphere,
    Product,
    Smash,
    Sphere,
    Suspension,
    Wedge,
)
from toric.simplicial import Face, SimplicialComplex, bit, from_facets


def instance_rng(seed: int, name: str, index: int) -> random.Random:
    return random.Random(f"{seed}/{name}/{index}")


def _subset(rng: random.Random, population: list[int], size: int) -> list[int]:
    return sorted(rng.sample(population, size))


def random_complex(rng: random.Random, max_m: int, *, min_m: int = 3) -> SimplicialComplex:
    """m uniform in [min_m, max_m], 1..2m random facets, missing singletons added."""
    m = rng.randint(min_m, max_m)
    everything = list(range(1, m + 1))
    facets = [_subset(rng, everything, rng.randint(1, m)) for _ in range(rng.randint(1, 2 * m))]
    covered = 0
    for facet in facets:
        for v in facet:
            covered |= bit(v)
    facets.extend([v] for v in everything if not covered & bit(v))
    return from_facets(m, facets)


def random_block_complex(rng: random.Random, m: int, block: list[int]) -> SimplicialComplex:
    """Random complex on [m] whose vertices are exactly ``block``."""
    facets = [_subset(rng, block, rng.randint(1, len(block))) for _ in range(rng.randint(1, 2 * len(block)))]
    facets.extend([v] for v in block)
    return from_facets(m, facets)


def random_blocks(rng: random.Random, m: int, count: int) -> list[list[int]]:
    """Split [m] into ``count`` nonempty blocks."""
    order = list(range(1, m + 1))
    rng.shuffle(order)
    cuts = sorted(rng.sample(range(1, m), count - 1))
    bounds = [0] + cuts + [m]
    return [sorted(order[a:b]) for a, b in zip(bounds, bounds[1:])]


@dataclass(frozen=True)
class KbarCase:
    m: int
    sigma1: Face
    sigma2: Face
    w: int


def random_kbar_case(rng: random.Random, max_m: int) -> KbarCase:
    """I, J with I != J, I u J = [m], I n J nonempty and neither inside the other."""
    m = rng.randint(3, max_m)
    order = list(range(1, m + 1))
    rng.shuffle(order)
    # 0: only in I, 1: only in J, 2: in both; the first three vertices pin each kind.
    kinds = [0, 1, 2] + [rng.randint(0, 2) for _ in range(m - 3)]
    sigma1 = Face.of(v for v, kind in zip(order, kinds) if kind != 1)
    sigma2 = Face.of(v for v, kind in zip(order, kinds) if kind != 0)
    shared = sorted(v for v, kind in zip(order, kinds) if kind == 2)
    return KbarCase(m, sigma1, sigma2, rng.choice(shared))


@dataclass(frozen=True)
class DisjointMmfCase:
    m: int
    blocks: tuple[Face, ...]


def random_disjoint_mmf_case(rng: random.Random, max_m: int) -> DisjointMmfCase:
    """One to three disjoint missing faces of size >= 2, the rest free vertices."""
    m = rng.randint(2, max_m)
    count = rng.randint(1, min(3, m // 2))
    order = list(range(1, m + 1))
    rng.shuffle(order)
    blocks, start = [], 0
    for left in range(count, 0, -1):
        room = m - start - 2 * (left - 1)
        size = rng.randint(2, room)
        blocks.append(Face.of(order[start:start + size]))
        start += size
    return DisjointMmfCase(m, tuple(blocks))


def random_disk_pairs(rng: random.Random, m: int, low: int = 2, high: int = 4) -> PairSpec:
    return PairSpec(tuple(DiskSphere(rng.randint(low, high)) for _ in range(m)))


def random_formal_space(rng: random.Random, depth: int = 3) -> FormalSpace:
    if depth == 0 or rng.random() < 0.3:
        return Contractible() if rng.random() < 0.15 else Sphere(rng.randint(1, 6))
    kind = rng.choice(["loop", "suspension", "wedge", "product", "smash"])
    if kind == "loop":
        return LoopOf(random_formal_space(rng, depth - 1))
    if kind == "suspension":
        return Suspension(random_formal_space(rng, depth - 1), rng.randint(0, 2))
    children = tuple(random_formal_space(rng, depth - 1) for _ in range(rng.randint(1, 3)))
    return {"wedge": Wedge, "product": Product, "smash": Smash}[kind](children)


def random_generator_degrees(rng: random.Random) -> list[int]:
    return [rng.randint(1, 5) for _ in range(rng.randint(1, 4))]
