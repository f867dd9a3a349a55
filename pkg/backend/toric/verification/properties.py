from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Iterator

from toric import homotopy, mmf, ranks, simplicial
from toric.serializers import ComplexSerializer
from toric.simplicial import Face, SimplicialComplex, bit, vertices_of

from . import generators
from .generators import DisjointMmfCase, KbarCase


@dataclass(frozen=True)
class Property:
    """``check`` returns ``None`` when the instance passes, otherwise a short reason."""

    name: str
    module: str
    generate: Callable[[random.Random, int], Any]
    check: Callable[[Any], str | None]
    serialize: Callable[[Any], dict]
    shrink: Callable[[Any], Iterable[Any]] | None = None
    oracle: bool = False


REGISTRY: dict[str, Property] = {}


def register(name: str, module: str, *, generate, serialize, shrink=None, oracle: bool = False):
    def decorator(check):
        REGISTRY[name] = Property(name, module, generate, check, serialize, shrink, oracle)
        return check

    return decorator


def complex_json(K: SimplicialComplex) -> dict:
    return ComplexSerializer(K).data


def kbar_json(case: KbarCase) -> dict:
    kbar = mmf.build_kbar(case.m, case.sigma1, case.sigma2)
    return {
        "m": case.m,
        "sigma1": list(case.sigma1.vertices),
        "sigma2": list(case.sigma2.vertices),
        "w": case.w,
        "complex": complex_json(kbar),
    }


def _disjoint_json(case: DisjointMmfCase) -> dict:
    return {"m": case.m, "blocks": [list(b.vertices) for b in case.blocks]}


def shrink_complex(K: SimplicialComplex) -> Iterator[SimplicialComplex]:
    """Drop one facet (keeping every vertex), then drop one vertex."""
    for index in range(len(K.masks)):
        rest = K.masks[:index] + K.masks[index + 1:]
        candidate = SimplicialComplex.from_masks(K.m, rest)
        if candidate.vertex_mask == K.vertex_mask:
            yield candidate
    if K.m > 1:
        for v in simplicial.vertices(K):
            keep = [u for u in range(1, K.m + 1) if u != v]
            yield simplicial.full_subcomplex(K, keep)[0]


def _complex(rng: random.Random, max_m: int) -> SimplicialComplex:
    return generators.random_complex(rng, max_m)


def _oracle_complex(rng: random.Random, max_m: int) -> SimplicialComplex:
    return generators.random_complex(rng, max(3, min(max_m, 12)))


def _complex_triple(rng: random.Random, max_m: int) -> tuple[SimplicialComplex, ...]:
    m = rng.randint(3, max_m)
    return tuple(generators.random_block_complex(rng, m, block) for block in generators.random_blocks(rng, m, 3))


def _complex_pair(rng: random.Random, max_m: int) -> tuple[SimplicialComplex, ...]:
    m = rng.randint(2, max(2, min(max_m, 12)))
    return tuple(generators.random_block_complex(rng, m, block) for block in generators.random_blocks(rng, m, 2))


def _parts_json(parts) -> dict:
    return {"parts": [complex_json(K) for K in parts]}


# simplicial-core

def _faces_below_closed(K: SimplicialComplex) -> bool:
    faces = K.face_masks
    return all(face & ~bit(v) in faces for face in faces for v in vertices_of(face))


@register("downward_closure", "simplicial", generate=_complex, serialize=complex_json, shrink=shrink_complex)
def downward_closure(K: SimplicialComplex) -> str | None:
    outputs = [K]
    for v in simplicial.vertices(K):
        outputs += [simplicial.star(K, v), simplicial.link(K, v), simplicial.deletion(K, v)]
    for produced in outputs:
        if not _faces_below_closed(produced):
            return f"{produced} is not closed under taking subsets"
    return None


@register("star_deletion_pushout", "simplicial", generate=_complex, serialize=complex_json, shrink=shrink_complex)
def star_deletion_pushout(K: SimplicialComplex) -> str | None:
    for v in simplicial.vertices(K):
        st, dl, lk = simplicial.star(K, v), simplicial.deletion(K, v), simplicial.link(K, v)
        if simplicial.union(st, dl) != K:
            return f"star and deletion at {v} do not cover K"
        if simplicial.intersection(st, dl) != lk:
            return f"star and deletion at {v} meet in more or less than the link"
    return None


@register("star_is_cone_on_link", "simplicial", generate=_complex, serialize=complex_json, shrink=shrink_complex)
def star_is_cone_on_link(K: SimplicialComplex) -> str | None:
    for v in simplicial.vertices(K):
        cone = simplicial.join(simplicial.simplex_on([v], K.m), simplicial.link(K, v))
        if simplicial.star(K, v) != cone:
            return f"star at {v} is not {{{v}}} joined with the link"
    return None


@register("full_subcomplex_composes", "simplicial", generate=_complex, serialize=complex_json, shrink=shrink_complex)
def full_subcomplex_composes(K: SimplicialComplex) -> str | None:
    if K.m < 2:
        return None
    outer = list(range(1, K.m))
    restricted, mapping = simplicial.full_subcomplex(K, outer)
    inner = list(range(1, restricted.m + 1, 2))
    inverse = {new: old for old, new in mapping.items()}
    twice = simplicial.full_subcomplex(restricted, inner)[0]
    once = simplicial.full_subcomplex(K, [inverse[v] for v in inner])[0]
    if twice != once:
        return f"restricting to {outer} then {inner} differs from restricting once"
    return None


@register("join_associative_commutative", "simplicial", generate=_complex_triple, serialize=_parts_json)
def join_associative_commutative(parts) -> str | None:
    a, b, c = parts
    if simplicial.join(simplicial.join(a, b), c) != simplicial.join(a, simplicial.join(b, c)):
        return "join is not associative"
    if simplicial.join(a, b) != simplicial.join(b, a):
        return "join is not commutative"
    return None


# mmf-analysis

@register("mmf_matches_brute_force", "mmf", generate=_oracle_complex, serialize=complex_json,
          shrink=shrink_complex, oracle=True)
def mmf_matches_brute_force(K: SimplicialComplex) -> str | None:
    fast, slow = mmf.mmf(K), mmf.brute_force_mmf(K)
    if fast != slow:
        return f"fast {[str(f) for f in fast.faces]} != brute force {[str(f) for f in slow.faces]}"
    return None


@register("complex_from_mmf_round_trip", "mmf", generate=_complex, serialize=complex_json, shrink=shrink_complex)
def complex_from_mmf_round_trip(K: SimplicialComplex) -> str | None:
    found = mmf.mmf(K)
    rebuilt = mmf.complex_from_mmf(K.m, found.faces)
    if rebuilt != K:
        return "the complex is not recovered from its minimal missing faces"
    if mmf.mmf(rebuilt).faces != found.faces:
        return "rebuilding changed the minimal missing faces"
    return None


@register("mmf_restriction_law", "mmf", generate=_oracle_complex, serialize=complex_json,
          shrink=shrink_complex, oracle=True)
def mmf_restriction_law(K: SimplicialComplex) -> str | None:
    whole = mmf.mmf(K).faces
    for v in range(1, K.m + 1):
        keep = [u for u in range(1, K.m + 1) if u != v]
        if not keep:
            continue
        restricted, mapping = simplicial.full_subcomplex(K, keep)
        expected = mmf.MmfSet.of([mapping[u] for u in face.vertices] for face in whole if v not in face)
        if mmf.mmf(restricted).faces != expected.faces:
            return f"missing faces of the restriction away from {v} are not the restricted ones"
    return None


@register("join_mmf_law", "mmf", generate=_complex_pair, serialize=_parts_json, oracle=True)
def join_mmf_law(parts) -> str | None:
    expected = []
    for part in parts:
        live = simplicial.vertices(part)
        own, mapping = simplicial.full_subcomplex(part, live)
        inverse = {new: old for old, new in mapping.items()}
        expected += [[inverse[u] for u in face.vertices] for face in mmf.mmf(own).faces]
    joined = simplicial.join(*parts)
    if mmf.mmf(joined) != mmf.MmfSet.of(expected):
        return "missing faces of the join are not the union of the parts' missing faces"
    return None


def _kbar_case(rng: random.Random, max_m: int) -> KbarCase:
    return generators.random_kbar_case(rng, max_m)


@register("kbar_has_exactly_two_mmf", "mmf", generate=_kbar_case, serialize=kbar_json)
def kbar_has_exactly_two_mmf(case: KbarCase) -> str | None:
    kbar = mmf.build_kbar(case.m, case.sigma1, case.sigma2)
    got = mmf.mmf(kbar).faces
    if got != mmf.MmfSet.of([case.sigma1, case.sigma2]).faces:
        return f"minimal missing faces are {[str(f) for f in got]}"
    return None


@register("reduced_faces_missing_from_star", "mmf", generate=_kbar_case, serialize=kbar_json)
def reduced_faces_missing_from_star(case: KbarCase) -> str | None:
    kbar = mmf.build_kbar(case.m, case.sigma1, case.sigma2)
    st = simplicial.star(kbar, case.w)
    live = simplicial.vertices(st)
    own, mapping = simplicial.full_subcomplex(st, live)
    missing = mmf.mmf(own).faces
    for sigma in (case.sigma1, case.sigma2):
        reduced = sigma.without(case.w)
        if len(reduced) == 1:
            # A lone vertex is a missing face exactly when it is a ghost of the star.
            if reduced.vertices[0] in live:
                return f"{reduced} lies in the star of {case.w}"
            continue
        if any(v not in mapping for v in reduced.vertices):
            return f"{reduced} has a vertex outside the star of {case.w}"
        if Face.of(mapping[v] for v in reduced.vertices) not in missing:
            return f"{reduced} is not a minimal missing face of the star of {case.w}"
    return None


@register("link_contains_reduced_boundaries", "mmf", generate=_kbar_case, serialize=kbar_json)
def link_contains_reduced_boundaries(case: KbarCase) -> str | None:
    kbar = mmf.build_kbar(case.m, case.sigma1, case.sigma2)
    lk = simplicial.link(kbar, case.w)
    for sigma in (case.sigma1, case.sigma2):
        reduced = sigma.without(case.w)
        if lk.contains_mask(reduced.mask):
            return f"{reduced} lies in the link of {case.w}"
        for v in reduced.vertices:
            if not lk.contains_mask(reduced.mask & ~bit(v)):
                return f"the boundary of {reduced} is not inside the link of {case.w}"
    return None


@register("deletion_is_simplex", "mmf", generate=_kbar_case, serialize=kbar_json)
def deletion_is_simplex(case: KbarCase) -> str | None:
    kbar = mmf.build_kbar(case.m, case.sigma1, case.sigma2)
    others = [v for v in range(1, case.m + 1) if v != case.w]
    rest = simplicial.full_subcomplex(simplicial.deletion(kbar, case.w), others)[0]
    if not simplicial.is_simplex(rest):
        return f"deleting {case.w} leaves {rest}"
    return None


def _disjoint_case(rng: random.Random, max_m: int) -> DisjointMmfCase:
    return generators.random_disjoint_mmf_case(rng, max_m)


@register("join_decomposition_reassembles", "mmf", generate=_disjoint_case, serialize=_disjoint_json)
def join_decomposition_reassembles(case: DisjointMmfCase) -> str | None:
    K = mmf.complex_from_mmf(case.m, case.blocks)
    split = mmf.join_decomposition(K)
    if split.boundary_factors != mmf.MmfSet.of(case.blocks).faces:
        return f"boundary factors {[str(f) for f in split.boundary_factors]} differ from the blocks"
    covered = split.k0_vertices.mask
    for face in split.boundary_factors:
        if covered & face.mask:
            return "simplex part overlaps a boundary factor"
        covered |= face.mask
    if covered != K.vertex_mask:
        return "the join factors do not partition the vertices"
    return None


# homotopy-model

def _complex_with_pairs(rng: random.Random, max_m: int):
    K = generators.random_complex(rng, max_m)
    return K, generators.random_disk_pairs(rng, K.m)


def _pairs_json(case) -> dict:
    K, pairs = case
    return {"complex": complex_json(K), "pairs": [{"disk_sphere": p.n} for p in pairs.pairs]}


@register("disk_sphere_verdict_is_disjointness", "homotopy",
          generate=lambda rng, max_m: generators.random_complex(rng, max_m),
          serialize=complex_json, shrink=shrink_complex)
def disk_sphere_verdict_is_disjointness(K: SimplicialComplex) -> str | None:
    result = homotopy.classify(K, homotopy.PairSpec.disk_sphere(2, K.m))
    if result.is_elliptic != mmf.mutually_disjoint(mmf.mmf(K)):
        return f"verdict {result.verdict.value} disagrees with disjointness of the missing faces"
    return None


def _factor_count(space: homotopy.FormalSpace) -> int:
    if isinstance(space, homotopy.Contractible):
        return 0
    return len(space.children) if isinstance(space, homotopy.Product) else 1


@register("classifier_soundness", "homotopy", generate=_complex_with_pairs, serialize=_pairs_json)
def classifier_soundness(case) -> str | None:
    K, pairs = case
    result = homotopy.classify(K, pairs)
    if result.is_elliptic:
        decomposition = homotopy.decompose_loops(K, pairs)
        if _factor_count(decomposition) != len(result.mmf):
            return f"{decomposition} does not have one factor per missing face"
    elif not result.disjoint_faces.passed and result.witness is None:
        return "intersecting missing faces but no witness"
    return None


@register("boundary_dimension_formula", "homotopy", generate=_complex_with_pairs, serialize=_pairs_json)
def boundary_dimension_formula(case) -> str | None:
    K, pairs = case
    for sigma in mmf.mmf(K).faces:
        space = homotopy.eval_cy_boundary(pairs, sigma)
        expected = sum(pairs[v].n for v in sigma.vertices) - 1
        if space != homotopy.Sphere(expected) or expected < 3:
            return f"boundary of {sigma} evaluates to {space}, expected S^{expected}"
    return None


@register("normalize_idempotent", "homotopy",
          generate=lambda rng, max_m: generators.random_formal_space(rng),
          serialize=lambda space: {"space": str(space)})
def normalize_idempotent(space: homotopy.FormalSpace) -> str | None:
    once = homotopy.normalize(space)
    if homotopy.normalize(once) != once:
        return f"normalizing {once} again changes it"
    return None


def _kbar_with_pairs(rng: random.Random, max_m: int):
    case = generators.random_kbar_case(rng, max_m)
    return case, generators.random_disk_pairs(rng, case.m)


def _kbar_pairs_json(case) -> dict:
    kbar, pairs = case
    return {**kbar_json(kbar), "pairs": [{"disk_sphere": p.n} for p in pairs.pairs]}


@register("linkjoin_degrees_agree", "homotopy", generate=_kbar_with_pairs, serialize=_kbar_pairs_json)
def linkjoin_degrees_agree(case) -> str | None:
    kbar, pairs = case
    for side in homotopy.linkjoin_sides(kbar.m, kbar.sigma1, kbar.sigma2, kbar.w, pairs):
        if not side.agrees:
            return f"{side.face}: {side.whole} against {side.suspended_smash}"
    return None


# rational-ranks

def _gens_and_degree(rng: random.Random, max_m: int):
    gens = generators.random_generator_degrees(rng)
    return tuple(gens), rng.randint(max(gens) + 2, 30)


def _gens_json(case) -> dict:
    gens, N = case
    return {"generator_degrees": list(gens), "max_degree": N}


@register("pbw_reconstruction", "ranks", generate=_gens_and_degree, serialize=_gens_json)
def pbw_reconstruction(case) -> str | None:
    gens, N = case
    rebuilt = ranks.pbw_reconstruct(ranks.lie_ranks(gens, N), N - 1)
    expected = ranks.tensor_series(gens, N - 1)
    if rebuilt != expected:
        first = next(i for i in range(N) if rebuilt[i] != expected[i])
        return f"coefficient {first}: {rebuilt[first]} != {expected[first]}"
    return None


def _witt_case(rng: random.Random, max_m: int):
    return rng.randint(1, 3), rng.choice([2, 4]), rng.randint(20, 40)


@register("witt_agreement", "ranks", generate=_witt_case,
          serialize=lambda case: dict(zip(("generators", "degree", "max_degree"), case)))
def witt_agreement(case) -> str | None:
    k, g, N = case
    got = ranks.lie_ranks([g] * k, N)
    for n in range(1, N):
        if n * g >= N:
            break
        if got[n * g + 1] != ranks.witt_number(k, n):
            return f"degree {n * g + 1}: {got[n * g + 1]} != W({k},{n}) = {ranks.witt_number(k, n)}"
    return None


@register("sphere_agreement", "ranks", generate=lambda rng, max_m: rng.randint(2, 12),
          serialize=lambda d: {"d": d})
def sphere_agreement(d: int) -> str | None:
    if ranks.lie_ranks([d - 1], 2 * d).ranks != ranks.sphere_ranks(d, 2 * d).ranks:
        return f"loop-space ranks of S^{d} disagree with the sphere's"
    return None


def _loop_product(rng: random.Random, max_m: int) -> homotopy.FormalSpace:
    factors = tuple(homotopy.LoopOf(homotopy.Sphere(rng.randint(2, 9))) for _ in range(rng.randint(2, 4)))
    return homotopy.Product(factors)


@register("rank_additivity", "ranks", generate=_loop_product, serialize=lambda space: {"space": str(space)})
def rank_additivity(space: homotopy.Product) -> str | None:
    whole = ranks.ranks_of_formal(space, None, 40)
    total = ranks.RankSeries({}, 40, exact_finite=True)
    for factor in space.children:
        total = total + ranks.ranks_of_formal(factor, None, 40)
    if whole != total:
        return f"{dict(whole.ranks)} != {dict(total.ranks)}"
    return None


def _growth_case(rng: random.Random, max_m: int):
    gens = [rng.choice([1, 2]), rng.choice([1, 2])] + [rng.randint(1, 5) for _ in range(rng.randint(0, 2))]
    return tuple(gens), rng.randint(30, 40)


@register("hyperbolic_growth_is_monotone", "ranks", generate=_growth_case, serialize=_gens_json)
def hyperbolic_growth_is_monotone(case) -> str | None:
    gens, N = case
    cumulative = ranks.lie_ranks(gens, N).cumulative()
    start = 2 * max(gens) + 2
    for q in range(start + start % 2, N - 1, 2):
        if cumulative[q + 2] <= cumulative[q]:
            return f"cumulative ranks stall between degrees {q} and {q + 2}"
    return None
