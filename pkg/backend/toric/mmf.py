"""Minimal missing faces, the two-face intermediary complex and join splittings."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Union

from .conf import setting
from .exceptions import InputError, InvariantError, PreconditionError
from .simplicial import (
    Face,
    FaceLike,
    SimplicialComplex,
    as_face,
    bit,
    boundary_of_simplex,
    check_vertex_count,
    full_subcomplex,
    ghost_vertices,
    join_all,
    simplex_on,
    vertices_of,
)

logger = logging.getLogger(__name__)


def _pairwise_disjoint(faces: Iterable[Face]) -> bool:
    seen = 0
    for face in faces:
        if seen & face.mask:
            return False
        seen |= face.mask
    return True


def _sorted_faces(masks: Iterable[int]) -> tuple[Face, ...]:
    return tuple(Face(mask) for mask in sorted(set(masks), key=vertices_of))


@dataclass(frozen=True)
class MmfSet:
    faces: tuple[Face, ...]
    disjoint: bool

    @classmethod
    def of(cls, faces: Iterable[FaceLike]) -> MmfSet:
        normalized = _sorted_faces(as_face(f).mask for f in faces)
        return cls(normalized, _pairwise_disjoint(normalized))

    def __len__(self) -> int:
        return len(self.faces)

    def intersecting_pairs(self) -> list[tuple[Face, Face]]:
        return [(a, b) for a, b in combinations(self.faces, 2) if a.intersects(b)]


@dataclass(frozen=True)
class JoinDecomposition:
    m: int
    k0_vertices: Face
    boundary_factors: tuple[Face, ...]

    def reassemble(self) -> SimplicialComplex:
        parts = [simplex_on(self.k0_vertices, self.m)]
        parts.extend(boundary_of_simplex(sigma, self.m) for sigma in self.boundary_factors)
        return join_all(*parts)


def _check_ghosts(K: SimplicialComplex, allow_ghosts: bool) -> None:
    ghosts = ghost_vertices(K)
    if ghosts and not allow_ghosts:
        raise PreconditionError(f"ghost vertices {list(ghosts)} (vertex sets missing from the complex)")


def missing_faces(K: SimplicialComplex, max_card: int) -> list[Face]:
    """Non-faces on the non-ghost vertices with at most ``max_card`` vertices."""
    if max_card > K.m:
        raise InputError(f"max_card {max_card} exceeds m = {K.m}")
    live = vertices_of(K.vertex_mask)
    out: list[int] = []
    for size in range(1, max_card + 1):
        for combo in combinations(live, size):
            mask = 0
            for v in combo:
                mask |= bit(v)
            if not K.contains_mask(mask):
                out.append(mask)
    return [Face(mask) for mask in sorted(out, key=lambda x: (x.bit_count(), vertices_of(x)))]


def _mmf_from_faces(K: SimplicialComplex) -> set[int]:
    # Every minimal missing face is a face plus one vertex.
    face_masks = K.face_masks
    found: set[int] = set()
    seen: set[int] = set()
    all_bits = [bit(v) for v in range(1, K.m + 1)]
    for tau in face_masks:
        for b in all_bits:
            if tau & b:
                continue
            candidate = tau | b
            if candidate in seen:
                continue
            seen.add(candidate)
            if candidate in face_masks:
                continue
            if all((candidate & ~bit(v)) in face_masks for v in vertices_of(candidate)):
                found.add(candidate)
    return found


def _minimal_transversals(edges: Iterable[int]) -> set[int]:
    """Inclusion-minimal masks meeting every edge, built one edge at a time."""
    current = {0}
    for edge in sorted(set(edges), key=lambda x: (x.bit_count(), x)):
        grown = {t for t in current if t & edge}
        for t in current:
            if not t & edge:
                grown.update(t | bit(v) for v in vertices_of(edge))
        current = {t for t in grown if not any(s != t and s & ~t == 0 for s in grown)}
    return current


def _mmf_from_facets(K: SimplicialComplex) -> set[int]:
    # A set is missing iff it meets the complement of every facet.
    full = (1 << K.m) - 1
    if not K.masks:
        return {bit(v) for v in range(1, K.m + 1)}
    return _minimal_transversals(full & ~facet for facet in K.masks)


def mmf(K: SimplicialComplex, *, allow_ghosts: bool = False) -> MmfSet:
    """Minimal missing faces of ``K``.

    Small complexes are scanned face by face; past ``FACE_SET_LIMIT`` vertices
    they come from the facets alone. A ghost vertex ``v`` shows up as the
    singleton ``{v}`` when ``allow_ghosts`` is set.
    """
    _check_ghosts(K, allow_ghosts)
    if K.nonface_masks is not None:
        result = MmfSet.of(Face(mask) for mask in K.nonface_masks)
    elif K.m > setting("FACE_SET_LIMIT"):
        result = MmfSet.of(Face(mask) for mask in _mmf_from_facets(K))
    else:
        result = MmfSet.of(Face(mask) for mask in _mmf_from_faces(K))
    singles = [str(f) for f in result.faces if len(f) == 1]
    if singles:
        logger.warning("singleton missing faces %s come from ghost vertices", ", ".join(singles))
    return result


def brute_force_mmf(K: SimplicialComplex, *, allow_ghosts: bool = False) -> MmfSet:
    """Scan all 2^m vertex subsets; only meant as an oracle for small m."""
    limit = setting("BRUTE_FORCE_LIMIT")
    if K.m > limit:
        raise InputError(f"brute-force enumeration is limited to m <= {limit}")
    _check_ghosts(K, allow_ghosts)
    faces = K.face_masks
    found = []
    for mask in range(1, 1 << K.m):
        if mask in faces:
            continue
        if all(mask & ~bit(v) in faces for v in vertices_of(mask)):
            found.append(mask)
    return MmfSet.of(Face(mask) for mask in found)


def mutually_disjoint(M: Union[MmfSet, Iterable[FaceLike]]) -> bool:
    if isinstance(M, MmfSet):
        disjoint = _pairwise_disjoint(M.faces)
        if disjoint != M.disjoint:
            raise InvariantError(f"stored disjointness flag {M.disjoint} disagrees with the faces")
        return disjoint
    return _pairwise_disjoint(as_face(f) for f in M)


def complex_from_mmf(m: int, M: Iterable[FaceLike]) -> SimplicialComplex:
    """The complex whose minimal missing faces are exactly ``M``."""
    faces = [as_face(f) for f in M]
    check_vertex_count(m)
    for face in faces:
        if not face.mask:
            raise InputError("the empty face cannot be missing")
        if face.mask >> m:
            raise InputError(f"face {face} has vertices outside [1, {m}]")
    for a, b in combinations(faces, 2):
        if a.issubset(b) or b.issubset(a):
            raise PreconditionError(f"minimal missing faces {a} and {b} are comparable")
    masks = [f.mask for f in faces]
    if m > setting("FACE_SET_LIMIT"):
        return SimplicialComplex.from_nonfaces(m, masks)
    # Materialize facets now; from_nonfaces would defer the same computation.
    return SimplicialComplex.from_masks(m, SimplicialComplex.from_nonfaces(m, masks).masks)


def build_kbar(m: int, sigma1: FaceLike, sigma2: FaceLike) -> SimplicialComplex:
    """The complex on [m] with exactly the two intersecting missing faces given."""
    s1, s2 = as_face(sigma1), as_face(sigma2)
    problems = []
    if s1 == s2:
        problems.append(f"vertex sets coincide ({s1})")
    if (s1.mask | s2.mask) != (1 << m) - 1:
        problems.append(f"{s1} and {s2} do not cover [1, {m}]")
    if not s1.intersects(s2):
        problems.append(f"{s1} and {s2} are disjoint")
    if problems:
        raise PreconditionError("; ".join(problems))
    return complex_from_mmf(m, [s1, s2])


def intermediary_complex(
    K: SimplicialComplex, sigma1: FaceLike, sigma2: FaceLike, *, allow_ghosts: bool = False
) -> tuple[SimplicialComplex, dict[int, int]]:
    """Restrict to I u J and fill in every missing face avoiding both faces.

    Returns the complex on [|I u J|] and the relabeling from K's vertices.
    """
    s1, s2 = as_face(sigma1), as_face(sigma2)
    minimal = mmf(K, allow_ghosts=allow_ghosts)
    for face in (s1, s2):
        if face not in minimal.faces:
            raise PreconditionError(f"{face} is not a minimal missing face of {K}")
    if s1 == s2 or not s1.intersects(s2):
        raise PreconditionError(f"{s1} and {s2} must be distinct and intersect")
    support = vertices_of(s1.mask | s2.mask)
    _, mapping = full_subcomplex(K, support)
    relabeled = [[mapping[v] for v in face.vertices] for face in (s1, s2)]
    return build_kbar(len(support), *relabeled), mapping


def join_decomposition(K: SimplicialComplex, *, allow_ghosts: bool = False) -> JoinDecomposition:
    """Split K as a simplex joined with boundaries of its disjoint missing faces.

    Ghost vertices stay ghosts in the reassembly, so their singletons are skipped.
    """
    found = mmf(K, allow_ghosts=allow_ghosts)
    minimal = MmfSet.of(f for f in found.faces if len(f) > 1)
    if not mutually_disjoint(minimal):
        a, b = minimal.intersecting_pairs()[0]
        raise PreconditionError(f"minimal missing faces {a} and {b} intersect")
    covered = 0
    for face in minimal.faces:
        covered |= face.mask
    k0 = Face(K.vertex_mask & ~covered)
    decomposition = JoinDecomposition(K.m, k0, minimal.faces)
    if decomposition.reassemble() != K:
        raise InvariantError(f"join reassembly does not reproduce {K}")
    return decomposition
