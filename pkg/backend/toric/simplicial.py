"""Simplicial complexes on the vertex set [m] with faces stored as bitmasks.

Vertex ``v`` is bit ``v - 1`` of a face mask. A complex keeps its facets
(maximal faces) in canonical lexicographic order, or, for complexes described
by their missing faces, the list of minimal non-faces with the facets
materialized only when somebody asks for them.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Union

from .conf import setting
from .exceptions import InputError, PreconditionError

logger = logging.getLogger(__name__)


def bit(v: int) -> int:
    return 1 << (v - 1)


def vertices_of(mask: int) -> tuple[int, ...]:
    out: list[int] = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def submasks(mask: int) -> Iterator[int]:
    """Every submask of ``mask``, the empty one last."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _is_vertex(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


@dataclass(frozen=True)
class Face:
    """A set of vertices; equality and hashing are set equality."""

    mask: int

    @classmethod
    def of(cls, vertices: Iterable[int]) -> Face:
        seen: list[int] = []
        for v in vertices:
            if not _is_vertex(v) or v < 1:
                raise InputError(f"vertices are positive integers, got {v!r}")
            if v in seen:
                raise InputError(f"vertex {v} repeated in face {sorted(seen + [v])}")
            seen.append(v)
        mask = 0
        for v in seen:
            mask |= bit(v)
        return cls(mask)

    @property
    def vertices(self) -> tuple[int, ...]:
        return vertices_of(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __contains__(self, v: object) -> bool:
        return _is_vertex(v) and v >= 1 and bool(self.mask & bit(v))

    def issubset(self, other: Face) -> bool:
        return self.mask & ~other.mask == 0

    def intersects(self, other: Face) -> bool:
        return bool(self.mask & other.mask)

    def without(self, v: int) -> Face:
        return Face(self.mask & ~bit(v))

    def sort_key(self) -> tuple[int, ...]:
        return self.vertices

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in self.vertices) + "}"


FaceLike = Union[Face, Iterable[int]]


def as_face(value: FaceLike) -> Face:
    return value if isinstance(value, Face) else Face.of(value)


def _canonical(masks: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(masks, key=vertices_of))


def maximal(masks: Iterable[int]) -> tuple[int, ...]:
    """Drop the empty face, duplicates and anything contained in another mask."""
    kept: list[int] = []
    for mask in sorted(set(masks) - {0}, key=lambda x: -x.bit_count()):
        if not any(mask & ~k == 0 for k in kept):
            kept.append(mask)
    return _canonical(kept)


def _facets_avoiding(m: int, nonfaces: Iterable[int]) -> tuple[int, ...]:
    # Split every candidate facet that still contains a non-face.
    current: set[int] = {(1 << m) - 1}
    for nonface in sorted(nonfaces, key=lambda x: x.bit_count()):
        split: set[int] = set()
        for facet in current:
            if nonface & ~facet:
                split.add(facet)
                continue
            for v in vertices_of(nonface):
                split.add(facet & ~bit(v))
        current = set(maximal(split))
    return maximal(current)


def check_vertex_count(m) -> int:
    if not _is_vertex(m) or m <= 0:
        raise InputError(f"vertex count must be a positive integer, got {m!r}")
    if m > setting("MAX_VERTICES"):
        raise InputError(f"at most {setting('MAX_VERTICES')} vertices are supported, got {m}")
    return m


def _check_face(face: Face, m: int) -> Face:
    if face.mask >> m:
        raise InputError(f"face {face} has vertices outside [1, {m}]")
    return face


def _check_vertex(v, m: int) -> int:
    if not _is_vertex(v) or not 1 <= v <= m:
        raise InputError(f"vertex {v!r} is outside [1, {m}]")
    return v


@dataclass(frozen=True, eq=False)
class SimplicialComplex:
    """Immutable simplicial complex on [m]; the empty face is always a member."""

    m: int
    facet_masks: tuple[int, ...] | None = None
    nonface_masks: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        check_vertex_count(self.m)
        if (self.facet_masks is None) == (self.nonface_masks is None):
            raise ValueError("give exactly one of facet_masks and nonface_masks")

    @classmethod
    def from_masks(cls, m: int, masks: Iterable[int]) -> SimplicialComplex:
        return cls(m, facet_masks=maximal(masks))

    @classmethod
    def from_nonfaces(cls, m: int, nonfaces: Iterable[int]) -> SimplicialComplex:
        """Complex whose faces are the subsets of [m] containing no listed mask."""
        return cls(m, nonface_masks=_canonical(set(nonfaces)))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        if self.facet_masks is not None:
            return self.facet_masks
        logger.debug("materializing facets of a %d-vertex complex from %d non-faces",
                     self.m, len(self.nonface_masks))
        return _facets_avoiding(self.m, self.nonface_masks)

    @property
    def facets(self) -> tuple[Face, ...]:
        return tuple(Face(mask) for mask in self.masks)

    @cached_property
    def vertex_mask(self) -> int:
        if self.nonface_masks is not None:
            singles = 0
            for nonface in self.nonface_masks:
                if nonface.bit_count() == 1:
                    singles |= nonface
            return ((1 << self.m) - 1) & ~singles
        out = 0
        for mask in self.masks:
            out |= mask
        return out

    @cached_property
    def face_masks(self) -> frozenset[int]:
        """Every face including the empty one; exponential in facet size."""
        out: set[int] = {0}
        for facet in self.masks:
            if facet in out:
                continue
            out.update(submasks(facet))
        return frozenset(out)

    def contains_mask(self, mask: int) -> bool:
        if mask == 0:
            return True
        if mask >> self.m:
            return False
        if self.nonface_masks is not None:
            return not any(nonface & ~mask == 0 for nonface in self.nonface_masks)
        if "face_masks" in self.__dict__:
            return mask in self.face_masks
        return any(mask & ~facet == 0 for facet in self.masks)

    def __contains__(self, face: FaceLike) -> bool:
        return self.contains_mask(as_face(face).mask)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.m == other.m and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.m, self.masks))

    def __str__(self) -> str:
        body = ",".join(str(f) for f in self.facets)
        return f"K(m={self.m}, facets=[{body}])"


def from_facets(m: int, facets: Iterable[FaceLike]) -> SimplicialComplex:
    check_vertex_count(m)
    masks = [_check_face(as_face(facet), m).mask for facet in facets]
    return SimplicialComplex.from_masks(m, masks)


def simplex(m: int) -> SimplicialComplex:
    check_vertex_count(m)
    return SimplicialComplex(m, facet_masks=((1 << m) - 1,))


def simplex_on(vertices: FaceLike, m: int) -> SimplicialComplex:
    """Full simplex on ``vertices`` inside [m]; the rest are ghosts."""
    check_vertex_count(m)
    face = _check_face(as_face(vertices), m)
    return SimplicialComplex.from_masks(m, [face.mask])


def boundary_of_simplex(sigma: FaceLike, m: int) -> SimplicialComplex:
    """Boundary of ``sigma``; a single vertex has the empty boundary."""
    check_vertex_count(m)
    face = _check_face(as_face(sigma), m)
    if not face.mask:
        raise InputError("the boundary of the empty face is undefined")
    return SimplicialComplex.from_masks(m, [face.mask & ~bit(v) for v in face.vertices])


def faces(K: SimplicialComplex) -> list[Face]:
    return [Face(mask) for mask in sorted(K.face_masks - {0}, key=vertices_of)]


def vertices(K: SimplicialComplex) -> tuple[int, ...]:
    return vertices_of(K.vertex_mask)


def ghost_vertices(K: SimplicialComplex) -> tuple[int, ...]:
    return vertices_of(((1 << K.m) - 1) & ~K.vertex_mask)


def is_face(K: SimplicialComplex, sigma: FaceLike) -> bool:
    return K.contains_mask(_check_face(as_face(sigma), K.m).mask)


def _require_vertex(K: SimplicialComplex, v: int) -> int:
    _check_vertex(v, K.m)
    if not K.vertex_mask & bit(v):
        raise PreconditionError(f"vertex {v} is a ghost vertex of {K}")
    return bit(v)


def star(K: SimplicialComplex, v: int) -> SimplicialComplex:
    b = _require_vertex(K, v)
    return SimplicialComplex.from_masks(K.m, [f for f in K.masks if f & b])


def deletion(K: SimplicialComplex, v: int) -> SimplicialComplex:
    b = bit(_check_vertex(v, K.m))
    return SimplicialComplex.from_masks(K.m, [f & ~b for f in K.masks])


def link(K: SimplicialComplex, v: int) -> SimplicialComplex:
    b = _require_vertex(K, v)
    return SimplicialComplex.from_masks(K.m, [f & ~b for f in K.masks if f & b])


def join(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    overlap = K1.vertex_mask & K2.vertex_mask
    if overlap:
        raise PreconditionError(f"join needs disjoint vertex sets, both use {list(vertices_of(overlap))}")
    m = max(K1.m, K2.m)
    if not K1.masks:
        return SimplicialComplex.from_masks(m, K2.masks)
    if not K2.masks:
        return SimplicialComplex.from_masks(m, K1.masks)
    return SimplicialComplex.from_masks(m, [a | b for a in K1.masks for b in K2.masks])


def join_all(first: SimplicialComplex, *rest: SimplicialComplex) -> SimplicialComplex:
    out = first
    for other in rest:
        out = join(out, other)
    return out


def _same_m(K1: SimplicialComplex, K2: SimplicialComplex) -> int:
    if K1.m != K2.m:
        raise InputError(f"complexes live on different vertex sets ([{K1.m}] and [{K2.m}])")
    return K1.m


def union(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex.from_masks(_same_m(K1, K2), K1.masks + K2.masks)


def intersection(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    m = _same_m(K1, K2)
    return SimplicialComplex.from_masks(m, [a & b for a in K1.masks for b in K2.masks])


def _relabel_mask(mask: int, mapping: dict[int, int]) -> int:
    out = 0
    for v in vertices_of(mask):
        out |= bit(mapping[v])
    return out


def relabel(K: SimplicialComplex, mapping: dict[int, int], m: int) -> SimplicialComplex:
    """Push ``K`` along an injective vertex map; unmapped vertices must be ghosts."""
    check_vertex_count(m)
    if len(set(mapping.values())) != len(mapping):
        raise InputError("relabeling must be injective")
    for old, new in mapping.items():
        _check_vertex(old, K.m)
        _check_vertex(new, m)
    unmapped = [v for v in vertices(K) if v not in mapping]
    if unmapped:
        raise InputError(f"relabeling misses vertices {unmapped}")
    return SimplicialComplex.from_masks(m, [_relabel_mask(f, mapping) for f in K.masks])


def full_subcomplex(K: SimplicialComplex, I: Iterable[int]) -> tuple[SimplicialComplex, dict[int, int]]:
    """Faces of ``K`` inside ``I``, relabeled order-preservingly onto [|I|]."""
    chosen = sorted(set(I))
    if not chosen:
        raise InputError("full subcomplex needs a nonempty vertex set")
    for v in chosen:
        _check_vertex(v, K.m)
    mapping = {old: new for new, old in enumerate(chosen, start=1)}
    keep = 0
    for v in chosen:
        keep |= bit(v)
    masks = [f & keep for f in K.masks]
    return relabel(SimplicialComplex.from_masks(K.m, masks), mapping, len(chosen)), mapping


def equals(K1: SimplicialComplex, K2: SimplicialComplex) -> bool:
    return K1 == K2


def is_simplex(K: SimplicialComplex) -> bool:
    """One facet, hence covering every non-ghost vertex."""
    return len(K.masks) == 1
