"""Symbolic homotopy types and the elliptic/hyperbolic classifier.

Nothing here builds maps or spaces. A ``FormalSpace`` is a tag tree that is
simplified with exactly the rules the decomposition arguments need:
suspending or smashing spheres adds dimensions, products and wedges flatten,
contractible factors disappear.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import ClassVar, Iterable, Union

from .exceptions import InputError, PreconditionError
from .mmf import MmfSet, build_kbar, intermediary_complex, join_decomposition, mmf
from .simplicial import (
    Face,
    FaceLike,
    SimplicialComplex,
    as_face,
    bit,
    boundary_of_simplex,
    full_subcomplex,
    ghost_vertices,
    link,
    vertices,
)

logger = logging.getLogger(__name__)

FINITE_EXPONENT_NOTE = "finite homotopy exponent at every prime"
NO_EXPONENT_NOTE = "no exponent at any prime"


class FormalSpace:
    """Base of the symbolic space nodes."""

    tag: ClassVar[str] = ""

    def _wrapped(self) -> str:
        return str(self)


@dataclass(frozen=True)
class Sphere(FormalSpace):
    tag: ClassVar[str] = "sphere"
    dim: int

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise InputError(f"sphere dimension must be at least 1, got {self.dim}")

    def __str__(self) -> str:
        return f"S^{self.dim}"


@dataclass(frozen=True)
class Contractible(FormalSpace):
    tag: ClassVar[str] = "contractible"

    def __str__(self) -> str:
        return "*"


@dataclass(frozen=True)
class ExternalX(FormalSpace):
    tag: ClassVar[str] = "external_x"
    vertex: int

    def __str__(self) -> str:
        return f"X_{self.vertex}"


@dataclass(frozen=True)
class Fibre(FormalSpace):
    """The fibre Y_v when it is not rationally a sphere."""

    tag: ClassVar[str] = "fibre"
    vertex: int

    def __str__(self) -> str:
        return f"Y_{self.vertex}"


@dataclass(frozen=True)
class LoopOf(FormalSpace):
    tag: ClassVar[str] = "loop"
    child: FormalSpace

    def __str__(self) -> str:
        return f"Omega {self.child._wrapped()}"


@dataclass(frozen=True)
class Suspension(FormalSpace):
    tag: ClassVar[str] = "suspension"
    child: FormalSpace
    times: int = 1

    def __str__(self) -> str:
        return f"Sigma^{self.times} {self.child._wrapped()}"


@dataclass(frozen=True)
class _Compound(FormalSpace):
    children: tuple[FormalSpace, ...]
    joiner: ClassVar[str] = ""

    def __post_init__(self) -> None:
        if not self.children:
            raise InputError(f"{self.tag} needs at least one factor")

    def __str__(self) -> str:
        return self.joiner.join(child._wrapped() for child in self.children)

    def _wrapped(self) -> str:
        return f"({self})"


@dataclass(frozen=True)
class Wedge(_Compound):
    tag: ClassVar[str] = "wedge"
    joiner: ClassVar[str] = " v "


@dataclass(frozen=True)
class Product(_Compound):
    tag: ClassVar[str] = "product"
    joiner: ClassVar[str] = " x "


@dataclass(frozen=True)
class Smash(_Compound):
    tag: ClassVar[str] = "smash"
    joiner: ClassVar[str] = " ^ "


def _flatten(kind: type[_Compound], children: Iterable[FormalSpace]) -> list[FormalSpace]:
    out: list[FormalSpace] = []
    for child in children:
        if isinstance(child, kind):
            out.extend(child.children)
        else:
            out.append(child)
    return out


def normalize(space: FormalSpace) -> FormalSpace:
    if isinstance(space, LoopOf):
        child = normalize(space.child)
        return Contractible() if isinstance(child, Contractible) else LoopOf(child)
    if isinstance(space, Suspension):
        child = normalize(space.child)
        times = space.times
        if isinstance(child, Suspension):
            child, times = child.child, times + child.times
        if times == 0:
            return child
        if isinstance(child, Contractible):
            return child
        if isinstance(child, Sphere):
            return Sphere(child.dim + times)
        return Suspension(child, times)
    if isinstance(space, (Product, Wedge)):
        kind = type(space)
        kept = [c for c in _flatten(kind, map(normalize, space.children)) if not isinstance(c, Contractible)]
        if not kept:
            return Contractible()
        return kept[0] if len(kept) == 1 else kind(tuple(kept))
    if isinstance(space, Smash):
        parts = _flatten(Smash, map(normalize, space.children))
        if any(isinstance(p, Contractible) for p in parts):
            return Contractible()
        sphere_dims = sum(p.dim for p in parts if isinstance(p, Sphere))
        others = [p for p in parts if not isinstance(p, Sphere)]
        if not others:
            return Sphere(sphere_dims)
        rest = others[0] if len(others) == 1 else Smash(tuple(others))
        # S^d ^ Y is the d-fold suspension of Y.
        return normalize(Suspension(rest, sphere_dims)) if sphere_dims else rest
    return space


class FibreKind(str, Enum):
    TRIVIAL = "trivial"
    SPHERE = "sphere"
    BIG = "big"


@dataclass(frozen=True)
class FibreType:
    """Rational type of the homotopy fibre of A_i -> X_i."""

    kind: FibreKind
    dim: int | None = None
    lower_rank_bound: int | None = None

    def __post_init__(self) -> None:
        if self.kind is FibreKind.SPHERE and (self.dim is None or self.dim < 1):
            raise InputError(f"a sphere fibre needs a dimension >= 1, got {self.dim}")
        if self.kind is FibreKind.BIG and (self.lower_rank_bound is None or self.lower_rank_bound < 2):
            raise InputError(f"a big fibre needs a rank bound >= 2, got {self.lower_rank_bound}")

    @classmethod
    def trivial(cls) -> FibreType:
        return cls(FibreKind.TRIVIAL)

    @classmethod
    def sphere(cls, dim: int) -> FibreType:
        return cls(FibreKind.SPHERE, dim=dim)

    @classmethod
    def big(cls, lower_rank_bound: int) -> FibreType:
        return cls(FibreKind.BIG, lower_rank_bound=lower_rank_bound)


@dataclass(frozen=True)
class DiskSphere:
    """The pair (D^n, S^(n-1))."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise InputError(f"disk-sphere pairs need n >= 2, got {self.n}")

    x_elliptic: ClassVar[bool] = True

    @property
    def y_rational(self) -> FibreType:
        return FibreType.sphere(self.n - 1)


@dataclass(frozen=True)
class GeneralPair:
    x_elliptic: bool
    y_rational: FibreType
    x_rational_degrees: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.x_elliptic and self.x_rational_degrees is None:
            raise InputError("an elliptic X needs its rational homotopy degrees")
        for degree in self.x_rational_degrees or ():
            if degree < 2:
                raise InputError(f"rational homotopy degrees of X start at 2, got {degree}")

    @property
    def has_nontrivial_x(self) -> bool:
        return self.x_rational_degrees is None or bool(self.x_rational_degrees)


Pair = Union[DiskSphere, GeneralPair]


@dataclass(frozen=True)
class PairSpec:
    pairs: tuple[Pair, ...]

    @classmethod
    def broadcast(cls, pair: Pair, m: int) -> PairSpec:
        return cls((pair,) * m)

    @classmethod
    def disk_sphere(cls, n: int, m: int) -> PairSpec:
        return cls.broadcast(DiskSphere(n), m)

    @property
    def m(self) -> int:
        return len(self.pairs)

    def __getitem__(self, v: int) -> Pair:
        if not 1 <= v <= len(self.pairs):
            raise InputError(f"no pair given for vertex {v}")
        return self.pairs[v - 1]

    def all_disk_sphere(self, among: Iterable[int] | None = None) -> bool:
        chosen = range(1, self.m + 1) if among is None else among
        return all(isinstance(self[v], DiskSphere) for v in chosen)

    def fibre(self, v: int) -> FormalSpace:
        y = self[v].y_rational
        if y.kind is FibreKind.TRIVIAL:
            raise PreconditionError(f"fibre Y_{v} is rationally trivial")
        if y.kind is FibreKind.SPHERE:
            return Sphere(y.dim)
        return Fibre(v)


def eval_cy_simplex(pairs: PairSpec, sigma: FaceLike) -> FormalSpace:
    """A product of cones, hence contractible."""
    return Contractible()


def eval_cy_boundary(pairs: PairSpec, sigma: FaceLike) -> FormalSpace:
    """(|sigma|-1)-fold suspension of the smash of the fibres over sigma.

    With sphere fibres this is a single sphere; otherwise the symbolic
    suspension/smash tree is returned.
    """
    face = as_face(sigma)
    if len(face) < 2:
        raise PreconditionError(f"boundary evaluation needs at least two vertices, got {face}")
    fibres = tuple(pairs.fibre(v) for v in face.vertices)
    return normalize(Suspension(Smash(fibres), len(face) - 1))


@dataclass(frozen=True)
class ConditionCheck:
    passed: bool
    evidence: str
    vertices: tuple[int, ...] = ()
    faces: tuple[Face, ...] = ()


@dataclass(frozen=True)
class HyperbolicWitness:
    sigma1: Face
    sigma2: Face
    wedge: FormalSpace
    intermediary: SimplicialComplex
    relabeling: dict[int, int] = field(default_factory=dict)

    @property
    def support(self) -> Face:
        return Face(self.sigma1.mask | self.sigma2.mask)


class Verdict(str, Enum):
    ELLIPTIC = "elliptic"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    elliptic_factors: ConditionCheck
    disjoint_faces: ConditionCheck
    sphere_fibres: ConditionCheck
    mmf: MmfSet
    decomposition: FormalSpace | None = None
    witness: HyperbolicWitness | None = None
    moore_note: str | None = None
    warnings: tuple[str, ...] = ()

    @property
    def is_elliptic(self) -> bool:
        return self.verdict is Verdict.ELLIPTIC


def _proper_mmf(K: SimplicialComplex, allow_ghosts: bool) -> MmfSet:
    """Minimal missing faces with ghost singletons dropped."""
    found = mmf(K, allow_ghosts=allow_ghosts)
    return MmfSet.of(f for f in found.faces if len(f) > 1)


def _check_pairs(K: SimplicialComplex, pairs: PairSpec) -> None:
    if pairs.m != K.m:
        raise InputError(f"{pairs.m} pairs given for a complex on {K.m} vertices")


def decompose_loops(K: SimplicialComplex, pairs: PairSpec, *, allow_ghosts: bool = False) -> FormalSpace:
    """Loop-space splitting: loops on the X_i times loops on one sphere per missing face."""
    _check_pairs(K, pairs)
    minimal = _proper_mmf(K, allow_ghosts)
    if not minimal.disjoint:
        a, b = minimal.intersecting_pairs()[0]
        raise PreconditionError(f"minimal missing faces {a} and {b} intersect")
    join_decomposition(K, allow_ghosts=allow_ghosts)

    factors: list[FormalSpace] = []
    for v in vertices(K):
        pair = pairs[v]
        if isinstance(pair, GeneralPair) and pair.has_nontrivial_x:
            factors.append(LoopOf(ExternalX(v)))
    for sigma in minimal.faces:
        piece = eval_cy_boundary(pairs, sigma)
        if not isinstance(piece, Sphere):
            raise PreconditionError(f"the boundary of {sigma} does not evaluate to a sphere ({piece})")
        factors.append(LoopOf(piece))
    if not factors:
        return Contractible()
    return normalize(Product(tuple(factors)))


def hyperbolic_witness(
    K: SimplicialComplex, pairs: PairSpec, *, allow_ghosts: bool = False
) -> HyperbolicWitness:
    """First intersecting pair of missing faces and the wedge that retracts off."""
    _check_pairs(K, pairs)
    minimal = _proper_mmf(K, allow_ghosts)
    clashing = minimal.intersecting_pairs()
    if not clashing:
        raise PreconditionError("the minimal missing faces are mutually disjoint")
    sigma1, sigma2 = clashing[0]
    wedge = normalize(Wedge((eval_cy_boundary(pairs, sigma1), eval_cy_boundary(pairs, sigma2))))
    kbar, mapping = intermediary_complex(K, sigma1, sigma2, allow_ghosts=allow_ghosts)
    return HyperbolicWitness(sigma1, sigma2, wedge, kbar, mapping)


def classify(K: SimplicialComplex, pairs: PairSpec, *, allow_ghosts: bool = False) -> Classification:
    if not K.masks:
        raise PreconditionError("the complex has no nonempty faces")
    _check_pairs(K, pairs)
    warnings: list[str] = []
    ghosts = ghost_vertices(K)
    if ghosts:
        if not allow_ghosts:
            raise PreconditionError(f"ghost vertices {list(ghosts)} are not classified")
        note = f"ghost vertices {list(ghosts)} ignored; their A_i factors are not modeled"
        logger.warning(note)
        warnings.append(note)

    live = vertices(K)
    for v in live:
        if pairs[v].y_rational.kind is FibreKind.TRIVIAL:
            raise PreconditionError(f"fibre Y_{v} is rationally trivial")

    not_elliptic = tuple(v for v in live if not pairs[v].x_elliptic)
    condition_i = ConditionCheck(
        passed=not not_elliptic,
        evidence=(f"X_v is not elliptic for v in {list(not_elliptic)}" if not_elliptic
                  else "every X_v is elliptic"),
        vertices=not_elliptic,
    )

    minimal = _proper_mmf(K, allow_ghosts)
    clashing = minimal.intersecting_pairs()
    if clashing:
        a, b = clashing[0]
        condition_ii = ConditionCheck(False, f"minimal missing faces {a} and {b} intersect", faces=(a, b))
    else:
        condition_ii = ConditionCheck(True, f"{len(minimal)} minimal missing faces, mutually disjoint",
                                      faces=minimal.faces)

    covered = 0
    for face in minimal.faces:
        covered |= face.mask
    non_spheres = tuple(
        v for v in live if covered & bit(v) and pairs[v].y_rational.kind is not FibreKind.SPHERE
    )
    condition_iii = ConditionCheck(
        passed=not non_spheres,
        evidence=(f"Y_v is not rationally a sphere for v in {list(non_spheres)}" if non_spheres
                  else "every fibre over a minimal missing face is rationally a sphere"),
        vertices=non_spheres,
    )

    elliptic = condition_i.passed and condition_ii.passed and condition_iii.passed
    decomposition = decompose_loops(K, pairs, allow_ghosts=allow_ghosts) if elliptic else None
    witness = None if condition_ii.passed else hyperbolic_witness(K, pairs, allow_ghosts=allow_ghosts)
    moore_note = None
    if pairs.all_disk_sphere(live):
        moore_note = FINITE_EXPONENT_NOTE if elliptic else NO_EXPONENT_NOTE

    return Classification(
        verdict=Verdict.ELLIPTIC if elliptic else Verdict.HYPERBOLIC,
        elliptic_factors=condition_i,
        disjoint_faces=condition_ii,
        sphere_fibres=condition_iii,
        mmf=minimal,
        decomposition=decomposition,
        witness=witness,
        moore_note=moore_note,
        warnings=tuple(warnings),
    )


@dataclass(frozen=True)
class LinkJoinSide:
    """Degree bookkeeping for one of the two missing faces of the intermediary."""

    face: Face
    restriction_is_boundary: bool
    link_restriction_is_boundary: bool
    whole: FormalSpace
    suspended_smash: FormalSpace

    @property
    def agrees(self) -> bool:
        return self.restriction_is_boundary and self.link_restriction_is_boundary and self.whole == self.suspended_smash


def _boundary_space(pairs: PairSpec, face: Face) -> FormalSpace:
    # The boundary of a single vertex is empty and its polyhedral product is Y_v.
    if len(face) == 1:
        return pairs.fibre(face.vertices[0])
    return eval_cy_boundary(pairs, face)


def _suspended_link_factor(pairs: PairSpec, face: Face, w: int) -> FormalSpace:
    return normalize(Suspension(Smash((_boundary_space(pairs, face.without(w)), pairs.fibre(w))), 1))


def _restriction_is_boundary(K: SimplicialComplex, face: Face) -> bool:
    restricted, mapping = full_subcomplex(K, face.vertices)
    return restricted == boundary_of_simplex([mapping[v] for v in face.vertices], restricted.m)


def linkjoin_sides(
    m: int, sigma1: FaceLike, sigma2: FaceLike, w: int, pairs: PairSpec
) -> tuple[LinkJoinSide, LinkJoinSide]:
    s1, s2 = as_face(sigma1), as_face(sigma2)
    kbar = build_kbar(m, s1, s2)
    if w not in s1 or w not in s2:
        raise PreconditionError(f"vertex {w} is not in both {s1} and {s2}")
    if pairs.m != m or not pairs.all_disk_sphere():
        raise PreconditionError("the link/join bookkeeping is only set up for disk-sphere pairs")
    star_link = link(kbar, w)
    sides = []
    for face in (s1, s2):
        sides.append(LinkJoinSide(
            face=face,
            restriction_is_boundary=_restriction_is_boundary(kbar, face),
            link_restriction_is_boundary=_restriction_is_boundary(star_link, face.without(w)),
            whole=_boundary_space(pairs, face),
            suspended_smash=_suspended_link_factor(pairs, face, w),
        ))
    return sides[0], sides[1]


def linkjoin_check(m: int, sigma1: FaceLike, sigma2: FaceLike, w: int, pairs: PairSpec) -> bool:
    """Both missing faces satisfy K_I = boundary and the suspension/smash degree count."""
    return all(side.agrees for side in linkjoin_sides(m, sigma1, sigma2, w, pairs))
