"""Ranks of rational homotopy groups for the spaces the classifier produces.

Series arithmetic runs in the power-series ring ZZ[t], truncated at an explicit
degree. Free graded Lie algebra ranks come from deflating the tensor-algebra
series one degree at a time.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping

from sympy.ntheory import divisors, mobius
from sympy.polys.domains import ZZ
from sympy.polys.ring_series import rs_mul, rs_pow, rs_series_inversion, rs_trunc
from sympy.polys.rings import PolyElement, ring

from .conf import setting
from .exceptions import InputError, InvariantError, PreconditionError
from .homotopy import (
    Classification,
    Contractible,
    ExternalX,
    FormalSpace,
    GeneralPair,
    LoopOf,
    PairSpec,
    Product,
    Sphere,
    Wedge,
    normalize,
)

logger = logging.getLogger(__name__)


SERIES_RING, t = ring("t", ZZ)


@dataclass(frozen=True)
class IntegerSeries:
    """Power series in ``t`` over ZZ, known through degree ``degree``."""

    poly: PolyElement
    degree: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "poly", rs_trunc(SERIES_RING(self.poly), t, self.degree + 1))

    @classmethod
    def one(cls, degree: int) -> IntegerSeries:
        return cls(SERIES_RING.one, degree)

    @property
    def coefficients(self) -> tuple[int, ...]:
        return tuple(self[i] for i in range(self.degree + 1))

    def __getitem__(self, i: int) -> int:
        return int(self.poly.get((i,), 0))

    def __mul__(self, other: IntegerSeries) -> IntegerSeries:
        n = min(self.degree, other.degree)
        return IntegerSeries(rs_mul(self.poly, other.poly, t, n + 1), n)

    @classmethod
    def binomial(cls, i: int, sign: int, exponent: int, degree: int) -> IntegerSeries:
        """(1 + sign * t^i) ** exponent, for sign +-1 and any integer exponent."""
        if i < 1 or sign not in (1, -1):
            raise InputError(f"bad binomial factor (i={i}, sign={sign})")
        base = SERIES_RING.one + sign * t**i
        if exponent < 0:
            # (1 + sign t^i)^-k is the k-th power of the inverted factor.
            base, exponent = rs_series_inversion(base, t, degree + 1), -exponent
        return cls(rs_pow(base, exponent, t, degree + 1), degree)


def tensor_series(generator_degrees: Iterable[int], degree: int) -> IntegerSeries:
    """1 / (1 - sum_j t^g_j), the Hilbert series of the tensor algebra."""
    denominator = SERIES_RING.one - sum((t**g for g in generator_degrees), SERIES_RING.zero)
    return IntegerSeries(rs_series_inversion(denominator, t, degree + 1), degree)


@dataclass(frozen=True)
class RankSeries:
    """Ranks of pi_q tensor Q by degree; zero entries are not stored.

    An ``exact_finite`` series lists its whole support, possibly past
    ``max_degree``. Otherwise only degrees up to ``max_degree`` are known.
    """

    ranks: Mapping[int, int]
    max_degree: int
    exact_finite: bool = False

    def __post_init__(self) -> None:
        cleaned = {q: r for q, r in sorted(self.ranks.items()) if r}
        if any(r < 0 for r in cleaned.values()):
            raise InvariantError(f"negative rank in {cleaned}")
        if not self.exact_finite:
            cleaned = {q: r for q, r in cleaned.items() if q <= self.max_degree}
        object.__setattr__(self, "ranks", cleaned)

    def __getitem__(self, q: int) -> int:
        return self.ranks.get(q, 0)

    def __add__(self, other: RankSeries) -> RankSeries:
        merged = dict(self.ranks)
        for q, r in other.ranks.items():
            merged[q] = merged.get(q, 0) + r
        return RankSeries(merged, min(self.max_degree, other.max_degree), self.exact_finite and other.exact_finite)

    def looped(self) -> RankSeries:
        """pi_q of the loop space is pi_(q+1) of the space."""
        return RankSeries({q - 1: r for q, r in self.ranks.items() if q > 1},
                          self.max_degree - 1, self.exact_finite)

    def cumulative(self) -> list[int]:
        out, running = [], 0
        for n in range(self.max_degree + 1):
            running += self[n]
            out.append(running)
        return out


def _check_degree(N: int, *, cap: bool = True) -> int:
    if not isinstance(N, int) or isinstance(N, bool) or N < 0:
        raise InputError(f"max degree must be a nonnegative integer, got {N!r}")
    if cap and N > setting("MAX_DEGREE_CAP"):
        raise InputError(f"max degree {N} is above the cap {setting('MAX_DEGREE_CAP')}")
    return N


def sphere_ranks(d: int, N: int) -> RankSeries:
    if d < 2:
        raise InputError(f"sphere ranks are given for d >= 2, got {d}")
    _check_degree(N)
    ranks = {d: 1} if d % 2 else {d: 1, 2 * d - 1: 1}
    return RankSeries(ranks, N, exact_finite=True)


def _deflate(gens: tuple[int, ...], horizon: int) -> dict[int, int]:
    series = tensor_series(gens, horizon - 1)
    ranks: dict[int, int] = {}
    for i in range(1, horizon):
        r = series[i]
        if r < 0:
            raise InvariantError(f"negative Lie rank {r} in degree {i} for generators {list(gens)}")
        if not r:
            continue
        ranks[i + 1] = r
        if i % 2:
            series = series * IntegerSeries.binomial(i, 1, -r, horizon - 1)
        else:
            series = series * IntegerSeries.binomial(i, -1, r, horizon - 1)
    return ranks


def _lie_ranks(generator_degrees: Iterable[int], N: int) -> RankSeries:
    gens = tuple(sorted(generator_degrees))
    for g in gens:
        if not isinstance(g, int) or g < 1:
            raise InputError(f"generator degrees start at 1, got {g!r}")
    if gens and N < gens[-1]:
        raise InputError(f"max degree {N} is below the generator degree {gens[-1]}")
    exact = len(gens) <= 1
    # One generator x spans x and, in odd degree, [x, x]; list both even past N.
    horizon = max(N, 2 * gens[0] + 1) if gens and exact else N
    return RankSeries(_deflate(gens, horizon), N, exact_finite=exact)


def lie_ranks(generator_degrees: Iterable[int], N: int) -> RankSeries:
    """Shifted ranks of the free graded Lie algebra: ``ranks[q] = dim L_(q-1)``."""
    return _lie_ranks(generator_degrees, _check_degree(N))


def pbw_reconstruct(ranks: RankSeries, degree: int) -> IntegerSeries:
    """Rebuild the enveloping-algebra series from shifted Lie ranks."""
    out = IntegerSeries.one(degree)
    for q, r in ranks.ranks.items():
        i = q - 1
        if not 1 <= i <= degree:
            continue
        if i % 2:
            out = out * IntegerSeries.binomial(i, 1, r, degree)
        else:
            out = out * IntegerSeries.binomial(i, -1, -r, degree)
    return out


def witt_number(k: int, n: int) -> int:
    if n < 1 or k < 0:
        raise InputError(f"Witt numbers need n >= 1 and k >= 0, got k={k}, n={n}")
    total = sum(int(mobius(d)) * k ** (n // d) for d in divisors(n))
    if total % n:
        raise InvariantError(f"Witt sum {total} is not divisible by {n}")
    return total // n


def witt_ranks(k: int, g: int, N: int) -> RankSeries:
    """Shifted ranks of a free Lie algebra on k generators of one even degree g."""
    if g < 2 or g % 2:
        raise InputError(f"the Witt formula is used for one even generator degree, got {g}")
    _check_degree(N)
    ranks = {n * g + 1: witt_number(k, n) for n in range(1, N) if n * g < N}
    return RankSeries(ranks, N, exact_finite=k <= 1)


def _loop_ranks(child: FormalSpace, pairs: PairSpec | None, N: int) -> RankSeries:
    if isinstance(child, Sphere):
        if child.dim < 2:
            raise PreconditionError("loops on S^1 have no rational homotopy above degree 0 to report")
        return sphere_ranks(child.dim, N + 1).looped()
    if isinstance(child, ExternalX):
        pair = pairs[child.vertex] if pairs is not None else None
        if not isinstance(pair, GeneralPair) or pair.x_rational_degrees is None:
            raise PreconditionError(f"no rational homotopy degrees were given for X_{child.vertex}")
        counts: dict[int, int] = {}
        for degree in pair.x_rational_degrees:
            counts[degree] = counts.get(degree, 0) + 1
        return RankSeries(counts, N + 1, exact_finite=True).looped()
    if isinstance(child, Wedge):
        return _lie_ranks(_wedge_generators(child), N + 1).looped()
    raise PreconditionError(f"no rank formula for loops on {child}")


def _wedge_generators(wedge: Wedge) -> list[int]:
    gens = []
    for summand in wedge.children:
        if not isinstance(summand, Sphere) or summand.dim < 2:
            raise PreconditionError(f"wedge summand {summand} is not a simply connected sphere")
        gens.append(summand.dim - 1)
    return gens


def ranks_of_formal(space: FormalSpace, pairs: PairSpec | None, N: int) -> RankSeries:
    _check_degree(N)
    if normalize(space) != space:
        raise PreconditionError(f"{space} is not normalized")
    if isinstance(space, Contractible):
        return RankSeries({}, N, exact_finite=True)
    if isinstance(space, Product):
        total = RankSeries({}, N, exact_finite=True)
        for factor in space.children:
            total = total + ranks_of_formal(factor, pairs, N)
        return total
    if isinstance(space, LoopOf):
        return _loop_ranks(space.child, pairs, N)
    if isinstance(space, Sphere):
        return sphere_ranks(space.dim, N)
    if isinstance(space, Wedge):
        return _lie_ranks(_wedge_generators(space), N)
    raise PreconditionError(f"no rank formula for {space}")


class Growth(str, Enum):
    POLYNOMIAL = "polynomial"
    EXPONENTIAL = "exponential"


@dataclass(frozen=True)
class GrowthReport:
    cumulative: tuple[int, ...]
    verdict: Growth | None
    ratio_tail: Fraction = field(default_factory=lambda: Fraction(1))


def growth_report(r: RankSeries) -> GrowthReport:
    N = r.max_degree
    if N < setting("GROWTH_MIN_DEGREE"):
        raise InputError(f"growth needs ranks through degree {setting('GROWTH_MIN_DEGREE')}, got {N}")
    cumulative = r.cumulative()
    top, half = cumulative[N], cumulative[math.ceil(N / 2)]
    ratio_tail = Fraction(top, cumulative[N - 2]) if cumulative[N - 2] else Fraction(1)
    if r.exact_finite:
        return GrowthReport(tuple(cumulative), Growth.POLYNOMIAL, ratio_tail)
    recent = any(r[q] for q in range(N - 3, N + 1))
    if top and recent and top >= setting("GROWTH_RATIO") * half:
        return GrowthReport(tuple(cumulative), Growth.EXPONENTIAL, ratio_tail)
    logger.warning("growth of a truncated rank series is undetermined through degree %d", N)
    return GrowthReport(tuple(cumulative), None, ratio_tail)


def classification_ranks(result: Classification, pairs: PairSpec, N: int) -> RankSeries:
    """Loop-space ranks behind a verdict: the decomposition, or the looped witness wedge."""
    if result.decomposition is not None:
        return ranks_of_formal(result.decomposition, pairs, N)
    if result.witness is not None:
        return ranks_of_formal(normalize(LoopOf(result.witness.wedge)), pairs, N)
    raise PreconditionError("no rank model: the verdict rests on condition (i) or (iii) alone")
