"""Named complex families the command line can generate.

``family kbar m=4 sigma1=1,2,3 sigma2=3,4`` and friends; every builder takes
the ``key=value`` parameters as strings and returns a complex.
"""
from __future__ import annotations

from typing import Callable

from .exceptions import InputError, PreconditionError
from .mmf import build_kbar, complex_from_mmf, mutually_disjoint
from .simplicial import Face, SimplicialComplex, boundary_of_simplex, simplex


def parse_params(tokens: list[str]) -> dict[str, str]:
    params: dict[str, str] = {}
    for token in tokens:
        key, sep, value = token.partition("=")
        if not sep or not key:
            raise InputError(f"expected key=value, got {token!r}")
        if key in params:
            raise InputError(f"parameter {key!r} given twice")
        params[key] = value
    return params


def _int(params: dict[str, str], key: str) -> int:
    raw = params.get(key)
    if raw is None:
        raise InputError(f"missing parameter {key}")
    try:
        return int(raw)
    except ValueError as exc:
        raise InputError(f"{key} must be an integer, got {raw!r}") from exc


def _face(raw: str, key: str) -> Face:
    try:
        return Face.of(int(part) for part in raw.split(","))
    except ValueError as exc:
        raise InputError(f"{key} must be a comma-separated vertex list, got {raw!r}") from exc


def _required(params: dict[str, str], key: str) -> str:
    if key not in params:
        raise InputError(f"missing parameter {key}")
    return params[key]


def boundary_simplex(params: dict[str, str]) -> SimplicialComplex:
    m = _int(params, "m")
    if m < 2:
        raise InputError(f"boundary_simplex needs m >= 2, got {m}")
    return boundary_of_simplex(range(1, m + 1), m)


def full_simplex(params: dict[str, str]) -> SimplicialComplex:
    return simplex(_int(params, "m"))


def kbar(params: dict[str, str]) -> SimplicialComplex:
    m = _int(params, "m")
    sigma1 = _face(_required(params, "sigma1"), "sigma1")
    sigma2 = _face(_required(params, "sigma2"), "sigma2")
    try:
        return build_kbar(m, sigma1, sigma2)
    except PreconditionError as exc:
        raise InputError(str(exc)) from exc


def disjoint_mmf(params: dict[str, str]) -> SimplicialComplex:
    m = _int(params, "m")
    raw = _required(params, "blocks")
    blocks = [_face(part, "blocks") for part in raw.split("|") if part]
    if not mutually_disjoint(blocks):
        raise InputError(f"blocks {raw!r} are not disjoint")
    if any(len(block) < 2 for block in blocks):
        raise InputError("every block needs at least two vertices")
    return complex_from_mmf(m, blocks)


FAMILIES: dict[str, Callable[[dict[str, str]], SimplicialComplex]] = {
    "boundary_simplex": boundary_simplex,
    "kbar": kbar,
    "disjoint_mmf": disjoint_mmf,
    "simplex": full_simplex,
}

PARAMETERS: dict[str, set[str]] = {
    "boundary_simplex": {"m"},
    "kbar": {"m", "sigma1", "sigma2"},
    "disjoint_mmf": {"m", "blocks"},
    "simplex": {"m"},
}


def build_family(name: str, params: dict[str, str]) -> SimplicialComplex:
    try:
        builder = FAMILIES[name]
    except KeyError as exc:
        raise InputError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}") from exc
    unknown = sorted(set(params) - PARAMETERS[name])
    if unknown:
        raise InputError(f"family {name} takes {sorted(PARAMETERS[name])}, not {unknown}")
    return builder(params)
