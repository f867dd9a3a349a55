from __future__ import annotations

import json
from pathlib import Path

from .exceptions import InputError
from .homotopy import PairSpec
from .serializers import ComplexSerializer, PairsFileSerializer
from .simplicial import SimplicialComplex


def _flatten_errors(errors, prefix: str = "") -> list[str]:
    if isinstance(errors, dict):
        out = []
        for key, value in errors.items():
            label = "" if key == "non_field_errors" else str(key)
            out.extend(_flatten_errors(value, f"{prefix}.{label}" if prefix and label else prefix or label))
        return out
    if isinstance(errors, list):
        out = []
        for index, value in enumerate(errors):
            nested = isinstance(value, (dict, list))
            out.extend(_flatten_errors(value, f"{prefix}[{index}]" if nested else prefix))
        return out
    return [f"{prefix}: {errors}" if prefix else str(errors)]


def load_json(path: str | Path):
    path = Path(path)
    try:
        with path.open("r", encoding="utf-8") as handle:
            return json.load(handle)
    except FileNotFoundError as exc:
        raise InputError(f"{path}: no such file") from exc
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise InputError(f"{path}: not valid JSON ({exc})") from exc


def _validated(serializer_class, data, label: str, **context) -> dict:
    serializer = serializer_class(data=data, context=context)
    if not serializer.is_valid():
        raise InputError(f"{label}: " + "; ".join(_flatten_errors(serializer.errors)))
    return serializer.validated_data


def parse_complex(data, label: str = "complex") -> SimplicialComplex:
    return _validated(ComplexSerializer, data, label)["complex"]


def load_complex(path: str | Path) -> SimplicialComplex:
    return parse_complex(load_json(path), str(path))


def parse_pairs(data, m: int, label: str = "pairs") -> PairSpec:
    return _validated(PairsFileSerializer, data, label, m=m)["spec"]


def load_pairs(path: str | Path, m: int) -> PairSpec:
    return parse_pairs(load_json(path), m, str(path))


def dump_json(payload) -> str:
    """Canonical JSON text: sorted keys, compact separators, trailing newline."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
