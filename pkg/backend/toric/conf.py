from __future__ import annotations

from django.conf import settings

DEFAULTS = {
    "MAX_VERTICES": 63,
    "FACE_SET_LIMIT": 25,
    "BRUTE_FORCE_LIMIT": 12,
    "DEFAULT_MAX_DEGREE": 40,
    "MAX_DEGREE_CAP": 200,
    "GROWTH_MIN_DEGREE": 24,
    "GROWTH_RATIO": 4,
    "VERIFY_SEED": 1,
    "VERIFY_ITERATIONS": 200,
    "VERIFY_MAX_M": 10,
}


def setting(name: str) -> int:
    """Look up a ``TORIC`` tunable, falling back to the packaged default."""
    overrides = getattr(settings, "TORIC", {}) or {}
    return overrides.get(name, DEFAULTS[name])
