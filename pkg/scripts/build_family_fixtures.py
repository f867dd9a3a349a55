"""Write data/families/*.json from the named complex families.

Each fixture is the canonical complex JSON the `family` command prints, so
the files can be fed straight back into `mmf`, `classify` or `decompose`.

Usage:
    python scripts/build_family_fixtures.py
"""
from __future__ import annotations

import os
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
OUTPUT_DIR = ROOT / "data" / "families"

FIXTURES = {
    "boundary_simplex_3": ("boundary_simplex", {"m": "3"}),
    "boundary_simplex_6": ("boundary_simplex", {"m": "6"}),
    "simplex_4": ("simplex", {"m": "4"}),
    "kbar_3": ("kbar", {"m": "3", "sigma1": "1,2", "sigma2": "2,3"}),
    "kbar_4": ("kbar", {"m": "4", "sigma1": "1,2,3", "sigma2": "3,4"}),
    "kbar_6": ("kbar", {"m": "6", "sigma1": "1,2,3,4", "sigma2": "3,4,5,6"}),
    "disjoint_mmf_5": ("disjoint_mmf", {"m": "5", "blocks": "1,2|3,4"}),
    "disjoint_mmf_9": ("disjoint_mmf", {"m": "9", "blocks": "1,2,3|4,5|6,7,8"}),
}


def _setup_django() -> None:
    sys.path.insert(0, str(ROOT / "backend"))
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "polyprod.settings")
    import django

    django.setup()


def main() -> None:
    _setup_django()
    from toric.families import build_family
    from toric.io import dump_json
    from toric.serializers import ComplexSerializer

    OUTPUT_DIR.mkdir(parents=True, exist_ok=True)
    for stem, (name, params) in FIXTURES.items():
        path = OUTPUT_DIR / f"{stem}.json"
        path.write_text(dump_json(ComplexSerializer(build_family(name, params)).data), encoding="utf-8")
        print(f"Wrote {path.relative_to(ROOT)}")


if __name__ == "__main__":
    main()
