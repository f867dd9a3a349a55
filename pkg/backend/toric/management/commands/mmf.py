from __future__ import annotations

from toric.cli import ToricCommand, add_complex_argument
from toric.io import load_complex
from toric.mmf import mmf
from toric.serializers import MmfSetSerializer


class Command(ToricCommand):
    help = "Print the minimal missing faces of a complex and whether they are mutually disjoint."

    def add_command_arguments(self, parser):
        add_complex_argument(parser)
        parser.add_argument("--allow-ghosts", action="store_true", help="Report ghost vertices as singleton faces")

    def run(self, **options):
        K = load_complex(options["input_path"])
        found = mmf(K, allow_ghosts=options["allow_ghosts"])
        singles = [list(f.vertices) for f in found.faces if len(f) == 1]
        if singles:
            self.note(f"Singleton missing faces {singles} come from ghost vertices.")
        return MmfSetSerializer(found).data
