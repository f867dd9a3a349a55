from __future__ import annotations

from toric.cli import ToricCommand, add_complex_argument, add_pairs_arguments, complex_and_pairs
from toric.homotopy import decompose_loops
from toric.mmf import join_decomposition
from toric.serializers import FormalSpaceField


class Command(ToricCommand):
    help = "Print the loop-space decomposition of an elliptic polyhedral product."

    def add_command_arguments(self, parser):
        add_complex_argument(parser)
        add_pairs_arguments(parser)

    def run(self, **options):
        K, pairs = complex_and_pairs(options)
        allow_ghosts = options["allow_ghosts"]
        space = decompose_loops(K, pairs, allow_ghosts=allow_ghosts)
        split = join_decomposition(K, allow_ghosts=allow_ghosts)
        return {
            "decomposition": FormalSpaceField().to_representation(space),
            "decomposition_text": str(space),
            "join": {
                "simplex": list(split.k0_vertices.vertices),
                "boundaries": [list(face.vertices) for face in split.boundary_factors],
            },
        }
