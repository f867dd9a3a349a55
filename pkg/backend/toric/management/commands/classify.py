from __future__ import annotations

from toric.cli import (
    ToricCommand,
    add_complex_argument,
    add_degree_argument,
    add_pairs_arguments,
    complex_and_pairs,
    max_degree,
)
from toric.homotopy import classify
from toric.ranks import classification_ranks
from toric.serializers import ClassificationSerializer, RankSeriesSerializer


class Command(ToricCommand):
    help = "Decide whether the polyhedral product over a complex is rationally elliptic or hyperbolic."

    def add_command_arguments(self, parser):
        add_complex_argument(parser)
        add_pairs_arguments(parser)
        add_degree_argument(parser)
        parser.add_argument("--with-ranks", action="store_true", help="Attach rational homotopy ranks")

    def run(self, **options):
        K, pairs = complex_and_pairs(options)
        result = classify(K, pairs, allow_ghosts=options["allow_ghosts"])
        for warning in result.warnings:
            self.note(warning)
        payload = ClassificationSerializer(result).data
        if options["with_ranks"]:
            payload["ranks"] = RankSeriesSerializer(classification_ranks(result, pairs, max_degree(options))).data
        return payload
