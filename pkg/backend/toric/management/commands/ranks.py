from __future__ import annotations

from toric.cli import (
    ToricCommand,
    add_complex_argument,
    add_degree_argument,
    add_pairs_arguments,
    complex_and_pairs,
    max_degree,
)
from toric.exceptions import InputError
from toric.homotopy import FormalSpace, LoopOf, Product, Sphere, Wedge, classify, normalize
from toric.ranks import classification_ranks, ranks_of_formal
from toric.serializers import FormalSpaceField, RankSeriesSerializer


def _dimensions(raw: str, flag: str) -> list[int]:
    try:
        dims = [int(part) for part in raw.split(",") if part.strip()]
    except ValueError as exc:
        raise InputError(f"{flag} takes comma-separated sphere dimensions, got {raw!r}") from exc
    if not dims:
        raise InputError(f"{flag} needs at least one sphere dimension")
    return dims


def spheres_space(wedge: str, product: str, loop: bool) -> FormalSpace:
    kind, raw, flag = (Wedge, wedge, "--wedge") if wedge else (Product, product, "--product")
    spheres = tuple(Sphere(d) for d in _dimensions(raw, flag))
    if loop and kind is Product:
        return normalize(Product(tuple(LoopOf(s) for s in spheres)))
    space = normalize(kind(spheres))
    return normalize(LoopOf(space)) if loop else space


class Command(ToricCommand):
    help = (
        "Rational homotopy ranks, either of the loop space behind a classification "
        "or of a wedge/product of spheres given with --wedge/--product."
    )

    def add_command_arguments(self, parser):
        add_complex_argument(parser, required=False)
        add_pairs_arguments(parser)
        add_degree_argument(parser)
        spheres = parser.add_mutually_exclusive_group()
        spheres.add_argument("--wedge", type=str, default="", help="Sphere dimensions, e.g. 3,3")
        spheres.add_argument("--product", type=str, default="", help="Sphere dimensions, e.g. 3,5")
        parser.add_argument("--loop", action="store_true", help="Take loops on the --wedge/--product space")

    def run(self, **options):
        N = max_degree(options)
        if options["wedge"] or options["product"]:
            if options["input_path"]:
                raise InputError("give a complex file or --wedge/--product, not both")
            space = spheres_space(options["wedge"], options["product"], options["loop"])
            series = ranks_of_formal(space, None, N)
        else:
            if not options["input_path"]:
                raise InputError("give a complex file or --wedge/--product")
            K, pairs = complex_and_pairs(options)
            result = classify(K, pairs, allow_ghosts=options["allow_ghosts"])
            series = classification_ranks(result, pairs, N)
            space = result.decomposition or normalize(LoopOf(result.witness.wedge))
        payload = RankSeriesSerializer(series).data
        payload["space"] = FormalSpaceField().to_representation(space)
        payload["space_text"] = str(space)
        return payload
