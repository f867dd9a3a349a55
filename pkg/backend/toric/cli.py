from __future__ import annotations

from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from .conf import setting
from .exceptions import InputError, ToricError
from .homotopy import PairSpec
from .io import dump_json, load_complex, load_pairs
from .simplicial import SimplicialComplex


class ToricCommand(BaseCommand):
    """Base for the JSON commands: payload on stdout (or ``--output``), notes on stderr.

    Subclasses implement ``run(**options)`` and return a JSON-ready payload.
    Library errors become ``CommandError`` with the matching exit code.
    """

    requires_system_checks: list[str] = []

    def add_arguments(self, parser):
        parser.add_argument("--output", type=str, default="", help="Write JSON here instead of stdout")
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        try:
            payload = self.run(**options)
        except ToricError as exc:
            raise CommandError(str(exc), returncode=exc.exit_code) from exc
        self.emit(payload, options["output"])

    def run(self, **options):
        raise NotImplementedError

    def emit(self, payload, output: str = "") -> None:
        text = dump_json(payload)
        if output:
            Path(output).write_text(text, encoding="utf-8")
            self.stderr.write(self.style.SUCCESS(f"Wrote {output}"))
        else:
            self.stdout.write(text, ending="")

    def note(self, message: str) -> None:
        self.stderr.write(self.style.WARNING(message))


def add_complex_argument(parser, *, required: bool = True) -> None:
    parser.add_argument("input_path", nargs=None if required else "?", help="Complex JSON file")


def add_pairs_arguments(parser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--pairs", type=str, default="", help="Pairs JSON file, one entry per vertex")
    group.add_argument("--disk-sphere", type=int, default=None, help="Use (D^n, S^(n-1)) at every vertex")
    parser.add_argument("--allow-ghosts", action="store_true", help="Ignore ghost vertices instead of failing")


def add_degree_argument(parser) -> None:
    parser.add_argument(
        "--max-degree", type=int, default=None,
        help=f"Truncation degree for rank series (default {setting('DEFAULT_MAX_DEGREE')})",
    )


def max_degree(options) -> int:
    value = options.get("max_degree")
    return setting("DEFAULT_MAX_DEGREE") if value is None else value


def complex_and_pairs(options) -> tuple[SimplicialComplex, PairSpec]:
    K = load_complex(options["input_path"])
    if options.get("pairs"):
        return K, load_pairs(options["pairs"], K.m)
    if options.get("disk_sphere") is not None:
        return K, PairSpec.disk_sphere(options["disk_sphere"], K.m)
    raise InputError("give either --pairs or --disk-sphere")
