from __future__ import annotations

from toric.cli import ToricCommand
from toric.families import FAMILIES, build_family, parse_params
from toric.serializers import ComplexSerializer


class Command(ToricCommand):
    help = "Generate a complex from a named family, e.g. `family kbar m=4 sigma1=1,2,3 sigma2=3,4`."

    def add_command_arguments(self, parser):
        parser.add_argument("name", choices=sorted(FAMILIES), help="Family name")
        parser.add_argument("params", nargs="*", help="key=value parameters")

    def run(self, **options):
        K = build_family(options["name"], parse_params(options["params"]))
        return ComplexSerializer(K).data
