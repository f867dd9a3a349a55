from __future__ import annotations

from django.core.management.base import CommandError

from toric.cli import ToricCommand
from toric.serializers import ReportSerializer
from toric.verification.runner import VerifyConfig, run_suite


class Command(ToricCommand):
    help = "Run the seeded property suites and report shrunk counterexamples; exit 1 on any failure."

    def add_command_arguments(self, parser):
        parser.add_argument("--seed", type=int, default=None)
        parser.add_argument("--iters", type=int, default=None, help="Instances per property")
        parser.add_argument("--max-m", type=int, default=None, help="Largest vertex count to sample")
        parser.add_argument(
            "--property", action="append", default=[], dest="property_names",
            help="Only run this property (repeatable)",
        )
        parser.add_argument("--timings", action="store_true", help="Include wall times (not reproducible)")

    def handle(self, *args, **options):
        super().handle(*args, **options)
        report = self._report
        if not report.passed:
            raise CommandError(f"Properties failed: {', '.join(report.failing)}", returncode=1)
        self.stderr.write(self.style.SUCCESS(f"{len(report.properties)} properties passed."))

    def run(self, **options):
        config = VerifyConfig.from_settings(
            seed=options["seed"],
            iterations=options["iters"],
            max_m=options["max_m"],
            properties=tuple(options["property_names"]),
            timings=options["timings"],
        )
        self._report = run_suite(config)
        return ReportSerializer(self._report, context={"timings": config.timings}).data
