from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Any

from toric.conf import setting
from toric.exceptions import InputError

from .generators import instance_rng
from .properties import REGISTRY, Property

logger = logging.getLogger(__name__)

MAX_COUNTEREXAMPLES = 5
ORACLE_MAX_M = 12
IDENTITY_MAX_M = 20


@dataclass(frozen=True)
class VerifyConfig:
    seed: int
    iterations: int
    max_m: int
    properties: tuple[str, ...] = ()
    timings: bool = False

    def __post_init__(self) -> None:
        if not -(2 ** 63) <= self.seed < 2 ** 64:
            raise InputError(f"seed must fit in 64 bits, got {self.seed}")
        if self.iterations < 0:
            raise InputError(f"iterations must be nonnegative, got {self.iterations}")
        if not 3 <= self.max_m <= IDENTITY_MAX_M:
            raise InputError(f"max-m must be between 3 and {IDENTITY_MAX_M}, got {self.max_m}")
        unknown = [name for name in self.properties if name not in REGISTRY]
        if unknown:
            raise InputError(f"unknown properties {unknown}; choose from {', '.join(REGISTRY)}")

    @classmethod
    def from_settings(cls, **overrides) -> VerifyConfig:
        values = {
            "seed": setting("VERIFY_SEED"),
            "iterations": setting("VERIFY_ITERATIONS"),
            "max_m": setting("VERIFY_MAX_M"),
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)

    def selected(self) -> list[Property]:
        names = self.properties or tuple(REGISTRY)
        return [REGISTRY[name] for name in names]


@dataclass
class Counterexample:
    index: int
    detail: str
    instance: dict


@dataclass
class PropertyOutcome:
    name: str
    module: str
    instances: int = 0
    failed: int = 0
    failures: list[Counterexample] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failed


@dataclass
class Report:
    seed: int
    iterations: int
    max_m: int
    properties: list[PropertyOutcome] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(outcome.passed for outcome in self.properties)

    @property
    def failing(self) -> list[str]:
        return [outcome.name for outcome in self.properties if not outcome.passed]


def _evaluate(prop: Property, instance: Any) -> str | None:
    try:
        return prop.check(instance)
    except Exception as exc:  # noqa: BLE001 - any crash is a counterexample
        return f"{type(exc).__name__}: {exc}"


def shrink(prop: Property, instance: Any, detail: str) -> tuple[Any, str]:
    """Greedy descent to the first local minimum that still fails."""
    if prop.shrink is None:
        return instance, detail
    steps = 0
    improved = True
    while improved:
        improved = False
        for candidate in prop.shrink(instance):
            reason = _evaluate(prop, candidate)
            if reason is not None:
                instance, detail, improved = candidate, reason, True
                steps += 1
                break
    logger.debug("shrunk %s counterexample in %d steps", prop.name, steps)
    return instance, detail


def run_property(prop: Property, config: VerifyConfig) -> PropertyOutcome:
    outcome = PropertyOutcome(prop.name, prop.module)
    max_m = min(config.max_m, ORACLE_MAX_M) if prop.oracle else config.max_m
    started = time.perf_counter()
    for index in range(config.iterations):
        instance = prop.generate(instance_rng(config.seed, prop.name, index), max_m)
        outcome.instances += 1
        detail = _evaluate(prop, instance)
        if detail is None:
            continue
        outcome.failed += 1
        if len(outcome.failures) < MAX_COUNTEREXAMPLES:
            smallest, detail = shrink(prop, instance, detail)
            outcome.failures.append(Counterexample(index, detail, prop.serialize(smallest)))
    outcome.seconds = round(time.perf_counter() - started, 3)
    if outcome.failed:
        logger.warning("property %s failed on %d of %d instances", prop.name, outcome.failed, outcome.instances)
    else:
        logger.info("property %s passed %d instances", prop.name, outcome.instances)
    return outcome


def run_suite(config: VerifyConfig) -> Report:
    report = Report(config.seed, config.iterations, config.max_m)
    if config.iterations == 0:
        return report
    for prop in config.selected():
        report.properties.append(run_property(prop, config))
    return report
