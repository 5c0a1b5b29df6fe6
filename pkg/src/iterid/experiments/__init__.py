"""Named, parameterized reproductions with pass/fail reports."""

from __future__ import annotations

import copy
import time

from .catalog import CATALOG, Experiment
from .corpus import nontrivial_words, random_word, zero_sum_word
from .report import SCHEMA_VERSION, ExperimentReport


class ExperimentError(ValueError):
    """Unknown experiment name or invalid parameters."""


def list_experiments() -> list[tuple[str, str]]:
    """``(name, summary)`` for every catalog entry, sorted by name."""
    return [(name, CATALOG[name].summary) for name in sorted(CATALOG)]


def resolve_params(name: str, params: dict | None = None) -> dict:
    if name not in CATALOG:
        raise ExperimentError(f"unknown experiment {name!r}; known: {', '.join(sorted(CATALOG))}")
    exp = CATALOG[name]
    merged = copy.deepcopy(exp.defaults)
    for key, value in (params or {}).items():
        if key not in merged:
            allowed = ", ".join(sorted(merged)) or "none"
            raise ExperimentError(f"{name}: unknown parameter {key!r} (allowed: {allowed})")
        default = merged[key]
        if isinstance(default, bool) or not isinstance(value, type(default)):
            if not (isinstance(default, int) and isinstance(value, int)
                    and not isinstance(value, bool)):
                raise ExperimentError(f"{name}: parameter {key!r} must be "
                                      f"{type(default).__name__}, got {value!r}")
        if isinstance(default, int) and value < 0:
            raise ExperimentError(f"{name}: parameter {key!r} must be non-negative")
        merged[key] = value
    return merged


def run_experiment(name: str, params: dict | None = None, seed: int = 0, workers: int = 1,
                   timing: bool = False) -> ExperimentReport:
    """Run one catalog experiment.

    Parameters
    ----------
    name : str
        Catalog name, see :func:`list_experiments`.
    params : dict, optional
        Overrides for the experiment's defaults; unknown keys are rejected.
    seed : int
        Seed for every sampled quantity; reports are reproducible from
        ``(name, params, seed)``.
    workers : int
        Process count for exhaustive and sampled searches. Never changes the result.
    timing : bool
        Record wall-clock ``duration_ms``; left ``None`` otherwise so that
        reports stay byte-identical across runs.
    """
    merged = resolve_params(name, params)
    start = time.perf_counter()
    try:
        passed, evidence = CATALOG[name].func(merged, seed, workers)
    except ValueError as exc:
        if isinstance(exc, ExperimentError):
            raise
        raise ExperimentError(f"{name}: {exc}") from exc
    duration = round((time.perf_counter() - start) * 1000) if timing else None
    return ExperimentReport(name, merged, seed, bool(passed), evidence, duration)


__all__ = ["CATALOG", "Experiment", "ExperimentError", "ExperimentReport", "SCHEMA_VERSION",
           "list_experiments", "nontrivial_words", "random_word", "resolve_params",
           "run_experiment", "zero_sum_word"]
