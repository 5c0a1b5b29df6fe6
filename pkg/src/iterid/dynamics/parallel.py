"""Deterministic fan-out of independent work chunks."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence


def _call(job):
    fn, args = job
    return fn(*args)


def split_range(n: int, workers: int) -> list[range]:
    """Split ``range(n)`` into contiguous pieces; order is preserved."""
    pieces = max(1, min(n, max(1, workers) * 4))
    size = -(-n // pieces) if n else 0
    return [range(i, min(i + size, n)) for i in range(0, n, size)] if n else []


def run_chunks(fn: Callable, arg_list: Sequence[tuple], workers: int = 1) -> list:
    """Apply ``fn`` to each argument tuple; results come back in input order."""
    jobs = [(fn, args) for args in arg_list]
    if workers <= 1 or len(jobs) <= 1:
        return [_call(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_call, jobs))
