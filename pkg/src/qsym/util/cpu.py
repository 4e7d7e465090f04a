"""Helper methods related to the CPU."""

from __future__ import annotations

import multiprocessing


def auto_detect_cpus() -> int:
    try:
        n: int | None = multiprocessing.cpu_count()
    except NotImplementedError:
        n = None
    return n or 1


def resolve_jobs(jobs: int | None) -> int:
    """:return: the worker count, ``None`` or a non-positive value means one per CPU"""
    return jobs if jobs is not None and jobs > 0 else auto_detect_cpus()


__all__ = (
    "auto_detect_cpus",
    "resolve_jobs",
)
