"""Global degree cap.

The cap defaults to 64 and can be overridden with the ``QSYMLAB_MAX_DEGREE``
environment variable or :func:`set_degree_cap`.
"""
from __future__ import annotations

import os

from .errors import DegreeCapError

DEFAULT_DEGREE_CAP = 64
_override: int | None = None


def degree_cap() -> int:
    if _override is not None:
        return _override
    env = os.environ.get("QSYMLAB_MAX_DEGREE")
    if env:
        return int(env)
    return DEFAULT_DEGREE_CAP


def set_degree_cap(cap: int | None) -> None:
    """Set a process-wide cap; ``None`` restores env/default behaviour."""
    global _override
    _override = None if cap is None else int(cap)


def check_degree(n: int) -> None:
    cap = degree_cap()
    if n > cap:
        raise DegreeCapError(f"degree {n} exceeds the degree cap {cap}")
