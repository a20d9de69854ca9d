"""Backend selection for the graph kernels.

The compiled Cython backend is used when present; setting the environment
variable ``GROUPOID_SPECTRUM_PURE_PYTHON`` (to any nonempty value) forces the
pure-Python twin.  Graphs with more than 64 vertices always take the pure
path, since the compiled kernels pack one bitset row per machine word.
"""

from __future__ import annotations

import os

from . import _graphcore_py

_impl = _graphcore_py
if not os.environ.get("GROUPOID_SPECTRUM_PURE_PYTHON"):
    try:
        from . import _graphcore as _graphcore_c
    except ImportError:
        pass
    else:
        _impl = _graphcore_c

BACKEND: str = _impl.BACKEND

__all__ = ["BACKEND", "reach_masks", "simple_cycles"]


def reach_masks(n: int, arcs: list[tuple[int, int]]) -> list[int]:
    if n > 64:
        return _graphcore_py.reach_masks(n, arcs)
    return _impl.reach_masks(n, arcs)


def simple_cycles(n: int, arcs: list[tuple[int, int]]) -> list[tuple[int, ...]]:
    if n > 64:
        return _graphcore_py.simple_cycles(n, arcs)
    return _impl.simple_cycles(n, arcs)
