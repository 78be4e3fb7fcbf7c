"""Backend selection for the hot search kernels.

Tries the compiled extension first and falls back to the pure-Python
implementations; the compiled kernels only handle universes of at most 64
vertices, so larger inputs are routed to Python regardless of backend.
Set NOETHERLAB_PURE=1 to force the pure backend.
"""

from __future__ import annotations

import os
from typing import Optional, Sequence

from . import _kernels_py

_speedups = None
if os.environ.get("NOETHERLAB_PURE") != "1":
    try:
        from . import _speedups  # type: ignore[attr-defined]
    except ImportError:
        _speedups = None

_C_LIMIT = 64


def backend_name() -> str:
    return "compiled" if _speedups is not None else "python"


def _use_compiled(n: int) -> bool:
    return _speedups is not None and n <= _C_LIMIT


def find_clique(adj: Sequence[int], m: int) -> Optional[tuple[int, ...]]:
    if _use_compiled(len(adj)):
        return _speedups.find_clique(list(adj), m)
    return _kernels_py.find_clique(adj, m)


def chromatic_number(adj: Sequence[int]) -> tuple[int, list[int]]:
    if _use_compiled(len(adj)):
        return _speedups.chromatic_number(list(adj))
    return _kernels_py.chromatic_number(adj)


def min_subfamily(masks: Sequence[int], full: int) -> tuple[int, ...]:
    if _use_compiled(max(len(masks), full.bit_length())):
        return _speedups.min_subfamily(list(masks), full)
    return _kernels_py.min_subfamily(masks, full)
