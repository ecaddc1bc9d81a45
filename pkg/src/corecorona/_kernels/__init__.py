"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``CORECORONA_FORCE_PURE=1`` to skip the compiled backend (used by the
benchmark and the backend-equivalence tests).  The compiled kernels cover
n <= 64; wider graphs are routed to the pure twin per call.
"""

from __future__ import annotations

import os
from typing import Sequence

from corecorona._kernels import pure as _pure

_compiled = None
if not os.environ.get("CORECORONA_FORCE_PURE"):
    try:
        from corecorona._kernels import _bitkernels as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "pure"

_COMPILED_MAX_N = 64


def backend_name() -> str:
    return BACKEND


def has_compiled() -> bool:
    return _compiled is not None


def _pick(n: int):
    if _compiled is not None and n <= _COMPILED_MAX_N:
        return _compiled
    return _pure


def independence_number(adj: Sequence[int], universe: int) -> int:
    return _pick(len(adj)).independence_number(adj, universe)


def maximum_independent_sets(
    adj: Sequence[int], universe: int, size: int, cap: int
) -> tuple[list[int], bool]:
    return _pick(len(adj)).maximum_independent_sets(adj, universe, size, cap)


def maximal_independent_sets(
    adj: Sequence[int], universe: int, cap: int
) -> tuple[list[int], bool]:
    return _pick(len(adj)).maximal_independent_sets(adj, universe, cap)


def matching_number(adj: Sequence[int]) -> int:
    return _pick(len(adj)).matching_number(adj)
