"""Dimensions of spaces of level-1 cusp forms."""

from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=None)
def dim_cusp_forms(k: int) -> int:
    """Number of normalized level-1 cuspidal eigenforms of weight ``k``.

    Zero for odd ``k``, for ``k <= 2`` and (so that integer shifts compose
    cleanly) for negative ``k``.
    """
    if k <= 2 or k % 2:
        return 0
    if k % 12 == 2:
        return k // 12 - 1
    return k // 12
