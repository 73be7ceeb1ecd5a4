"""Pure-Python sign-vector kernels.

Every function takes covectors as parallel sequences of ``plus``/``minus``
bitmasks (Python ints, so any ground-set size works). The compiled module
``_ckernels`` exposes the same functions for ground sets of at most 64
elements.
"""
from __future__ import annotations

from typing import Optional, Sequence

import numpy as np


def fs_violation(plus: Sequence[int], minus: Sequence[int]) -> Optional[tuple[int, int]]:
    """First (i, j) in index order with X_i o (-X_j) missing from the set."""
    members = set(zip(plus, minus))
    m = len(plus)
    for i in range(m):
        xp, xm = plus[i], minus[i]
        free = ~(xp | xm)
        for j in range(m):
            # -Y swaps the masks
            if (xp | (minus[j] & free), xm | (plus[j] & free)) not in members:
                return i, j
    return None


def se_violation(
    plus: Sequence[int], minus: Sequence[int], n: int
) -> Optional[tuple[int, int, int]]:
    """Strong-elimination failure with the widest separator, then lowest (i, j, e).

    For a pair (X, Y) with separator S the pair passes iff every e in S is a
    zero of some Z that agrees with X o Y off S.
    """
    full = (1 << n) - 1
    m = len(plus)
    best: Optional[tuple[int, int, int]] = None
    best_width = 0
    for i in range(m):
        xp, xm = plus[i], minus[i]
        for j in range(m):
            yp, ym = plus[j], minus[j]
            sep = (xp & ym) | (xm & yp)
            if not sep:
                continue
            width = sep.bit_count()
            if width <= best_width:
                continue
            keep = full & ~sep
            free = ~(xp | xm)
            wp = (xp | (yp & free)) & keep
            wm = (xm | (ym & free)) & keep
            zero_cover = 0
            for k in range(m):
                zp, zm = plus[k], minus[k]
                if (zp & keep) == wp and (zm & keep) == wm:
                    zero_cover |= ~(zp | zm)
                    if sep & ~zero_cover == 0:
                        break
            missing = sep & ~zero_cover
            if missing:
                e = (missing & -missing).bit_length() - 1
                best = (i, j, e)
                best_width = width
                if width == n:
                    return best
    return best


def leq_matrix(plus: Sequence[int], minus: Sequence[int]) -> np.ndarray:
    m = len(plus)
    out = np.zeros((m, m), dtype=bool)
    for i in range(m):
        xp, xm = plus[i], minus[i]
        row = out[i]
        for j in range(m):
            if xp & ~plus[j] == 0 and xm & ~minus[j] == 0:
                row[j] = True
    return out


def salvetti_relation(
    xp: Sequence[int], xm: Sequence[int], tp: Sequence[int], tm: Sequence[int]
) -> np.ndarray:
    """rel[i, j] iff X_i <= X_j and X_j o T_i == T_j."""
    m = len(xp)
    out = np.zeros((m, m), dtype=bool)
    for i in range(m):
        ap, am, sp, sm = xp[i], xm[i], tp[i], tm[i]
        row = out[i]
        for j in range(m):
            bp, bm = xp[j], xm[j]
            if ap & ~bp or am & ~bm:
                continue
            free = ~(bp | bm)
            if (bp | (sp & free)) == tp[j] and (bm | (sm & free)) == tm[j]:
                row[j] = True
    return out
