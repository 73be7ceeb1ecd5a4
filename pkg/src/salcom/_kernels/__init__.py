"""Backend selection for the sign-vector kernels.

The compiled extension is used when it imported cleanly and the ground set
fits in 64 bits; otherwise the pure-Python module handles the call. Setting
``SALCOM_PURE_PYTHON=1`` before import forces the fallback everywhere.
"""
from __future__ import annotations

import os

from . import _pykernels

try:
    if os.environ.get("SALCOM_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-Python backend forced")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"
MAX_COMPILED_GROUND = 64


def _pick(n: int, force_python: bool = False):
    if _ckernels is not None and not force_python and n <= MAX_COMPILED_GROUND:
        return _ckernels
    return _pykernels


def fs_violation(plus, minus, n, *, force_python=False):
    return _pick(n, force_python).fs_violation(plus, minus)


def se_violation(plus, minus, n, *, force_python=False):
    return _pick(n, force_python).se_violation(plus, minus, n)


def leq_matrix(plus, minus, n, *, force_python=False):
    return _pick(n, force_python).leq_matrix(plus, minus)


def salvetti_relation(xp, xm, tp, tm, n, *, force_python=False):
    return _pick(n, force_python).salvetti_relation(xp, xm, tp, tm)
