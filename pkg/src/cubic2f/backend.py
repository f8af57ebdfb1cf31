"""Kernel backend selection.

The hot inner loops in :mod:`cubic2f.kernels` are written once, in
numba-compilable numpy style.  By default they are JIT-compiled; setting
the environment variable ``CUBIC2F_NO_NUMBA=1`` (or if numba is not
installed) runs the same source uncompiled as a pure-Python/numpy
fallback.  Results are bit-identical between backends, only speed differs.
"""

from __future__ import annotations

import os

_DISABLED = os.environ.get("CUBIC2F_NO_NUMBA", "").strip() not in ("", "0")

if not _DISABLED:
    try:
        from numba import njit as _njit
    except ImportError:  # pragma: no cover
        _njit = None
else:
    _njit = None

USING_NUMBA = _njit is not None


def jit(func=None, **kwargs):
    """``numba.njit`` when enabled, identity decorator otherwise."""
    if _njit is None:
        if func is not None:
            return func
        return lambda f: f
    kwargs.setdefault("cache", True)
    if func is not None:
        return _njit(**kwargs)(func)
    return lambda f: _njit(**kwargs)(f)


def backend_name() -> str:
    return "numba" if USING_NUMBA else "python"
