"""Kernel backend selection: compiled extension if available, numpy otherwise.

Set ``CREDITEQ_FORCE_NUMPY=1`` to skip the extension (used by the
benchmark and by tests that compare the two backends).
"""

from __future__ import annotations

import os

from . import np_backend

MODE_LITERAL = np_backend.MODE_LITERAL
MODE_ONE_STEP = np_backend.MODE_ONE_STEP

if os.environ.get("CREDITEQ_FORCE_NUMPY") == "1":
    _impl = np_backend
    BACKEND = "numpy"
else:
    try:
        from . import _evolve as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = np_backend
        BACKEND = "numpy"

evolve_batch = _impl.evolve_batch

__all__ = ["evolve_batch", "BACKEND", "MODE_LITERAL", "MODE_ONE_STEP", "np_backend"]
