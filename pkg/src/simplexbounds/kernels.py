"""Backend selection for the rank kernels.

The compiled ``_kernels`` extension is used when it imports; setting
``SIMPLEXBOUNDS_PURE_PYTHON=1`` forces the pure-Python module.
"""

from __future__ import annotations

import os

from . import _kernels_py

_compiled = None
if os.environ.get("SIMPLEXBOUNDS_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def matrix_rank(matrix: list[list[int]], p: int = 0) -> int:
    if _compiled is not None:
        try:
            return _compiled.matrix_rank(matrix, p)
        except OverflowError:
            pass
    return _kernels_py.matrix_rank(matrix, p)


def boundary_rank(hi_faces: list[int], lo_faces: list[int], p: int = 0) -> int:
    if _compiled is not None:
        try:
            return _compiled.boundary_rank(hi_faces, lo_faces, p)
        except OverflowError:
            pass
    return _kernels_py.boundary_rank(hi_faces, lo_faces, p)
