"""Kernel backend selection.

The compiled Cython module is preferred when importable; otherwise the
pure-Python module (identical semantics) is used.  Set QUADCA_PURE_PYTHON=1
to force the fallback, e.g. for benchmarking.
"""

from __future__ import annotations

import os

from . import _kernels_py as _pure

try:
    from . import _kernels_c as _compiled
except ImportError:  # extension not built
    _compiled = None

if os.environ.get("QUADCA_PURE_PYTHON"):
    _active = _pure
else:
    _active = _compiled if _compiled is not None else _pure

BACKEND = "compiled" if _active is not _pure else "pure"

face_gradients = _active.face_gradients
laplacian_ratio = _active.laplacian_ratio
pack_sweep = _active.pack_sweep
pack_residuals = _active.pack_residuals


def get_backend(name: str):
    """Return a specific backend module ('pure' or 'compiled')."""
    if name == "pure":
        return _pure
    if name == "compiled":
        if _compiled is None:
            raise ImportError("compiled kernels are not available")
        return _compiled
    raise ValueError(f"unknown backend {name!r}")


def available_backends():
    return ["pure", "compiled"] if _compiled is not None else ["pure"]
