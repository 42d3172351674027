"""Kernel backend selection.

The compiled extension (``_kernels_cy``) is preferred when importable; the
pure-Python module is the reference and the fallback.  Set
``BESSELSUM_BACKEND=py`` or ``=cy`` to force a choice (``cy`` raises if the
extension is missing).  Both backends implement the same functions with the
same operation order, so results are bit-identical either way.
"""
from __future__ import annotations

import os

from . import _kernels_py

_choice = os.environ.get("BESSELSUM_BACKEND", "auto").lower()

if _choice == "py":
    kernels = _kernels_py
elif _choice == "cy":
    from . import _kernels_cy as kernels  # type: ignore[no-redef]
elif _choice == "auto":
    try:
        from . import _kernels_cy as kernels  # type: ignore[no-redef]
    except ImportError:
        kernels = _kernels_py
else:
    raise ValueError(f"unknown BESSELSUM_BACKEND: {_choice!r}")

BACKEND = kernels.BACKEND_NAME


def get_kernels(name: str | None = None):
    """Return a kernel module by name ('python', 'cython' or None=active)."""
    if name is None:
        return kernels
    if name == "python":
        return _kernels_py
    if name == "cython":
        from . import _kernels_cy
        return _kernels_cy
    raise ValueError(f"unknown backend name: {name!r}")
