"""Kernel backend selection.

The compiled extension is used when it was built; set ``HYPERFORM_PURE=1``
to force the pure-Python implementations.
"""

import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("HYPERFORM_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]
    except ImportError:
        pass
    else:
        _impl = _compiled
        BACKEND = "cython"

phi_grad_hess = _impl.phi_grad_hess
box_scan = _impl.box_scan

__all__ = ["BACKEND", "phi_grad_hess", "box_scan"]
