"""Hot-loop kernels, compiled when available.

The Cython build in ``_kernels`` is preferred; ``_kernels_py`` is the fallback.
Set ``LCPERTURB_PURE=1`` to force the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"

if os.environ.get("LCPERTURB_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
else:
    _impl = _kernels_py

axpy = _impl.axpy
mul = _impl.mul
find_reducer = _impl.find_reducer
max_field = _impl.max_field
