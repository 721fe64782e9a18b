"""Backend selection for the hot kernels.

The compiled extension ``cesaro_lab._ckern`` is preferred when it imported
cleanly; otherwise the numpy/scipy reference backend is used. Setting the
environment variable ``CESARO_LAB_FORCE_PYTHON=1`` before import forces the
reference backend (used by the benchmark and the backend-parity tests).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("CESARO_LAB_FORCE_PYTHON"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _ckern as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

cesaro_apply = _impl.cesaro_apply
resolvent_apply = _impl.resolvent_apply
convolve_prefix = _impl.convolve_prefix
suffix_abs_max = _impl.suffix_abs_max
eigenvector_fill = _impl.eigenvector_fill
