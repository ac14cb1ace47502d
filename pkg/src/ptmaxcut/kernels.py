"""Backend selection for the hot kernels.

The compiled Cython module is used when it was built; otherwise the
pure-Python twin in ``_pykernels`` takes over. Setting ``PTMAXCUT_PURE=1``
forces the fallback, which the benchmark and the kernel tests use to compare
the two.
"""

import os

from . import _pykernels as python_backend

try:
    from . import _ckernels as compiled_backend
except ImportError:  # extension not built
    compiled_backend = None

if compiled_backend is not None and os.environ.get("PTMAXCUT_PURE", "") not in ("1", "true"):
    _impl = compiled_backend
    BACKEND = "cython"
else:
    _impl = python_backend
    BACKEND = "python"

biconnected = _impl.biconnected
reach_count = _impl.reach_count
reach = _impl.reach
component_labels = _impl.component_labels
kruskal = _impl.kruskal
gray_maxcut = _impl.gray_maxcut
ucf_scan = _impl.ucf_scan

__all__ = [
    "BACKEND",
    "biconnected",
    "reach_count",
    "reach",
    "component_labels",
    "kruskal",
    "gray_maxcut",
    "ucf_scan",
    "python_backend",
    "compiled_backend",
]
