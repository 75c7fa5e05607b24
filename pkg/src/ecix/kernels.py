"""Kernel backend selection.

Prefers the compiled extension (ecix._speedups) and falls back to the
pure-Python implementation when the extension is unavailable.  Set
ECIX_PURE_PYTHON=1 to force the fallback.
"""

import os

if os.environ.get("ECIX_PURE_PYTHON"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
CERT_MAX_N = _impl.CERT_MAX_N

bfs_distances = _impl.bfs_distances
is_connected_rows = _impl.is_connected_rows
all_eccentricities = _impl.all_eccentricities
canonical_key = _impl.canonical_key
