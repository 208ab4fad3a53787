"""Hot loops: chord state sums and lift counting.

The compiled extension ``_fast`` is used when it was built; otherwise the
pure-Python module with the same contracts is used. Set
``GAMMAZERO_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pure

BACKEND = "python"
if not os.environ.get("GAMMAZERO_PURE"):
    try:
        from . import _fast as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pure
else:
    _impl = _pure

boundary_components_all = _impl.boundary_components_all
sl_state_sum = _impl.sl_state_sum
count_lifts = _impl.count_lifts

__all__ = ["BACKEND", "boundary_components_all", "sl_state_sum", "count_lifts"]
