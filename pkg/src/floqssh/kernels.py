"""Backend selection for the hot momentum-sweep kernels.

The compiled extension is preferred when importable; otherwise the
vectorized NumPy implementation is used.  Set FLOQSSH_PURE_PYTHON=1 to
force the fallback (the benchmark and the backend-equivalence test use
this).  Both backends implement the same closed-form math and agree to
machine precision.
"""

from __future__ import annotations

import os

if os.environ.get("FLOQSSH_PURE_PYTHON", "") not in ("", "0"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND: str = _impl.BACKEND

drive_unitaries = _impl.drive_unitaries
drive_det_shift = _impl.drive_det_shift
