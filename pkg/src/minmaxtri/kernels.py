"""Kernel backend selection.

Prefers the compiled extension, falls back to the pure-Python implementation.
Set MINMAXTRI_PURE_PYTHON=1 to force the fallback (used by the benchmark and
the backend-parity tests).  Both backends return identical orientation signs
by construction; angle values agree to the last bit because the formulas and
the underlying libm are the same.
"""

import os

if os.environ.get("MINMAXTRI_PURE_PYTHON"):
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "c"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "python"

orient2d = _impl.orient2d
on_open_segment = _impl.on_open_segment
segments_cross = _impl.segments_cross
strictly_inside_triangle = _impl.strictly_inside_triangle
triangle_angles = _impl.triangle_angles
triangle_max_angle = _impl.triangle_max_angle
