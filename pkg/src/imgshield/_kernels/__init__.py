"""Backend selection for the 2-D correlation kernels.

Prefers the compiled Cython extension when it imported cleanly; falls back
to the numpy implementation otherwise. Set ``IMGSHIELD_KERNELS=fallback``
to force the numpy path (or ``=native`` to require the extension).
"""

import os

from . import _fallback

_choice = os.environ.get("IMGSHIELD_KERNELS", "auto")

if _choice == "fallback":
    _impl = _fallback
else:
    try:
        from . import _native as _impl  # type: ignore[no-redef]
    except ImportError:
        if _choice == "native":
            raise
        _impl = _fallback

corr2d_valid = _impl.corr2d_valid
conv2d_full = _impl.conv2d_full
corr2d_same = _impl.corr2d_same


def backend() -> str:
    """Name of the active kernel backend: 'native' or 'fallback'."""
    return _impl.BACKEND
