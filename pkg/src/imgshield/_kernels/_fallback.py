"""Pure-numpy implementations of the 2-D correlation kernels.

Used when the compiled extension is unavailable or explicitly disabled.
Shapes and semantics are identical to ``_native``; floating-point results
may differ from the compiled path at rounding level because summation
order differs.
"""

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

BACKEND = "fallback"


def corr2d_valid(x: np.ndarray, k: np.ndarray) -> np.ndarray:
    """Valid-mode cross-correlation: out[i,j] = sum_uv k[u,v] * x[i+u, j+v]."""
    x = np.ascontiguousarray(x, dtype=np.float64)
    k = np.ascontiguousarray(k, dtype=np.float64)
    if x.shape[0] < k.shape[0] or x.shape[1] < k.shape[1]:
        raise ValueError(f"kernel {k.shape} larger than input {x.shape}")
    windows = sliding_window_view(x, k.shape)
    return np.einsum("ijuv,uv->ij", windows, k, optimize=True)


def conv2d_full(x: np.ndarray, k: np.ndarray) -> np.ndarray:
    """Full-mode convolution: out[j] = sum_i x[i] * k[j-i]; adjoint of corr2d_valid."""
    x = np.asarray(x, dtype=np.float64)
    k = np.asarray(k, dtype=np.float64)
    ph, pw = k.shape[0] - 1, k.shape[1] - 1
    padded = np.pad(x, ((ph, ph), (pw, pw)))
    return corr2d_valid(padded, k[::-1, ::-1])


def corr2d_same(x: np.ndarray, k: np.ndarray, reflect: bool = False) -> np.ndarray:
    """Same-size cross-correlation with an odd kernel; zero or reflect padding."""
    if k.shape[0] % 2 == 0 or k.shape[1] % 2 == 0:
        raise ValueError(f"same-mode correlation needs odd kernel sides, got {k.shape}")
    ph, pw = k.shape[0] // 2, k.shape[1] // 2
    mode = "reflect" if reflect else "constant"
    padded = np.pad(np.asarray(x, dtype=np.float64), ((ph, ph), (pw, pw)), mode=mode)
    return corr2d_valid(padded, k)
