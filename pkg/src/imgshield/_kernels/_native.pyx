# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled 2-D correlation kernels (hot path of the optimization loop)."""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "native"


def corr2d_valid(x, k):
    """Valid-mode cross-correlation: out[i,j] = sum_uv k[u,v] * x[i+u, j+v]."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2] xa = np.ascontiguousarray(x, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] ka = np.ascontiguousarray(k, dtype=np.float64)
    cdef Py_ssize_t hx = xa.shape[0], wx = xa.shape[1]
    cdef Py_ssize_t hk = ka.shape[0], wk = ka.shape[1]
    if hx < hk or wx < wk:
        raise ValueError(f"kernel ({hk}, {wk}) larger than input ({hx}, {wx})")
    cdef Py_ssize_t ho = hx - hk + 1, wo = wx - wk + 1
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.empty((ho, wo), dtype=np.float64)
    cdef Py_ssize_t i, j, u, v
    cdef double acc
    for i in range(ho):
        for j in range(wo):
            acc = 0.0
            for u in range(hk):
                for v in range(wk):
                    acc += ka[u, v] * xa[i + u, j + v]
            out[i, j] = acc
    return out


def conv2d_full(x, k):
    """Full-mode convolution: out[j] = sum_i x[i] * k[j-i]; adjoint of corr2d_valid."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2] xa = np.ascontiguousarray(x, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] ka = np.ascontiguousarray(k, dtype=np.float64)
    cdef Py_ssize_t hx = xa.shape[0], wx = xa.shape[1]
    cdef Py_ssize_t hk = ka.shape[0], wk = ka.shape[1]
    cdef Py_ssize_t ho = hx + hk - 1, wo = wx + wk - 1
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.zeros((ho, wo), dtype=np.float64)
    cdef Py_ssize_t i, j, u, v, iu, jv
    cdef double acc
    for i in range(ho):
        for j in range(wo):
            acc = 0.0
            for u in range(hk):
                iu = i - u
                if iu < 0 or iu >= hx:
                    continue
                for v in range(wk):
                    jv = j - v
                    if 0 <= jv < wx:
                        acc += xa[iu, jv] * ka[u, v]
            out[i, j] = acc
    return out


def corr2d_same(x, k, reflect=False):
    """Same-size cross-correlation with an odd kernel; zero or reflect padding."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2] xa = np.ascontiguousarray(x, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] ka = np.ascontiguousarray(k, dtype=np.float64)
    cdef Py_ssize_t hk = ka.shape[0], wk = ka.shape[1]
    if hk % 2 == 0 or wk % 2 == 0:
        raise ValueError(f"same-mode correlation needs odd kernel sides, got ({hk}, {wk})")
    cdef Py_ssize_t ph = hk // 2, pw = wk // 2
    mode = "reflect" if reflect else "constant"
    cdef cnp.ndarray[cnp.float64_t, ndim=2] padded = np.ascontiguousarray(
        np.pad(xa, ((ph, ph), (pw, pw)), mode=mode)
    )
    cdef Py_ssize_t ho = xa.shape[0], wo = xa.shape[1]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.empty((ho, wo), dtype=np.float64)
    cdef Py_ssize_t i, j, u, v
    cdef double acc
    for i in range(ho):
        for j in range(wo):
            acc = 0.0
            for u in range(hk):
                for v in range(wk):
                    acc += ka[u, v] * padded[i + u, j + v]
            out[i, j] = acc
    return out
