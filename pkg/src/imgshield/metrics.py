"""Perceptual similarity metrics: SSIM (with analytic gradient), MSE, PSNR.

The SSIM dissimilarity 1 - SSIM is the perception term of the protection
objective, so besides the score we expose its exact partial derivative
with respect to the second image.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._kernels import conv2d_full, corr2d_valid


@dataclass(frozen=True)
class MetricValue:
    name: str
    value: float
    higher_is_more_dissimilar: bool


@dataclass(frozen=True)
class SsimConfig:
    """Canonical SSIM configuration: 11x11 Gaussian window, sigma 1.5, k1/k2 stabilizers."""

    window_size: int = 11
    window_sigma: float = 1.5
    data_range: float = 1.0
    c1: float | None = None
    c2: float | None = None

    def stabilizers(self) -> tuple[float, float]:
        c1 = (0.01 * self.data_range) ** 2 if self.c1 is None else self.c1
        c2 = (0.03 * self.data_range) ** 2 if self.c2 is None else self.c2
        return c1, c2


def gaussian_window(size: int, sigma: float) -> np.ndarray:
    """Normalized 2-D Gaussian window (sums to 1)."""
    coords = np.arange(size, dtype=np.float64) - (size - 1) / 2.0
    g = np.exp(-(coords**2) / (2.0 * sigma**2))
    g /= g.sum()
    return np.outer(g, g)


def _check_pair(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")


def _check_window_fits(a: np.ndarray, size: int) -> None:
    if a.shape[0] < size or a.shape[1] < size:
        raise ValueError(f"image {a.shape[:2]} smaller than {size}x{size} window")


def _ssim_channel_stats(a: np.ndarray, b: np.ndarray, w: np.ndarray, c1: float, c2: float):
    """Local moments and SSIM factor maps for one channel."""
    mu_a = corr2d_valid(a, w)
    mu_b = corr2d_valid(b, w)
    var_a = corr2d_valid(a * a, w) - mu_a * mu_a
    var_b = corr2d_valid(b * b, w) - mu_b * mu_b
    cov = corr2d_valid(a * b, w) - mu_a * mu_b
    lum_num = 2.0 * mu_a * mu_b + c1
    lum_den = mu_a * mu_a + mu_b * mu_b + c1
    struct_num = 2.0 * cov + c2
    struct_den = var_a + var_b + c2
    return mu_a, mu_b, lum_num, lum_den, struct_num, struct_den


def ssim(a: np.ndarray, b: np.ndarray, cfg: SsimConfig = SsimConfig()) -> MetricValue:
    """Mean local SSIM index over all valid window positions and channels."""
    _check_pair(a, b)
    _check_window_fits(a, cfg.window_size)
    c1, c2 = cfg.stabilizers()
    w = gaussian_window(cfg.window_size, cfg.window_sigma)
    total = 0.0
    channels = a.shape[2]
    for c in range(channels):
        _, _, ln, ld, sn, sd = _ssim_channel_stats(
            np.asarray(a[:, :, c], dtype=np.float64),
            np.asarray(b[:, :, c], dtype=np.float64),
            w, c1, c2,
        )
        total += float(np.mean((ln * sn) / (ld * sd)))
    return MetricValue("ssim", total / channels, higher_is_more_dissimilar=False)


def ssimd(a: np.ndarray, b: np.ndarray, cfg: SsimConfig = SsimConfig()) -> MetricValue:
    """SSIM dissimilarity, 1 - SSIM."""
    return MetricValue("ssimd", 1.0 - ssim(a, b, cfg).value, higher_is_more_dissimilar=True)


def ssimd_gradient(a: np.ndarray, b: np.ndarray, cfg: SsimConfig = SsimConfig()) -> np.ndarray:
    """Exact gradient of ssimd(a, b) with respect to b, holding a fixed.

    Derived by differentiating the local index through the windowed raw
    moments mu_b = w*b, q_b = w*b^2, r = w*(ab); the window adjoint is a
    full convolution (the Gaussian is symmetric).
    """
    _check_pair(a, b)
    _check_window_fits(a, cfg.window_size)
    c1, c2 = cfg.stabilizers()
    w = gaussian_window(cfg.window_size, cfg.window_sigma)
    channels = a.shape[2]
    grad = np.empty_like(np.asarray(b, dtype=np.float64))
    n_pos = (a.shape[0] - cfg.window_size + 1) * (a.shape[1] - cfg.window_size + 1)
    scale = 1.0 / (n_pos * channels)
    for c in range(channels):
        ac = np.asarray(a[:, :, c], dtype=np.float64)
        bc = np.asarray(b[:, :, c], dtype=np.float64)
        mu_a, mu_b, ln, ld, sn, sd = _ssim_channel_stats(ac, bc, w, c1, c2)
        s_map = (ln * sn) / (ld * sd)
        d_ln = sn / (ld * sd)
        d_ld = -s_map / ld
        d_sn = ln / (ld * sd)
        d_sd = -s_map / sd
        # raw-moment partials: A2 = 2(r - mu_a mu_b) + c2, B2 = v_a + q_b - mu_b^2 + c2
        g_mu = 2.0 * mu_a * d_ln + 2.0 * mu_b * d_ld - 2.0 * mu_a * d_sn - 2.0 * mu_b * d_sd
        g_q = d_sd
        g_r = 2.0 * d_sn
        grad[:, :, c] = scale * (
            conv2d_full(g_mu, w)
            + conv2d_full(g_q, w) * (2.0 * bc)
            + conv2d_full(g_r, w) * ac
        )
    # gradient of the dissimilarity flips the sign of the similarity gradient
    return -grad


def mse(a: np.ndarray, b: np.ndarray) -> MetricValue:
    """Mean squared elementwise difference."""
    _check_pair(a, b)
    value = float(np.mean((np.asarray(a, dtype=np.float64) - np.asarray(b, dtype=np.float64)) ** 2))
    return MetricValue("mse", value, higher_is_more_dissimilar=True)


def psnr(a: np.ndarray, b: np.ndarray) -> MetricValue:
    """Peak signal-to-noise ratio in dB; infinite for identical inputs."""
    err = mse(a, b).value
    value = math.inf if err == 0.0 else -10.0 * math.log10(err)
    return MetricValue("psnr", value, higher_is_more_dissimilar=False)
