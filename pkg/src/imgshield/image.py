"""Image representation, 8-bit PNG I/O, and the L-inf projection primitive.

Images are float64 numpy arrays of shape (H, W, C) with C in {1, 3} and
values in [0, 1]. Noise arrays share the image shape. Budgets are kept on
the 1/255 grid so that 8-bit storage can never violate them.
"""

from __future__ import annotations

import numpy as np
from PIL import Image as PILImage


class ImageFormatError(ValueError):
    """Raised for rasters this toolkit does not handle (bit depth, mode, alpha)."""


def check_image(img: np.ndarray) -> np.ndarray:
    """Validate the (H, W, C) float convention; returns the array unchanged."""
    img = np.asarray(img)
    if img.ndim != 3 or img.shape[2] not in (1, 3):
        raise ValueError(f"expected (H, W, C) with C in {{1, 3}}, got shape {img.shape}")
    if not np.all(np.isfinite(img)):
        raise ValueError("image contains non-finite values")
    if img.min() < 0.0 or img.max() > 1.0:
        raise ValueError(f"image values outside [0, 1]: [{img.min()}, {img.max()}]")
    return img


def quantize_u8(img: np.ndarray) -> np.ndarray:
    """Map [0, 1] floats to bytes by round-half-up: byte = floor(255 v + 0.5)."""
    return np.floor(np.asarray(img, dtype=np.float64) * 255.0 + 0.5).astype(np.uint8)


def from_u8(raw: np.ndarray) -> np.ndarray:
    """Map bytes back to [0, 1] floats by division by 255."""
    return np.asarray(raw, dtype=np.float64) / 255.0


def load_png(path: str) -> np.ndarray:
    """Load an 8-bit grayscale or RGB PNG as an (H, W, C) array in [0, 1]."""
    try:
        with PILImage.open(path) as handle:
            handle.load()
            mode = handle.mode
            if mode not in ("L", "RGB"):
                raise ImageFormatError(f"unsupported PNG mode {mode!r} (need 8-bit L or RGB)")
            raw = np.asarray(handle, dtype=np.uint8)
    except ImageFormatError:
        raise
    except (OSError, SyntaxError) as exc:
        raise OSError(f"cannot read PNG {path!r}: {exc}") from exc
    if raw.ndim == 2:
        raw = raw[:, :, None]
    return from_u8(raw)


def save_png(img: np.ndarray, path: str) -> None:
    """Quantize to 8 bits (round-half-up) and write a grayscale or RGB PNG."""
    check_image(img)
    raw = quantize_u8(img)
    if raw.shape[2] == 1:
        pil = PILImage.fromarray(raw[:, :, 0], mode="L")
    else:
        pil = PILImage.fromarray(raw, mode="RGB")
    pil.save(path, format="PNG")


def promote_rgb(img: np.ndarray) -> np.ndarray:
    """Replicate a single channel to 3; RGB images pass through unchanged."""
    if img.shape[2] == 3:
        return img
    return np.repeat(img, 3, axis=2)


def luminance(img: np.ndarray) -> np.ndarray:
    """ITU-R 601 luma as an (H, W) array; grayscale images squeeze through."""
    if img.shape[2] == 1:
        return np.asarray(img[:, :, 0], dtype=np.float64)
    weights = np.array([0.299, 0.587, 0.114])
    return np.asarray(img, dtype=np.float64) @ weights


def linf_project(noise: np.ndarray, epsilon: float, anchor: np.ndarray) -> np.ndarray:
    """Clamp noise into the L-inf ball of radius epsilon, keeping anchor+noise in [0, 1].

    Idempotent; the range clamp can only shrink elements further.
    """
    if epsilon < 0:
        raise ValueError(f"epsilon must be non-negative, got {epsilon}")
    noise = np.asarray(noise, dtype=np.float64)
    anchor = np.asarray(anchor, dtype=np.float64)
    if noise.shape != anchor.shape:
        raise ValueError(f"noise shape {noise.shape} != anchor shape {anchor.shape}")
    clipped = np.clip(noise, -epsilon, epsilon)
    return np.clip(clipped, -anchor, 1.0 - anchor)
