"""Grayscale conversion and the PSNR / SSIM image-quality metrics."""
from __future__ import annotations

import math

import numpy as np

__all__ = ["grayscale", "edge_plane", "psnr", "ssim", "gaussian_window"]

SSIM_WINDOW = 11
SSIM_SIGMA = 1.5
SSIM_K1 = 0.01
SSIM_K2 = 0.03


def grayscale(img) -> np.ndarray:
    """Luma ``0.299 R + 0.587 G + 0.114 B`` as float64, unrounded."""
    a = np.asarray(img, dtype=np.float64)
    if a.ndim != 3 or a.shape[2] != 3:
        raise ValueError(f"RGB image must have shape (M, N, 3), got {a.shape}")
    return 0.299 * a[..., 0] + 0.587 * a[..., 1] + 0.114 * a[..., 2]


def edge_plane(edges) -> np.ndarray:
    """Boolean edge map as a float plane with edges 255 and background 0."""
    return np.where(np.asarray(edges, dtype=bool), 255.0, 0.0)


def _pair(a, b) -> tuple[np.ndarray, np.ndarray]:
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    if a.ndim != 2:
        raise ValueError(f"expected 2-D planes, got {a.ndim}-D")
    return a, b


def psnr(a, b, peak: float = 255.0) -> float:
    """Peak signal-to-noise ratio in dB; ``math.inf`` for identical inputs."""
    a, b = _pair(a, b)
    mse = float(np.mean((a - b) ** 2))
    if mse == 0.0:
        return math.inf
    return 10.0 * math.log10(peak * peak / mse)


def gaussian_window(size: int = SSIM_WINDOW, sigma: float = SSIM_SIGMA) -> np.ndarray:
    """Normalized 1-D Gaussian taps."""
    x = np.arange(size) - (size - 1) / 2.0
    g = np.exp(-(x * x) / (2.0 * sigma * sigma))
    return g / g.sum()


def _filter_valid(x: np.ndarray, taps: np.ndarray) -> np.ndarray:
    # separable correlation, keeping only fully covered positions
    k = taps.size
    rows = sum(taps[t] * x[t:x.shape[0] - k + 1 + t, :] for t in range(k))
    return sum(taps[t] * rows[:, t:x.shape[1] - k + 1 + t] for t in range(k))


def ssim(a, b, data_range: float = 255.0) -> float:
    """Mean structural similarity over 11x11 Gaussian (sigma 1.5) windows.

    Uses ``C1 = (0.01 L)^2`` and ``C2 = (0.03 L)^2`` with ``L = data_range``
    and averages the SSIM map over window positions fully inside the image.
    """
    a, b = _pair(a, b)
    if a.shape[0] < SSIM_WINDOW or a.shape[1] < SSIM_WINDOW:
        raise ValueError(
            f"images must be at least {SSIM_WINDOW}x{SSIM_WINDOW}, got {a.shape}")
    c1 = (SSIM_K1 * data_range) ** 2
    c2 = (SSIM_K2 * data_range) ** 2
    w = gaussian_window()
    mu_a = _filter_valid(a, w)
    mu_b = _filter_valid(b, w)
    var_a = _filter_valid(a * a, w) - mu_a * mu_a
    var_b = _filter_valid(b * b, w) - mu_b * mu_b
    cov = _filter_valid(a * b, w) - mu_a * mu_b
    num = (2.0 * mu_a * mu_b + c1) * (2.0 * cov + c2)
    den = (mu_a * mu_a + mu_b * mu_b + c1) * (var_a + var_b + c2)
    return float(np.mean(num / den))
