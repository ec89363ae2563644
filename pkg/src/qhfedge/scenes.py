"""Deterministic synthetic colour scenes for tests and demos."""
from __future__ import annotations

import numpy as np

__all__ = ["step_image", "house_scene", "shapes_scene"]


def step_image(height: int = 32, width: int = 32, column: int | None = None,
               left=(0, 0, 0), right=(255, 255, 255)) -> np.ndarray:
    """Two-tone image: ``left`` colour before ``column``, ``right`` from it on."""
    column = width // 2 if column is None else column
    img = np.empty((height, width, 3), dtype=np.uint8)
    img[:, :column] = left
    img[:, column:] = right
    return img


def _fill(img, mask, colour):
    img[mask] = colour


def house_scene(size: int = 128) -> np.ndarray:
    """A house under a graded sky: flat-coloured polygons plus one smooth ramp."""
    r, c = np.mgrid[0:size, 0:size] / size
    img = np.empty((size, size, 3), dtype=np.float64)
    # sky: vertical blue ramp
    img[..., 0] = 90 + 60 * r
    img[..., 1] = 150 + 50 * r
    img[..., 2] = 235 - 20 * r
    _fill(img, r > 0.78, (70, 140, 60))                                   # lawn
    _fill(img, (r > 0.45) & (r <= 0.8) & (c > 0.2) & (c < 0.75), (205, 180, 140))  # walls
    roof = (r > 0.22) & (r <= 0.45) & (np.abs(c - 0.475) < (r - 0.22) * 1.4)
    _fill(img, roof, (150, 40, 35))
    _fill(img, (r > 0.3) & (r <= 0.4) & (c > 0.62) & (c < 0.68), (90, 80, 80))  # chimney
    _fill(img, (r > 0.62) & (r <= 0.8) & (c > 0.42) & (c < 0.53), (100, 60, 30))  # door
    for c0 in (0.27, 0.6):
        _fill(img, (r > 0.52) & (r <= 0.64) & (c > c0) & (c < c0 + 0.09), (60, 90, 160))
    sun = (r - 0.12) ** 2 + (c - 0.85) ** 2 < 0.07 ** 2
    _fill(img, sun, (250, 220, 60))
    return np.round(img).astype(np.uint8)


def shapes_scene(size: int = 128) -> np.ndarray:
    """Overlapping discs, bars and a ring on a two-way colour gradient."""
    r, c = np.mgrid[0:size, 0:size] / size
    img = np.empty((size, size, 3), dtype=np.float64)
    img[..., 0] = 60 + 80 * c
    img[..., 1] = 70 + 40 * r
    img[..., 2] = 110 + 30 * (1 - c)
    _fill(img, (r - 0.3) ** 2 + (c - 0.3) ** 2 < 0.18 ** 2, (220, 60, 50))
    _fill(img, (r - 0.62) ** 2 + (c - 0.68) ** 2 < 0.22 ** 2, (40, 170, 90))
    _fill(img, (r > 0.15) & (r < 0.25) & (c > 0.55) & (c < 0.95), (240, 220, 80))
    _fill(img, (c > 0.1) & (c < 0.18) & (r > 0.55) & (r < 0.95), (60, 60, 200))
    d = np.sqrt((r - 0.62) ** 2 + (c - 0.68) ** 2)
    _fill(img, (d > 0.08) & (d < 0.12), (250, 250, 250))
    _fill(img, (r > 0.4) & (r < 0.52) & (c > 0.2) & (c < 0.45) & (r - 0.4 < (c - 0.2) * 0.5),
          (180, 90, 200))
    return np.round(img).astype(np.uint8)
