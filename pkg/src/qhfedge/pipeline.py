"""Colour edge detection: RGB -> QHF -> IDZ gradient -> NMS -> threshold.

Images are ``(M, N, 3)`` arrays of 8-bit intensities; edge maps are boolean
``(M, N)`` arrays.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .gradient import GradientField, gradient_field
from .hardy import HardyParams, qhf_filter

__all__ = [
    "DETECTORS",
    "DetectParams",
    "as_rgb_image",
    "rgb_to_quaternion",
    "vector_part",
    "filter_quaternion_image",
    "quantize_direction",
    "nonmax_suppress",
    "threshold_edges",
    "edge_strength",
    "detect_edges",
]

DETECTORS = ("qhf", "idz_raw")
BOUNDARIES = ("symmetric", "periodic")

# Suppressed magnitudes at or below this are treated as zero, so that
# rounding residue on flat images never becomes an edge.
MAGNITUDE_FLOOR = 1e-12


@dataclass(frozen=True)
class DetectParams:
    hardy: HardyParams = field(default_factory=HardyParams)
    threshold_fraction: float = 0.1
    normalize: bool = True
    # "symmetric" filters the mirror-extended 2M x 2N image so the DQFT's
    # implicit periodic wrap joins continuous intensities; "periodic"
    # transforms the image as is.
    boundary: str = "symmetric"

    def __post_init__(self):
        t = float(self.threshold_fraction)
        if not 0.0 <= t <= 1.0:
            raise ValueError(f"threshold_fraction must lie in [0, 1], got {t}")
        if self.boundary not in BOUNDARIES:
            raise ValueError(f"boundary must be one of {BOUNDARIES}, got {self.boundary!r}")
        object.__setattr__(self, "threshold_fraction", t)


def as_rgb_image(img) -> np.ndarray:
    """Validate an RGB image and return it as float64 in ``[0, 255]``."""
    a = np.asarray(img)
    if a.ndim != 3 or a.shape[2] != 3:
        raise ValueError(f"RGB image must have shape (M, N, 3), got {a.shape}")
    a = a.astype(np.float64, copy=False)
    if a.size and (a.min() < 0.0 or a.max() > 255.0):
        raise ValueError("RGB intensities must lie in [0, 255]")
    return a


def rgb_to_quaternion(img, normalize: bool = True) -> np.ndarray:
    """Encode each pixel as the pure quaternion ``r i + g j + b k``."""
    rgb = as_rgb_image(img)
    if normalize:
        rgb = rgb / 255.0
    q = np.zeros(rgb.shape[:2] + (4,))
    q[..., 1:] = rgb
    return q


def vector_part(q) -> np.ndarray:
    """The ``(i, j, k)`` coefficients of a quaternion image, shape ``(M, N, 3)``."""
    return np.asarray(q, dtype=np.float64)[..., 1:].copy()


# quantized direction -> (row, column) neighbour offset along the gradient
_OFFSETS = {0: (1, 0), 45: (1, 1), 90: (0, 1), 135: (-1, 1)}

# Neighbour differences within this fraction of the largest magnitude count
# as ties, so FFT rounding cannot decide which pixel of a ridge survives.
TIE_RTOL = 1e-9


def quantize_direction(direction) -> np.ndarray:
    """Map angles (radians) to the nearest of 0, 45, 90, 135 degrees."""
    deg = np.degrees(np.nan_to_num(np.asarray(direction, dtype=np.float64))) % 180.0
    return (np.floor((deg + 22.5) / 45.0).astype(int) % 4) * 45


def nonmax_suppress(mag, direction, tie_rtol: float = TIE_RTOL) -> np.ndarray:
    """Zero every pixel that is not a local maximum along its gradient.

    ``direction`` holds angles in radians measured from the row axis toward
    the column axis, NaN where undefined. Angles are quantized to 0, 45, 90
    or 135 degrees and each pixel is compared with its forward neighbour
    (the offset in ``_OFFSETS``) and backward neighbour along that line.

    A pixel survives when it is ``>=`` both neighbours, with one exception:
    a pixel tied with its backward neighbour but strictly above its forward
    one is the trailing half of a two-pixel ridge and is dropped. Plateaus
    (tied on both sides) therefore survive whole while an exactly tied pair
    thins to its leading pixel. Out-of-image neighbours are ignored and
    direction-less pixels always survive.
    """
    mag = np.asarray(mag, dtype=np.float64)
    direction = np.asarray(direction, dtype=np.float64)
    if mag.shape != direction.shape or mag.ndim != 2:
        raise ValueError(
            f"magnitude {mag.shape} and direction {direction.shape} must be equal 2-D shapes")
    M, N = mag.shape
    tol = tie_rtol * (np.abs(mag).max() if mag.size else 0.0)
    padded = np.pad(mag, 1, constant_values=-np.inf)
    bins = quantize_direction(direction)
    keep = np.isnan(direction)
    for b, (dr, dc) in _OFFSETS.items():
        fwd = mag - padded[1 + dr:1 + dr + M, 1 + dc:1 + dc + N]
        bwd = mag - padded[1 - dr:1 - dr + M, 1 - dc:1 - dc + N]
        local_max = (fwd >= -tol) & (bwd >= -tol)
        # an out-of-image forward neighbour (fwd = inf) cannot break a tie
        trailing = (np.abs(bwd) <= tol) & (fwd > tol) & np.isfinite(fwd)
        keep |= (bins == b) & local_max & ~trailing
    return np.where(keep, mag, 0.0)


def threshold_edges(suppressed, fraction: float) -> np.ndarray:
    """Binary edge map: magnitude strictly above ``fraction * max``."""
    s = np.asarray(suppressed, dtype=np.float64)
    peak = s.max() if s.size else 0.0
    return (s > fraction * peak) & (s > MAGNITUDE_FLOOR)


def filter_quaternion_image(q, hardy: HardyParams, boundary: str = "symmetric",
                            qfilter=None) -> np.ndarray:
    """Apply ``qfilter`` (default: the QHF with ``hardy``) under a boundary rule."""
    if qfilter is None:
        def qfilter(x):
            return qhf_filter(x, hardy)
    if boundary == "periodic":
        return qfilter(q)
    if boundary != "symmetric":
        raise ValueError(f"boundary must be one of {BOUNDARIES}, got {boundary!r}")
    M, N = q.shape[:2]
    ext = np.concatenate([q, q[::-1]], axis=0)
    ext = np.concatenate([ext, ext[:, ::-1]], axis=1)
    return qfilter(ext)[:M, :N]


def _filtered_vector(img, params: DetectParams, detector: str, qfilter=None) -> np.ndarray:
    if detector not in DETECTORS:
        raise ValueError(f"unknown detector {detector!r}; choose from {DETECTORS}")
    q = rgb_to_quaternion(img, params.normalize)
    if q.shape[0] < 3 or q.shape[1] < 3:
        raise ValueError(f"image must be at least 3x3, got {q.shape[0]}x{q.shape[1]}")
    if detector == "qhf":
        q = filter_quaternion_image(q, params.hardy, params.boundary, qfilter)
    return vector_part(q)


def edge_strength(img, params: DetectParams | None = None,
                  detector: str = "qhf", qfilter=None) -> GradientField:
    """IDZ gradient of the (optionally QHF-filtered) image, before NMS.

    ``detector="idz_raw"`` skips the QHF stage entirely. ``qfilter`` swaps
    in another quaternion-image filter for the QHF stage.
    """
    params = params or DetectParams()
    h = _filtered_vector(img, params, detector, qfilter)
    return gradient_field([h[..., 0], h[..., 1], h[..., 2]])


def detect_edges(img, params: DetectParams | None = None,
                 detector: str = "qhf", qfilter=None) -> np.ndarray:
    """Boolean edge map of an RGB image."""
    params = params or DetectParams()
    g = edge_strength(img, params, detector, qfilter)
    return threshold_edges(nonmax_suppress(g.magnitude, g.direction),
                           params.threshold_fraction)
