"""Quaternion Hardy filter (QHF).

The filter is a real spectral multiplier on the two-sided DQFT::

    H(w1, w2; s1, s2) = (1 + sgn w1)(1 + sgn w2) exp(-|w1| s1) exp(-|w2| s2)

The first pair of factors keeps only the non-negative frequency quadrant
(the quaternion analytic signal); the exponentials are a separable low-pass
whose strength grows with ``s1`` (rows, vertical) and ``s2`` (columns,
horizontal). ``sgn(0) = 0``, so DC passes with gain 1 and the zero-frequency
axes with gain 2.

Because ``H`` is real it commutes with quaternions, so left or right
application makes no difference.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .qft import as_quaternion_image, dqft, idqft, signed_frequencies

__all__ = [
    "HardyParams",
    "hardy_response",
    "hardy_mask",
    "apply_qhf",
    "qhf_filter",
    "analytic_signal",
]


@dataclass(frozen=True)
class HardyParams:
    """Smoothing scales of the QHF, in pixels.

    ``s1`` damps frequencies along the row axis (vertical), ``s2`` along the
    column axis (horizontal). Both must be finite and non-negative.
    """

    s1: float = 1.5
    s2: float = 1.5

    def __post_init__(self):
        for name in ("s1", "s2"):
            v = float(getattr(self, name))
            if not np.isfinite(v) or v < 0:
                raise ValueError(f"{name} must be a finite value >= 0, got {v}")
            object.__setattr__(self, name, v)


def hardy_response(w1, w2, params: HardyParams):
    """QHF system function at angular frequencies ``(w1, w2)``.

    Accepts scalars or broadcastable arrays; values lie in ``[0, 4]``.
    """
    w1 = np.asarray(w1, dtype=np.float64)
    w2 = np.asarray(w2, dtype=np.float64)
    h = (1.0 + np.sign(w1)) * (1.0 + np.sign(w2))
    if params.s1 != 0.0:
        h = h * np.exp(-np.abs(w1) * params.s1)
    if params.s2 != 0.0:
        h = h * np.exp(-np.abs(w2) * params.s2)
    if h.ndim == 0:
        return float(h)
    return h


def hardy_mask(shape: tuple[int, int], params: HardyParams) -> np.ndarray:
    """``H`` sampled on the DQFT bin grid of an ``M x N`` spectrum."""
    M, N = shape
    w1 = signed_frequencies(M)[:, None]
    w2 = signed_frequencies(N)[None, :]
    return np.broadcast_to(hardy_response(w1, w2, params), (M, N))


def apply_qhf(F, params: HardyParams) -> np.ndarray:
    """Multiply a DQFT spectrum pointwise by the QHF response."""
    F = as_quaternion_image(F)
    return F * hardy_mask(F.shape[:2], params)[..., None]


def qhf_filter(f, params: HardyParams) -> np.ndarray:
    """Spatial-domain QHF output ``idqft(H * dqft(f))``."""
    return idqft(apply_qhf(dqft(f), params))


def analytic_signal(f) -> np.ndarray:
    """Quaternion analytic signal of ``f``: the QHF with ``s1 = s2 = 0``."""
    return qhf_filter(f, HardyParams(0.0, 0.0))
