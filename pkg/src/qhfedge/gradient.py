"""Improved Di Zenzo (IDZ) colour gradient.

For channels ``h_k`` the per-pixel structure tensor is::

    Exx = sum_k (dh_k/dx1)^2
    Eyy = sum_k (dh_k/dx2)^2
    Exy = sum_k (dh_k/dx1)(dh_k/dx2)

and the squared directional variation is
``f(theta) = Exx cos^2 + Eyy sin^2 + 2 Exy cos sin``. Its maximum over
``theta`` (the larger tensor eigenvalue) is the gradient magnitude and the
maximizing angle is the gradient direction.

``x1`` is array axis 0 (rows), ``x2`` array axis 1 (columns); ``theta = 0``
points down the rows and ``theta = pi/2`` across the columns.
"""
from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

__all__ = [
    "StructureTensor",
    "GradientField",
    "partial_derivatives",
    "structure_tensor",
    "f_theta",
    "gradient_magnitude",
    "gradient_direction",
    "gradient_field",
]


class StructureTensor(NamedTuple):
    exx: np.ndarray
    eyy: np.ndarray
    exy: np.ndarray


class GradientField(NamedTuple):
    magnitude: np.ndarray
    direction: np.ndarray  # NaN where undefined
    defined: np.ndarray


def partial_derivatives(plane) -> tuple[np.ndarray, np.ndarray]:
    """Sobel derivatives along rows (``dx``) and columns (``dy``).

    The stencils are ``[-1 0 1; -2 0 2; -1 0 1] / 8`` and its transpose, so a
    unit ramp has unit derivative. Borders replicate the edge pixels.
    """
    p = np.asarray(plane, dtype=np.float64)
    if p.ndim != 2:
        raise ValueError(f"expected a 2-D plane, got shape {p.shape}")
    if p.shape[0] < 3 or p.shape[1] < 3:
        raise ValueError(f"plane must be at least 3x3, got {p.shape[0]}x{p.shape[1]}")
    q = np.pad(p, 1, mode="edge")
    # central differences, then [1 2 1] smoothing across the other axis
    d0 = q[2:, :] - q[:-2, :]
    d1 = q[:, 2:] - q[:, :-2]
    dx = (d0[:, :-2] + 2.0 * d0[:, 1:-1] + d0[:, 2:]) / 8.0
    dy = (d1[:-2, :] + 2.0 * d1[1:-1, :] + d1[2:, :]) / 8.0
    return dx, dy


def structure_tensor(channels: Sequence) -> StructureTensor:
    """Channel-summed derivative products for a sequence of 2-D planes."""
    planes = [np.asarray(c, dtype=np.float64) for c in channels]
    if not planes:
        raise ValueError("need at least one channel")
    shape = planes[0].shape
    for c in planes[1:]:
        if c.shape != shape:
            raise ValueError(f"channel shapes differ: {shape} vs {c.shape}")
    exx = np.zeros(shape)
    eyy = np.zeros(shape)
    exy = np.zeros(shape)
    for c in planes:
        dx, dy = partial_derivatives(c)
        exx += dx * dx
        eyy += dy * dy
        exy += dx * dy
    return StructureTensor(exx, eyy, exy)


def f_theta(exx, eyy, exy, theta):
    """Squared variation of the colour vector in direction ``theta``."""
    c = np.cos(theta)
    s = np.sin(theta)
    return exx * c * c + eyy * s * s + 2.0 * exy * c * s


def gradient_magnitude(exx, eyy, exy):
    """Larger eigenvalue of ``[[exx, exy], [exy, eyy]]``."""
    exx = np.asarray(exx, dtype=np.float64)
    eyy = np.asarray(eyy, dtype=np.float64)
    exy = np.asarray(exy, dtype=np.float64)
    out = 0.5 * (exx + eyy + np.sqrt((exx - eyy) ** 2 + 4.0 * exy * exy))
    return float(out) if out.ndim == 0 else out


def gradient_direction(exx, eyy, exy):
    """Angle in ``(-pi/2, pi/2]`` maximizing :func:`f_theta`.

    Returns NaN where ``exx == eyy`` and ``exy == 0``; there every angle is a
    maximizer and the direction is undefined.
    """
    exx = np.asarray(exx, dtype=np.float64)
    eyy = np.asarray(eyy, dtype=np.float64)
    exy = np.asarray(exy, dtype=np.float64)
    diff = exx - eyy
    # + 0.0 turns -0.0 into +0.0 so atan2 never lands on -pi
    theta = 0.5 * np.arctan2(2.0 * exy + 0.0, diff)
    # atan2 can round a tiny negative angle near -pi onto -pi itself
    theta = np.where(theta <= -0.5 * np.pi, theta + np.pi, theta)
    # compare exactly: squaring tiny differences would underflow to zero
    undefined = (diff == 0.0) & (exy == 0.0)
    theta = np.where(undefined, np.nan, theta)
    return float(theta) if theta.ndim == 0 else theta


def gradient_field(channels: Sequence) -> GradientField:
    st = structure_tensor(channels)
    mag = gradient_magnitude(st.exx, st.eyy, st.exy)
    direction = gradient_direction(st.exx, st.eyy, st.exy)
    return GradientField(mag, direction, ~np.isnan(direction))
