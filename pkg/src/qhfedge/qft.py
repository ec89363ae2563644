"""Two-sided discrete quaternion Fourier transform.

A quaternion image is a float64 array of shape ``(M, N, 4)``; axis 0 is the
row index ``m`` (paired with the i-kernel on the left), axis 1 the column
index ``n`` (paired with the j-kernel on the right)::

    F(p, s) = 1/sqrt(MN) sum_m sum_n exp(-i 2pi mp/M) f(m, n) exp(-j 2pi ns/N)

The fast path writes ``f = a + b j`` with ``a, b`` i-complex, so the left
kernel acts on ``a`` and ``b`` as ordinary complex DFTs along axis 0. The
intermediate result is then regrouped as ``c + i d`` with ``c, d``
j-complex, and the right kernel acts on ``c`` and ``d`` as complex DFTs
along axis 1. Cost is four batched 1-D FFT passes.
"""
from __future__ import annotations

import math

import numpy as np

from .fft import dft
from .quaternion import qmul

__all__ = [
    "OracleSizeError",
    "ORACLE_MAX_PIXELS",
    "as_quaternion_image",
    "dqft",
    "idqft",
    "dqft_direct",
    "idqft_direct",
    "signed_frequency",
    "signed_frequencies",
]

ORACLE_MAX_PIXELS = 4096


class OracleSizeError(ValueError):
    """Input too large for the O(M^2 N^2) direct-summation oracle."""


def as_quaternion_image(f) -> np.ndarray:
    f = np.asarray(f, dtype=np.float64)
    if f.ndim != 3 or f.shape[-1] != 4:
        raise ValueError(f"quaternion image must have shape (M, N, 4), got {f.shape}")
    if f.shape[0] < 1 or f.shape[1] < 1:
        raise ValueError("quaternion image needs M >= 1 and N >= 1")
    return f


def _two_sided(f, inverse: bool) -> np.ndarray:
    f = as_quaternion_image(f)
    M, N = f.shape[:2]
    a = f[..., 0] + 1j * f[..., 1]
    b = f[..., 2] + 1j * f[..., 3]
    A = dft(a, axis=0, inverse=inverse)
    B = dft(b, axis=0, inverse=inverse)
    # A + B j = A.re + A.im i + B.re j + B.im k = c + i d
    c = A.real + 1j * B.real
    d = A.imag + 1j * B.imag
    C = dft(c, axis=1, inverse=inverse)
    D = dft(d, axis=1, inverse=inverse)
    out = np.stack([C.real, D.real, C.imag, D.imag], axis=-1)
    out /= math.sqrt(M * N)
    return out


def dqft(f) -> np.ndarray:
    """Forward two-sided DQFT of an ``(M, N, 4)`` quaternion image."""
    return _two_sided(f, inverse=False)


def idqft(F) -> np.ndarray:
    """Inverse two-sided DQFT; ``idqft(dqft(f)) == f`` up to rounding."""
    return _two_sided(F, inverse=True)


def _direct(f, inverse: bool) -> np.ndarray:
    f = as_quaternion_image(f)
    M, N = f.shape[:2]
    if M * N > ORACLE_MAX_PIXELS:
        raise OracleSizeError(
            f"direct DQFT limited to {ORACLE_MAX_PIXELS} pixels, got {M}x{N}")
    sign = 1.0 if inverse else -1.0
    m = np.arange(M)
    n = np.arange(N)
    out = np.empty_like(f)
    for p in range(M):
        ang = sign * 2.0 * np.pi * ((m * p) % M) / M
        left = np.zeros((M, 1, 4))
        left[:, 0, 0] = np.cos(ang)
        left[:, 0, 1] = np.sin(ang)
        lf = qmul(left, f)
        for s in range(N):
            ang = sign * 2.0 * np.pi * ((n * s) % N) / N
            right = np.zeros((1, N, 4))
            right[0, :, 0] = np.cos(ang)
            right[0, :, 2] = np.sin(ang)
            out[p, s] = qmul(lf, right).sum(axis=(0, 1))
    return out / math.sqrt(M * N)


def dqft_direct(f) -> np.ndarray:
    """Forward DQFT by literal summation. Test oracle, at most 4096 pixels."""
    return _direct(f, inverse=False)


def idqft_direct(F) -> np.ndarray:
    """Inverse DQFT by literal summation. Test oracle, at most 4096 pixels."""
    return _direct(F, inverse=True)


def signed_frequency(index: int, size: int) -> float:
    """Angular frequency (rad/sample) of DFT bin ``index`` out of ``size``.

    Bins above ``size // 2`` wrap to negative frequencies. For even sizes the
    Nyquist bin ``size // 2`` is taken as ``+pi``.
    """
    if size < 1:
        raise ValueError(f"size must be positive, got {size}")
    if not 0 <= index < size:
        raise IndexError(f"bin index {index} out of range for size {size}")
    k = index if index <= size // 2 else index - size
    return 2.0 * math.pi * k / size


def signed_frequencies(size: int) -> np.ndarray:
    """Vector of :func:`signed_frequency` for every bin of a length-``size`` axis."""
    if size < 1:
        raise ValueError(f"size must be positive, got {size}")
    idx = np.arange(size)
    k = np.where(idx <= size // 2, idx, idx - size)
    return 2.0 * np.pi * k / size
