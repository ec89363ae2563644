"""Complex discrete Fourier transforms along one axis of an array.

Small lengths use a dense DFT matrix, powers of two a vectorized radix-2
decimation-in-time recursion, everything else Bluestein's chirp-z
algorithm on top of the radix-2 path. Both directions are unnormalized::

    forward:  X[k] = sum_n x[n] exp(-2 pi i k n / N)
    inverse:  x[n] = sum_k X[k] exp(+2 pi i k n / N)
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

__all__ = ["dft", "dft2"]

# Lengths at or below this use the dense matrix.
_DIRECT_MAX = 32


def dft(x, axis: int = -1, inverse: bool = False) -> np.ndarray:
    """Unnormalized DFT of ``x`` along ``axis``."""
    x = np.asarray(x, dtype=np.complex128)
    if x.ndim == 0:
        raise ValueError("dft needs at least one axis")
    x = np.moveaxis(x, axis, 0)
    shape = x.shape
    n = shape[0]
    if n == 0:
        raise ValueError("zero-length transform axis")
    # transform axis first: every butterfly then acts on contiguous rows
    cols = np.ascontiguousarray(x).reshape(n, -1)
    out = _dft_cols(cols, inverse)
    return np.moveaxis(out.reshape(shape), 0, axis)


def dft2(x, inverse: bool = False) -> np.ndarray:
    """Row-column 2-D DFT over the first two axes."""
    return dft(dft(x, axis=0, inverse=inverse), axis=1, inverse=inverse)


def _dft_cols(x: np.ndarray, inverse: bool) -> np.ndarray:
    n = x.shape[0]
    if n <= _DIRECT_MAX:
        return _dft_matrix(n, inverse) @ x
    if n & (n - 1) == 0:
        return _radix2(x, inverse)
    return _bluestein(x, inverse)


@lru_cache(maxsize=None)
def _dft_matrix(n: int, inverse: bool) -> np.ndarray:
    k = np.arange(n)
    # reduce k*m mod n first so the angle stays exact for large products
    km = np.outer(k, k) % n
    sign = 1.0 if inverse else -1.0
    w = np.exp(sign * 2j * np.pi * km / n)
    w.setflags(write=False)
    return w


@lru_cache(maxsize=None)
def _twiddles(k: int, inverse: bool) -> np.ndarray:
    sign = 1.0 if inverse else -1.0
    t = np.exp(sign * 1j * np.pi * np.arange(k) / k)[:, None, None]
    t.setflags(write=False)
    return t


def _radix2(x: np.ndarray, inverse: bool) -> np.ndarray:
    """Radix-2 DIT on a ``(n, batch)`` array, ``n`` a power of two."""
    n, batch = x.shape
    base = min(n, _DIRECT_MAX)
    # X[r, c] = x[r * L + c]: column c is the stride-L subsequence x[c::L]
    L = n // base
    X = (_dft_matrix(base, inverse) @ x.reshape(base, L * batch)).reshape(base, L, batch)
    while L > 1:
        K, half = X.shape[0], L // 2
        odd = X[:, half:, :] * _twiddles(K, inverse)
        out = np.empty((2 * K, half, batch), dtype=np.complex128)
        np.add(X[:, :half, :], odd, out=out[:K])
        np.subtract(X[:, :half, :], odd, out=out[K:])
        X, L = out, half
    return X.reshape(n, batch)


@lru_cache(maxsize=None)
def _chirp(n: int, inverse: bool) -> tuple[np.ndarray, np.ndarray, int]:
    k = np.arange(n, dtype=np.int64)
    # exp(i pi k^2 / n) has period 2n in k^2
    k2 = (k * k) % (2 * n)
    sign = 1.0 if inverse else -1.0
    c = np.exp(sign * 1j * np.pi * k2 / n)
    size = 1 << (2 * n - 1).bit_length()
    b = np.zeros(size, dtype=np.complex128)
    b[:n] = np.conj(c)
    b[size - n + 1:] = np.conj(c[1:])[::-1]
    fb = _radix2(b[:, None], False)[:, 0]
    c.setflags(write=False)
    fb.setflags(write=False)
    return c, fb, size


def _bluestein(x: np.ndarray, inverse: bool) -> np.ndarray:
    n, batch = x.shape
    c, fb, size = _chirp(n, inverse)
    a = np.zeros((size, batch), dtype=np.complex128)
    a[:n] = x * c[:, None]
    conv = _radix2(_radix2(a, False) * fb[:, None], True) / size
    return conv[:n] * c[:, None]
