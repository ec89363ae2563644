"""Noise models for robustness experiments.

All models act on intensities scaled to ``[0, 1]``, clip back into range and
re-quantize to 8 bits. Randomness comes from numpy's ``PCG64`` bit generator
seeded explicitly, so a ``(image, spec)`` pair always yields the same output.
"""
from __future__ import annotations

import zlib
from dataclasses import dataclass

import numpy as np

__all__ = ["NOISE_KINDS", "NoiseSpec", "add_noise", "derive_seed", "make_rng"]

NOISE_KINDS = ("gaussian", "poisson", "salt_pepper", "speckle")

_DEFAULTS = {
    "gaussian": {"variance": 0.01},
    "poisson": {"peak": 255.0},
    "salt_pepper": {"density": 0.05},
    "speckle": {"variance": 0.05},
}


@dataclass(frozen=True)
class NoiseSpec:
    """One noise model and its parameters.

    Unset parameters take the per-kind defaults: gaussian variance 0.01,
    speckle variance 0.05, salt & pepper density 0.05, poisson peak 255.
    """

    kind: str
    variance: float | None = None
    density: float | None = None
    peak: float | None = None
    seed: int = 0

    def __post_init__(self):
        if self.kind not in NOISE_KINDS:
            raise ValueError(f"unknown noise kind {self.kind!r}; choose from {NOISE_KINDS}")
        for name, value in _DEFAULTS[self.kind].items():
            if getattr(self, name) is None:
                object.__setattr__(self, name, value)
        if self.variance is not None and not self.variance >= 0:
            raise ValueError(f"variance must be >= 0, got {self.variance}")
        if self.density is not None and not 0 <= self.density <= 1:
            raise ValueError(f"density must lie in [0, 1], got {self.density}")
        if self.peak is not None and not self.peak > 0:
            raise ValueError(f"peak must be > 0, got {self.peak}")
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")

    @property
    def strength(self) -> float:
        """The kind's primary parameter."""
        return getattr(self, next(iter(_DEFAULTS[self.kind])))


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(int(seed)))


def derive_seed(seed: int, *keys: str) -> int:
    """Independent, reproducible 64-bit seed for the stream named by ``keys``."""
    words = [int(seed) & 0xFFFFFFFF, (int(seed) >> 32) & 0xFFFFFFFF]
    words += [zlib.crc32(k.encode("utf-8")) for k in keys]
    return int(np.random.SeedSequence(words).generate_state(1, dtype=np.uint64)[0])


def add_noise(img, spec: NoiseSpec) -> np.ndarray:
    """Return a noisy uint8 copy of the ``(M, N, 3)`` image ``img``."""
    a = np.asarray(img)
    if a.ndim != 3 or a.shape[2] != 3:
        raise ValueError(f"RGB image must have shape (M, N, 3), got {a.shape}")
    x = a.astype(np.float64) / 255.0
    rng = make_rng(spec.seed)

    if spec.kind == "gaussian":
        if spec.variance == 0:
            return a.astype(np.uint8, copy=True)
        y = x + rng.normal(0.0, np.sqrt(spec.variance), size=x.shape)
    elif spec.kind == "speckle":
        if spec.variance == 0:
            return a.astype(np.uint8, copy=True)
        y = x + x * rng.normal(0.0, np.sqrt(spec.variance), size=x.shape)
    elif spec.kind == "poisson":
        y = rng.poisson(x * spec.peak) / spec.peak
    else:
        # whole pixels are hit; each hit is black or white with equal odds
        y = x.copy()
        hit = rng.random(x.shape[:2]) < spec.density
        salt = rng.random(x.shape[:2]) < 0.5
        y[hit & salt] = 1.0
        y[hit & ~salt] = 0.0

    return np.round(np.clip(y, 0.0, 1.0) * 255.0).astype(np.uint8)
