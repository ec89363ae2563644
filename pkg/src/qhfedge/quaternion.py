"""Quaternion scalars and their Hamilton algebra.

Two layers live here:

* :class:`Quaternion`, a small immutable value type for single numbers.
* Array helpers (:func:`qmul`, :func:`qconj`, :func:`qabs`) that operate on
  ``float64`` arrays whose last axis holds the four components
  ``(q0, q1, q2, q3)``. Images and spectra in the rest of the package use
  this layout, shape ``(M, N, 4)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Quaternion",
    "mul",
    "conj",
    "modulus",
    "sc_vec",
    "approx_equal",
    "qmul",
    "qconj",
    "qabs",
    "qabs2",
]


@dataclass(frozen=True)
class Quaternion:
    """q0 + q1 i + q2 j + q3 k with float components."""

    q0: float = 0.0
    q1: float = 0.0
    q2: float = 0.0
    q3: float = 0.0

    def __post_init__(self):
        for name in ("q0", "q1", "q2", "q3"):
            object.__setattr__(self, name, float(getattr(self, name)))

    @classmethod
    def from_array(cls, a) -> "Quaternion":
        a = np.asarray(a, dtype=np.float64)
        if a.shape != (4,):
            raise ValueError(f"expected 4 components, got shape {a.shape}")
        return cls(*a.tolist())

    def to_array(self) -> np.ndarray:
        return np.array([self.q0, self.q1, self.q2, self.q3], dtype=np.float64)

    def __iter__(self):
        return iter((self.q0, self.q1, self.q2, self.q3))

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Quaternion(self.q0 + other.q0, self.q1 + other.q1,
                          self.q2 + other.q2, self.q3 + other.q3)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Quaternion(self.q0 - other.q0, self.q1 - other.q1,
                          self.q2 - other.q2, self.q3 - other.q3)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return Quaternion(-self.q0, -self.q1, -self.q2, -self.q3)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    def __rmul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return mul(other, self)

    def __abs__(self):
        return modulus(self)

    def conj(self) -> "Quaternion":
        return conj(self)

    @property
    def scalar(self) -> float:
        return self.q0

    @property
    def vector(self) -> "Quaternion":
        return Quaternion(0.0, self.q1, self.q2, self.q3)


def _coerce(x):
    if isinstance(x, Quaternion):
        return x
    if isinstance(x, (int, float, np.floating, np.integer)):
        return Quaternion(float(x))
    return NotImplemented


def mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product ``a * b``."""
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return Quaternion(
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def conj(q: Quaternion) -> Quaternion:
    return Quaternion(q.q0, -q.q1, -q.q2, -q.q3)


def modulus(q: Quaternion) -> float:
    return math.sqrt(q.q0 * q.q0 + q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3)


def sc_vec(q: Quaternion) -> tuple[float, Quaternion]:
    """Split ``q`` into its scalar part and its (pure) vector part."""
    return q.q0, Quaternion(0.0, q.q1, q.q2, q.q3)


def approx_equal(a: Quaternion, b: Quaternion, atol: float = 1e-12) -> bool:
    """Componentwise ``|a_n - b_n| <= atol`` for all four components."""
    return all(abs(x - y) <= atol for x, y in zip(a, b))


# --- array layer -----------------------------------------------------------

def qmul(a, b) -> np.ndarray:
    """Broadcasting Hamilton product of quaternion arrays (last axis = 4)."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    a0, a1, a2, a3 = np.moveaxis(a, -1, 0)
    b0, b1, b2, b3 = np.moveaxis(b, -1, 0)
    return np.stack(
        [
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ],
        axis=-1,
    )


def qconj(q) -> np.ndarray:
    q = np.array(q, dtype=np.float64)
    q[..., 1:] *= -1.0
    return q


def qabs2(q) -> np.ndarray:
    """Squared modulus per quaternion."""
    q = np.asarray(q, dtype=np.float64)
    return np.sum(q * q, axis=-1)


def qabs(q) -> np.ndarray:
    return np.sqrt(qabs2(q))
