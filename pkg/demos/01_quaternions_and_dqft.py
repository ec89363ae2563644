"""Quaternion arithmetic and the two-sided quaternion Fourier transform."""
import numpy as np

from qhfedge.quaternion import Quaternion
from qhfedge.qft import dqft, dqft_direct, idqft, signed_frequencies

# Hamilton's rules: ij = k, ji = -k, i^2 = j^2 = k^2 = ijk = -1
i, j, k = Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1)
print("ij =", i * j, "  ji =", j * i, "  ijk =", i * j * k)

# multiplication is not commutative but the modulus is multiplicative
p, q = Quaternion(1, 2, 3, 4), Quaternion(0.5, -1, 0, 2)
print("|pq| =", abs(p * q), " |p||q| =", abs(p) * abs(q))

# a colour image as an (M, N, 4) array of quaternions, here random
rng = np.random.default_rng(0)
f = rng.normal(size=(12, 10, 4))

# the fast transform agrees with the literal double sum
F = dqft(f)
print("fast vs direct, max error:", np.abs(F - dqft_direct(f)).max())

# it is unitary: energy is preserved and the inverse recovers f
print("energy in/out:", np.sum(f * f), np.sum(F * F))
print("round trip error:", np.abs(idqft(F) - f).max())

# bin index -> signed angular frequency; the Nyquist bin of an even axis is +pi
print("frequencies of an 8-point axis / pi:", signed_frequencies(8) / np.pi)
