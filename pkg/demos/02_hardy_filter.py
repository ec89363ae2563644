"""The quaternion Hardy filter: one-quadrant spectrum plus exponential smoothing."""
import numpy as np

from qhfedge.hardy import HardyParams, analytic_signal, hardy_mask, qhf_filter
from qhfedge.qft import dqft, signed_frequencies

# on a 4x4 grid with s1 = s2 = 0 the mask is (1 + sgn w1)(1 + sgn w2)
print(hardy_mask((4, 4), HardyParams(0, 0)))

# larger scales damp high frequencies harder
for s in (0.0, 1.5, 4.0):
    m = hardy_mask((64, 64), HardyParams(s, s))
    print(f"s={s}: mask sum {m.sum():9.2f}, value at (w1, w2) = (pi/2, pi/2) {m[16, 16]:.4f}")

rng = np.random.default_rng(1)
f = rng.normal(size=(32, 32, 4))

# the output spectrum lives in the first quadrant only
F = dqft(qhf_filter(f, HardyParams(1.5, 1.5)))
w1, w2 = signed_frequencies(32)[:, None], signed_frequencies(32)[None, :]
negative = np.broadcast_to((w1 < 0) | (w2 < 0), (32, 32))
print("largest negative-frequency coefficient:", np.abs(F[negative]).max())

# with both scales at zero the filter is the quaternion analytic signal
same = np.array_equal(qhf_filter(f, HardyParams(0, 0)), analytic_signal(f))
print("s = 0 equals analytic_signal:", same)

# energy never grows by more than 16x and shrinks as s grows
for s in (0.0, 0.5, 2.0, 8.0):
    out = qhf_filter(f, HardyParams(s, s))
    print(f"s={s}: energy ratio {np.sum(out * out) / np.sum(f * f):.4f}")
