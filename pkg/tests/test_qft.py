import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from qhfedge.qft import (ORACLE_MAX_PIXELS, OracleSizeError, dqft, dqft_direct, idqft,
                         idqft_direct, signed_frequencies, signed_frequency)
from qhfedge.quaternion import qmul


def test_impulse_transforms_to_constant():
    f = np.zeros((4, 4, 4))
    f[0, 0, 0] = 1.0
    F = dqft(f)
    assert np.allclose(F[..., 0], 0.25, atol=1e-15)
    assert np.allclose(F[..., 1:], 0.0, atol=1e-15)


def test_quaternion_impulse_keeps_its_value():
    q = np.array([0.5, -1.0, 2.0, 3.0])
    f = np.zeros((3, 5, 4))
    f[0, 0] = q
    F = dqft(f)
    assert np.allclose(F, q / math.sqrt(15), atol=1e-14)


def test_constant_image_is_a_dc_spike():
    f = np.ones((6, 4, 4))
    F = dqft(f)
    assert np.allclose(F[0, 0], math.sqrt(24))
    F[0, 0] = 0
    assert np.abs(F).max() < 1e-13


@pytest.mark.parametrize("shape", [(1, 1), (1, 7), (5, 1), (3, 4), (8, 8), (7, 6)])
def test_fast_matches_direct(shape, rng):
    f = rng.normal(size=shape + (4,))
    assert np.abs(dqft(f) - dqft_direct(f)).max() < 1e-12
    assert np.abs(idqft(f) - idqft_direct(f)).max() < 1e-12


def test_direct_oracle_matches_single_bin_by_hand(rng):
    # one output bin summed term by term with explicit kernels
    M, N = 3, 5
    f = rng.normal(size=(M, N, 4))
    p, s = 2, 3
    acc = np.zeros(4)
    for m in range(M):
        for n in range(N):
            a = -2 * math.pi * m * p / M
            b = -2 * math.pi * n * s / N
            left = np.array([math.cos(a), math.sin(a), 0, 0])
            right = np.array([math.cos(b), 0, math.sin(b), 0])
            acc += qmul(qmul(left, f[m, n]), right)
    acc /= math.sqrt(M * N)
    assert np.abs(dqft(f)[p, s] - acc).max() < 1e-13


def test_direct_oracle_refuses_large_inputs():
    with pytest.raises(OracleSizeError):
        dqft_direct(np.zeros((70, 70, 4)))
    with pytest.raises(OracleSizeError):
        idqft_direct(np.zeros((1, ORACLE_MAX_PIXELS + 1, 4)))


def test_bad_shapes_rejected():
    with pytest.raises(ValueError):
        dqft(np.zeros((4, 4, 3)))
    with pytest.raises(ValueError):
        dqft(np.zeros((0, 4, 4)))
    with pytest.raises(ValueError):
        dqft(np.zeros((4, 4)))


@pytest.mark.parametrize("index, size, expected", [
    (0, 8, 0.0),
    (1, 8, math.pi / 4),
    (5, 8, -3 * math.pi / 4),
    (7, 8, -math.pi / 4),
    (2, 5, 4 * math.pi / 5),
    (3, 5, -4 * math.pi / 5),
    (0, 1, 0.0),
])
def test_signed_frequency_examples(index, size, expected):
    assert signed_frequency(index, size) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize("size", [2, 4, 8, 64])
def test_nyquist_bin_is_positive_pi(size):
    # regression guard: the even-size Nyquist bin is +pi, never -pi
    assert signed_frequency(size // 2, size) == math.pi
    assert signed_frequencies(size)[size // 2] == math.pi


def test_signed_frequency_range_errors():
    with pytest.raises(IndexError):
        signed_frequency(8, 8)
    with pytest.raises(IndexError):
        signed_frequency(-1, 8)
    with pytest.raises(ValueError):
        signed_frequency(0, 0)
    with pytest.raises(ValueError):
        signed_frequencies(0)


@pytest.mark.parametrize("size", [1, 2, 7, 8, 33])
def test_signed_frequencies_vector_matches_scalar(size):
    expected = [signed_frequency(k, size) for k in range(size)]
    assert np.array_equal(signed_frequencies(size), expected)
    # equals numpy's fftfreq except at the even-size Nyquist bin
    ref = 2 * np.pi * np.fft.fftfreq(size)
    if size % 2 == 0:
        ref[size // 2] = np.pi
    assert np.allclose(signed_frequencies(size), ref, atol=1e-15)


shapes = st.tuples(st.integers(1, 12), st.integers(1, 12))


@st.composite
def qimages(draw):
    M, N = draw(shapes)
    return draw(hnp.arrays(np.float64, (M, N, 4),
                           elements=st.floats(-100, 100, allow_nan=False)))


@settings(max_examples=100, deadline=None)
@given(qimages())
def test_round_trip_property(f):
    assert np.abs(idqft(dqft(f)) - f).max() <= 1e-12 * (1 + np.abs(f).max())
    assert np.abs(dqft(idqft(f)) - f).max() <= 1e-12 * (1 + np.abs(f).max())


@settings(max_examples=100, deadline=None)
@given(qimages())
def test_parseval_property(f):
    e = np.sum(f * f)
    F = dqft(f)
    assert abs(np.sum(F * F) - e) <= 1e-12 * (1 + e)


@settings(max_examples=50, deadline=None)
@given(qimages(), st.floats(-10, 10, allow_nan=False), st.floats(-10, 10, allow_nan=False))
def test_real_linearity(f, a, b):
    g = np.roll(f, 1, axis=0)[::-1]
    lhs = dqft(a * f + b * g)
    rhs = a * dqft(f) + b * dqft(g)
    assert np.abs(lhs - rhs).max() <= 1e-11 * (1 + np.abs(f).max() * (abs(a) + abs(b)))


def test_left_i_and_right_j_scalars_commute_with_the_transform(rng):
    f = rng.normal(size=(5, 6, 4))
    i = np.array([0.0, 1, 0, 0])
    j = np.array([0.0, 0, 1, 0])
    assert np.allclose(dqft(qmul(i, f)), qmul(i, dqft(f)), atol=1e-13)
    assert np.allclose(dqft(qmul(f, j)), qmul(dqft(f), j), atol=1e-13)


def test_left_j_scalar_does_not_commute(rng):
    # the kernels do not commute with general quaternions, so the transform
    # is only real-linear
    f = rng.normal(size=(5, 6, 4))
    j = np.array([0.0, 0, 1, 0])
    assert np.abs(dqft(qmul(j, f)) - qmul(j, dqft(f))).max() > 1e-3


def test_shift_moves_phase_not_energy(rng):
    f = rng.normal(size=(8, 8, 4))
    F = dqft(f)
    G = dqft(np.roll(f, 3, axis=1))
    assert np.isclose(np.sum(F * F), np.sum(G * G))
    assert np.allclose(F[:, 0], G[:, 0], atol=1e-12)
