import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhfedge.quaternion import (Quaternion, approx_equal, conj, modulus, mul,
                                qabs, qconj, qmul, sc_vec)

ONE = Quaternion(1)
I = Quaternion(0, 1)
J = Quaternion(0, 0, 1)
K = Quaternion(0, 0, 0, 1)

finite = st.floats(-1e3, 1e3, allow_nan=False)
quats = st.builds(Quaternion, finite, finite, finite, finite)


@pytest.mark.parametrize("a, b, expected", [
    (I, J, K), (J, I, -K),
    (J, K, I), (K, J, -I),
    (K, I, J), (I, K, -J),
    (I, I, -ONE), (J, J, -ONE), (K, K, -ONE),
])
def test_hamilton_table(a, b, expected):
    assert mul(a, b) == expected


def test_ijk_is_minus_one():
    assert I * J * K == -ONE


def test_hand_expanded_product():
    # (1 + i)(1 + j) = 1 + j + i + ij = 1 + i + j + k
    assert (ONE + I) * (ONE + J) == Quaternion(1, 1, 1, 1)


def test_identity(rng):
    for _ in range(20):
        q = Quaternion(*rng.normal(size=4))
        assert q * ONE == q
        assert ONE * q == q


def test_conj_examples():
    assert conj(Quaternion(1, 2, 3, 4)) == Quaternion(1, -2, -3, -4)
    q = Quaternion(0.5, -1.5, 2.0, 7.0)
    assert conj(conj(q)) == q


def test_modulus_examples():
    assert modulus(Quaternion(1, 1, 1, 1)) == 2.0
    assert modulus(Quaternion()) == 0.0
    assert abs(Quaternion(0, 3, 4, 0)) == 5.0


def test_sc_vec_examples():
    assert sc_vec(Quaternion(5, 1)) == (5.0, I)
    assert sc_vec(K) == (0.0, K)


def test_scalar_part_from_conjugate_formula(rng):
    for _ in range(50):
        q = Quaternion(*rng.normal(size=4))
        half_sum = (q + conj(q)) * 0.5
        s, v = sc_vec(q)
        assert half_sum == Quaternion(s)
        assert v.q0 == 0.0
        assert Quaternion(s) + v == q


def test_approx_equal_tolerance():
    a = Quaternion(1, 2, 3, 4)
    assert approx_equal(a, Quaternion(1, 2, 3, 4 + 1e-13))
    assert not approx_equal(a, Quaternion(1, 2, 3, 4 + 1e-9))
    assert approx_equal(a, Quaternion(1, 2, 3, 4 + 1e-9), atol=1e-8)


def test_anticommutators():
    for a, b in [(I, J), (J, K), (K, I)]:
        assert a * b + b * a == Quaternion()


def test_random_triples_associative_and_multiplicative(rng):
    a, b, c = rng.normal(size=(3, 10_000, 4))
    left = qmul(qmul(a, b), c)
    right = qmul(a, qmul(b, c))
    scale = qabs(a) * qabs(b) * qabs(c)
    assert np.max(np.abs(left - right).max(axis=-1) / scale) < 1e-12
    ab = qabs(qmul(a, b))
    assert np.max(np.abs(ab - qabs(a) * qabs(b)) / (qabs(a) * qabs(b))) < 1e-12


@settings(max_examples=200, deadline=None)
@given(quats, quats)
def test_conj_reverses_products(a, b):
    lhs = conj(a * b)
    rhs = conj(b) * conj(a)
    assert approx_equal(lhs, rhs, atol=1e-9 * (1 + abs(a) * abs(b)))


@settings(max_examples=200, deadline=None)
@given(quats)
def test_q_times_conj_is_real_norm(q):
    p = q * conj(q)
    assert abs(p.q0 - abs(q) ** 2) <= 1e-9 * (1 + abs(q) ** 2)
    assert max(abs(p.q1), abs(p.q2), abs(p.q3)) <= 1e-9 * (1 + abs(q) ** 2)
    s = q + conj(q)
    assert (s.q1, s.q2, s.q3) == (0.0, 0.0, 0.0)


@settings(max_examples=200, deadline=None)
@given(quats, quats, quats)
def test_distributive(a, b, c):
    assert approx_equal(a * (b + c), a * b + a * c, atol=1e-7)
    assert approx_equal((a + b) * c, a * c + b * c, atol=1e-7)


def test_array_product_matches_scalar_product(rng):
    a = rng.normal(size=(30, 4))
    b = rng.normal(size=(30, 4))
    got = qmul(a, b)
    for x, y, z in zip(a, b, got):
        assert approx_equal(Quaternion.from_array(z),
                            mul(Quaternion.from_array(x), Quaternion.from_array(y)), 1e-15)
    assert np.array_equal(qconj(a)[:, 0], a[:, 0])
    assert np.array_equal(qconj(a)[:, 1:], -a[:, 1:])


def test_not_commutative():
    assert I * J != J * I


def test_float_coercion():
    q = Quaternion(1, 2, 3, 4)
    assert 2 * q == Quaternion(2, 4, 6, 8)
    assert q - 1 == Quaternion(0, 2, 3, 4)
    assert math.isclose(abs(-q), abs(q))
    with pytest.raises(ValueError):
        Quaternion.from_array([1, 2, 3])
