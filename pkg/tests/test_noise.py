import numpy as np
import pytest

from qhfedge.noise import NOISE_KINDS, NoiseSpec, add_noise, derive_seed, make_rng

GRAY = np.full((256, 256, 3), 128, dtype=np.uint8)


def test_defaults():
    assert NoiseSpec("gaussian").variance == 0.01
    assert NoiseSpec("speckle").variance == 0.05
    assert NoiseSpec("salt_pepper").density == 0.05
    assert NoiseSpec("poisson").peak == 255.0
    assert NoiseSpec("gaussian", variance=0.2).strength == 0.2


@pytest.mark.parametrize("kwargs", [
    {"kind": "uniform"},
    {"kind": "gaussian", "variance": -0.1},
    {"kind": "speckle", "variance": float("nan")},
    {"kind": "salt_pepper", "density": 1.5},
    {"kind": "poisson", "peak": 0},
    {"kind": "gaussian", "seed": -1},
])
def test_invalid_specs(kwargs):
    with pytest.raises(ValueError):
        NoiseSpec(**kwargs)


def test_salt_and_pepper_density():
    out = add_noise(GRAY, NoiseSpec("salt_pepper", density=0.05, seed=3))
    changed = (out != 128).any(axis=2)
    assert abs(changed.mean() - 0.05) <= 0.01
    vals = out[changed]
    # whole pixels flip to black or white, about half each
    assert set(np.unique(vals)) <= {0, 255}
    assert abs((vals[:, 0] == 255).mean() - 0.5) < 0.1


def test_gaussian_statistics():
    out = add_noise(GRAY, NoiseSpec("gaussian", variance=0.01, seed=1)).astype(float) / 255
    assert abs(out.mean() - 128 / 255) < 2e-3
    # rounding to 8 bits adds 1/(12 * 255^2) of variance
    assert out.var() == pytest.approx(0.01 + 1 / (12 * 255 ** 2), rel=0.02)


def test_speckle_is_multiplicative():
    img = np.zeros((64, 64, 3), dtype=np.uint8)
    img[:, 32:] = 100
    out = add_noise(img, NoiseSpec("speckle", seed=2))
    assert not out[:, :32].any()
    bright = out[:, 32:].astype(float) / 255
    assert bright.std() == pytest.approx(np.sqrt(0.05) * 100 / 255, rel=0.05)


def test_poisson_mean_and_variance():
    out = add_noise(GRAY, NoiseSpec("poisson", peak=50, seed=4)).astype(float) / 255
    x = 128 / 255
    assert abs(out.mean() - x) < 3e-3
    assert out.var() == pytest.approx(x / 50, rel=0.05)


@pytest.mark.parametrize("kind", ["gaussian", "speckle"])
def test_zero_variance_is_identity(kind, rng):
    img = rng.integers(0, 256, size=(16, 16, 3), dtype=np.uint8)
    out = add_noise(img, NoiseSpec(kind, variance=0))
    assert np.array_equal(out, img)
    assert out is not img


def test_zero_density_is_identity(rng):
    img = rng.integers(0, 256, size=(16, 16, 3), dtype=np.uint8)
    assert np.array_equal(add_noise(img, NoiseSpec("salt_pepper", density=0)), img)


@pytest.mark.parametrize("kind", NOISE_KINDS)
def test_seeded_and_clipped(kind, rng):
    img = rng.integers(0, 256, size=(32, 32, 3), dtype=np.uint8)
    a = add_noise(img, NoiseSpec(kind, seed=11))
    b = add_noise(img, NoiseSpec(kind, seed=11))
    c = add_noise(img, NoiseSpec(kind, seed=12))
    assert a.dtype == np.uint8 and a.shape == img.shape
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)


def test_rng_is_pcg64_and_stable():
    assert isinstance(make_rng(5).bit_generator, np.random.PCG64)
    assert make_rng(5).integers(0, 2**32) == np.random.Generator(np.random.PCG64(5)).integers(0, 2**32)


def test_derive_seed_separates_streams():
    seeds = {derive_seed(0, img, kind) for img in ("a", "b") for kind in NOISE_KINDS}
    assert len(seeds) == 8
    assert derive_seed(7, "x") == derive_seed(7, "x")
    assert derive_seed(7, "x") != derive_seed(8, "x")
    assert derive_seed(2**40, "x") != derive_seed(0, "x")


def test_rejects_non_rgb():
    with pytest.raises(ValueError):
        add_noise(np.zeros((4, 4)), NoiseSpec("gaussian"))
