"""Quick oracle cross-checks runnable from an installed package."""
from __future__ import annotations

import sys

import numpy as np

from .gradient import f_theta, gradient_direction, gradient_magnitude
from .hardy import HardyParams, qhf_filter
from .qft import dqft, dqft_direct, idqft, idqft_direct, signed_frequencies


def _fast_matches_direct(rng) -> float:
    worst = 0.0
    for M in range(1, 9):
        for N in range(1, 9):
            f = rng.normal(size=(M, N, 4))
            worst = max(worst, np.abs(dqft(f) - dqft_direct(f)).max(),
                        np.abs(idqft(f) - idqft_direct(f)).max())
    return worst


def _round_trip(rng) -> float:
    f = rng.normal(size=(64, 48, 4))
    return float(np.abs(idqft(dqft(f)) - f).max())


def _parseval(rng) -> float:
    f = rng.normal(size=(33, 40, 4))
    e_space = np.sum(f * f)
    F = dqft(f)
    return float(abs(np.sum(F * F) - e_space) / e_space)


def _quadrant_support(rng) -> float:
    f = rng.normal(size=(20, 21, 4))
    F = dqft(qhf_filter(f, HardyParams(0.5, 2.0)))
    neg = (signed_frequencies(20)[:, None] < 0) | (signed_frequencies(21)[None, :] < 0)
    return float(np.abs(F[neg]).max())


def _maximizer(rng) -> float:
    d = rng.normal(size=(3, 2, 1000))
    exx = np.sum(d[:, 0] ** 2, axis=0)
    eyy = np.sum(d[:, 1] ** 2, axis=0)
    exy = np.sum(d[:, 0] * d[:, 1], axis=0)
    mag = gradient_magnitude(exx, eyy, exy)
    return float(np.abs(f_theta(exx, eyy, exy, gradient_direction(exx, eyy, exy)) - mag).max())


CHECKS = [
    ("fast DQFT/IDQFT vs direct summation, sizes 1..8 x 1..8", _fast_matches_direct, 1e-9),
    ("IDQFT(DQFT(f)) round trip", _round_trip, 1e-10),
    ("Parseval energy identity (relative)", _parseval, 1e-9),
    ("QHF output has no negative-frequency content", _quadrant_support, 1e-10),
    ("IDZ direction maximizes f(theta)", _maximizer, 1e-9),
]


def run_selftest(stream=None, seed: int = 0) -> bool:
    """Run every check, print one PASS/FAIL line each, return overall success."""
    stream = stream or sys.stdout
    rng = np.random.default_rng(seed)
    ok = True
    for label, check, tol in CHECKS:
        err = check(rng)
        passed = err < tol
        ok &= passed
        print(f"{'PASS' if passed else 'FAIL'}  {label}: error {err:.3e} (tol {tol:g})",
              file=stream)
    return ok
