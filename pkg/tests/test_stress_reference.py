"""Randomized cross-validation of the evaluators against an independent
arbitrary-precision reference across all regimes the sampler can reach.
"""

import cmath
import random

import mpmath as mp

from coulombw.params import WhittakerParams as P
from coulombw.whittaker import whittaker_i, whittaker_i_ext, whittaker_k, whittaker_x

def _ref_i(b, m, z):
    with mp.workdps(60):
        return complex(mp.whitm(b, m, z) * mp.rgamma(1 + 2 * mp.mpc(m)))


def _ref_k(b, m, z):
    with mp.workdps(60):
        return complex(mp.whitw(b, m, z))


def _ref_x(b, m, z):
    # the edge continuations cancel like e^|z|, so the reference needs the
    # headroom explicitly (mpmath does not re-raise precision here)
    with mp.workdps(80):
        zp = mp.mpc(z) * mp.exp(mp.mpc(0, mp.pi))
        zm = mp.mpc(z) * mp.exp(mp.mpc(0, -mp.pi))
        em = mp.exp(mp.mpc(0, -mp.pi) * (mp.mpf(0.5) + mp.mpc(m)))
        ep = mp.exp(mp.mpc(0, mp.pi) * (mp.mpf(0.5) + mp.mpc(m)))
        return complex((em * mp.whitw(-b, m, zp) + ep * mp.whitw(-b, m, zm)) / 2)


def _draws(n, seed):
    rng = random.Random(seed)
    count = 0
    while count < n:
        b = complex(rng.uniform(-1.5, 1.5), rng.uniform(-0.8, 0.8))
        m = complex(rng.uniform(-0.9, 0.9), rng.uniform(-0.3, 0.3))
        r = rng.uniform(0.3, 38.0)
        ang = rng.uniform(-0.45 * cmath.pi, 0.45 * cmath.pi)
        z = r * cmath.exp(1j * ang)
        # mpmath's whitm/whitw cannot be evaluated near integer 2m
        if abs(2 * m - round((2 * m).real)) < 1e-3:
            continue
        count += 1
        yield b, m, z


def test_i_and_k_random_sweep():
    for b, m, z in _draws(120, seed=101):
        iv = whittaker_i(P(b, m), z).value
        ref = _ref_i(b, m, z)
        assert abs(iv - ref) <= 1e-10 * max(abs(ref), 1e-250), (b, m, z)
        kv = whittaker_k(P(b, m), z)
        ref = _ref_k(b, m, z)
        assert abs(kv.value - ref) <= max(1e-10 * abs(ref), kv.err_est * 10, 1e-280), (b, m, z)


def test_x_random_sweep():
    for b, m, z in _draws(50, seed=102):
        if abs((m + b) - round((m + b).real)) < 1e-2:
            continue
        xv = whittaker_x(P(b, m), z.real if z.real > 0 else abs(z)).value
        zr = z.real if z.real > 0 else abs(z)
        ref = _ref_x(b, m, zr)
        assert abs(xv - ref) <= 1e-9 * max(abs(ref), 1e-250), (b, m, zr)


def test_i_ext_random_sweep():
    rng = random.Random(103)
    n = 0
    while n < 40:
        b = complex(rng.uniform(-1.2, 1.2), rng.uniform(-0.6, 0.6))
        m = complex(rng.uniform(-0.8, 0.8), rng.uniform(-0.2, 0.2))
        if abs(2 * m - round((2 * m).real)) < 1e-3:
            continue
        n += 1
        r = rng.uniform(41.0, 90.0)
        ang = rng.uniform(-0.4 * cmath.pi, 0.4 * cmath.pi)
        z = r * cmath.exp(1j * ang)
        iv = whittaker_i_ext(P(b, m), z).value
        ref = _ref_i(b, m, z)
        assert abs(iv - ref) <= 1e-8 * abs(ref), (b, m, z)
