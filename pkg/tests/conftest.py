"""Shared fixtures and brute-force oracles.

Oracles here are written from the definitions with plain Python loops and
never call the code paths they check.
"""

import cmath
import math

import numpy as np
import pytest

from corravg import generate


def omega_trial(n):
    """Omega(n) by trial division."""
    count, p = 0, 2
    while p * p <= n:
        while n % p == 0:
            n //= p
            count += 1
        p += 1
    return count + (1 if n > 1 else 0)


def mu_trial(n):
    """Moebius mu(n) by trial division."""
    sign, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            sign = -sign
        p += 1
    return -sign if n > 1 else sign


def correlate_loop(f, h):
    big_n = f.big_n
    return sum(f(n) * f(n - h) for n in range(big_n + 1, 2 * big_n + 1))


def near_diag_loop(f, k):
    big_n = f.big_n
    block = range(big_n + 1, 2 * big_n + 1)
    return sum(f(n) * f(m) for n in block for m in block if n - m == k)


def selberg_loop(f, cap_h):
    big_n = f.big_n
    total = 0.0
    for x in range(big_n + 1, 2 * big_n + 1):
        s = sum(f(n) for n in range(x + 1, x + cap_h + 1))
        total += s * s
    return total


def cesaro_loop(f, x, cap_h):
    return sum(max(1 - abs(n - x) / cap_h, 0) * f(n) for n in range(x - cap_h, x + cap_h + 1))


def f_hat(f, beta):
    big_n = f.big_n
    return sum(f(n) * cmath.exp(2j * math.pi * n * beta) for n in range(big_n + 1, 2 * big_n + 1))


def spectral_average(f, kernel, points):
    """(1/M) sum_j |f^(j/M)|^2 K(j/M): the exact integral over [0,1) when the
    integrand is a trigonometric polynomial of degree < M."""
    big_n = f.big_n
    beta = np.arange(points) / points
    n = np.arange(big_n + 1, 2 * big_n + 1)
    fh = np.exp(2j * np.pi * np.outer(beta, n)) @ f.block()
    return float(np.mean(np.abs(fh) ** 2 * kernel(beta)).real)


FAMILY_PARAMS = [("parity", None), ("liouville", None), ("moebius", None), ("rademacher", 1)]


@pytest.fixture(params=FAMILY_PARAMS, ids=lambda p: p[0])
def family(request):
    """Factory: family(N) -> SampledFunction for each built-in kind."""
    kind, seed = request.param
    return lambda big_n: generate(kind, big_n, seed)
