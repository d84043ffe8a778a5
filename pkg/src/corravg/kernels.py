"""Combinatorial weights and their exponential sums.

Frequencies are in revolutions: e(a) = exp(2*pi*i*a).

    u_H(a)  = 1 if 1 <= a <= H else 0                 (unit step)
    U_H(h)  = sum_{b-a=h} u_H(b) u_H(a) = max(H-|h|, 0)
    U~_H(h) = H^-2 sum_{b-a=h} U_H(b) U_H(a)          (support |h| <= 2H-2)
    C_H(t)  = max(1 - |t|/H, 0)                        (Cesaro weight)
    u^_H(b) = sum_{h=1}^{H} e(hb)
    U^_H(b) = sum_{|h|<H} U_H(h) e(hb) = |u^_H(b)|^2
"""

from __future__ import annotations

import enum

import numpy as np


class KernelKind(enum.Enum):
    """The three spectral kernels: u^_H(-b), |u^_H(b)|^2 and |u^_H(b)|^4 / H^2."""

    UNIT_STEP = "UnitStep"
    FEJER = "Fejer"
    CESARO_SQUARED = "CesaroSquared"


def reduce_frequency(beta, symmetric: bool = False):
    """Reduce beta mod 1 into [0, 1), or into [-1/2, 1/2) if ``symmetric``."""
    beta = np.asarray(beta, dtype=np.float64)
    if symmetric:
        out = beta - np.floor(beta + 0.5)
    else:
        out = beta - np.floor(beta)
        out = np.where(out >= 1.0, 0.0, out)
    return out[()] if out.ndim == 0 else out


def unit_step(a: int, cap_h: int) -> int:
    return 1 if 1 <= a <= cap_h else 0


def correlation_weight(h: int, cap_h: int) -> int:
    return max(cap_h - abs(h), 0)


def correlation_weights(cap_h: int) -> np.ndarray:
    """U_H(h) for h = -(H-1)..H-1 as an int64 array."""
    return cap_h - np.abs(np.arange(-(cap_h - 1), cap_h, dtype=np.int64))


def cesaro_sq_numerators(cap_h: int) -> np.ndarray:
    """H^2 * U~_H(h) for h = -(2H-2)..2H-2, exact int64."""
    tri = correlation_weights(cap_h)
    return np.convolve(tri, tri)


def cesaro_sq_weight(h: int, cap_h: int) -> float:
    h = abs(h)
    if h > 2 * cap_h - 2:
        return 0.0
    total = 0
    for a in range(-(cap_h - 1), cap_h - h):
        total += correlation_weight(a, cap_h) * correlation_weight(a + h, cap_h)
    return total / cap_h**2


def cesaro_weight(t: float, cap_h: int) -> float:
    return max(1.0 - abs(t) / cap_h, 0.0)


def u_hat(beta, cap_h: int):
    """The exponential sum u^_H(beta), evaluated term by term.

    Accepts a scalar or an array of frequencies. Summing the terms directly
    keeps integer beta exact (value H) without a removable-singularity case.
    """
    beta = reduce_frequency(beta)
    h = np.arange(1, cap_h + 1, dtype=np.float64)
    phase = 2.0 * np.pi * np.multiply.outer(beta, h)
    return np.exp(1j * phase).sum(axis=-1)


def fejer_sum(beta, cap_h: int):
    """U^_H(beta) = sum_{|h|<H} U_H(h) e(h beta), real by symmetry."""
    beta = reduce_frequency(beta)
    k = np.arange(1, cap_h, dtype=np.float64)
    w = cap_h - k
    cos = np.cos(2.0 * np.pi * np.multiply.outer(beta, k))
    return cap_h + 2.0 * (cos * w).sum(axis=-1)
