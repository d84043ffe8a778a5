"""Correlations C_f(h), the near-diagonal table c'_k and the deviation D_f(N, H).

    C_f(h) = sum_{N < n <= 2N} f(n) f(n-h)
    c'_k   = sum_{n, m in (N, 2N], n-m=k} f(n) f(m)

The two differ by the at most |k| products whose partner n-k leaves (N, 2N].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from corravg.arith import SampledFunction
from corravg.errors import InvalidArgument, OutOfRange


@dataclass(frozen=True)
class CorrelationTable:
    """c'_k for -K <= k <= K; ``coeffs[k + K]`` holds c'_k."""

    max_lag: int
    coeffs: np.ndarray
    big_n: int

    def __getitem__(self, k: int) -> float:
        if abs(k) > self.max_lag:
            raise OutOfRange(f"lag {k} outside table of half-width {self.max_lag}")
        return float(self.coeffs[k + self.max_lag])

    def one_sided(self) -> np.ndarray:
        """c'_0, c'_1, ..., c'_K."""
        return self.coeffs[self.max_lag :]


def _check_lag(f: SampledFunction, h: int) -> None:
    if abs(h) > f.big_n:
        raise OutOfRange(f"|h| = {abs(h)} exceeds N = {f.big_n}")


def correlate(f: SampledFunction, h: int) -> float:
    """C_f(h), requiring |h| <= N so that n - h stays inside 1..3N."""
    _check_lag(f, h)
    big_n = f.big_n
    shifted = f.values[big_n + 1 - h : 2 * big_n + 1 - h]
    return float(np.dot(f.block(), shifted))


def correlations(f: SampledFunction, max_lag: int) -> np.ndarray:
    """C_f(0), C_f(1), ..., C_f(max_lag)."""
    _check_lag(f, max_lag)
    if max_lag < 0:
        raise InvalidArgument("max_lag must be non-negative")
    return np.array([correlate(f, h) for h in range(max_lag + 1)])


def deviation(f: SampledFunction, cap_h: int) -> float:
    """D_f(N, H) = C_f(1) + ... + C_f(H), accumulated in ascending h."""
    if cap_h < 1:
        raise InvalidArgument(f"H must be positive, got {cap_h}")
    _check_lag(f, cap_h)
    return float(_deviations(correlations(f, cap_h))[cap_h])


def _deviations(corr: np.ndarray) -> np.ndarray:
    """Running deviations D(0..K) from C_f(0..K); D(0) = 0."""
    out = np.zeros_like(corr)
    out[1:] = np.cumsum(corr[1:])
    return out


def near_diag_table(f: SampledFunction, max_lag: int, mode: str = "fft") -> CorrelationTable:
    """Near-diagonal autocorrelation c'_k of f on (N, 2N] for |k| <= max_lag.

    ``direct`` takes one dot product per lag. ``fft`` zero-pads the block to
    a power of two >= 2N, so the cyclic autocorrelation has no wraparound;
    for integer-valued f the result is rounded back to the exact integers.
    """
    big_n = f.big_n
    if not 0 <= max_lag <= big_n - 1:
        raise OutOfRange(f"max_lag must lie in [0, N-1] = [0, {big_n - 1}], got {max_lag}")
    g = f.block()
    if mode == "direct":
        half = np.array([np.dot(g[k:], g[: big_n - k]) for k in range(max_lag + 1)])
        coeffs = np.concatenate((half[:0:-1], half))
    elif mode == "fft":
        size = 1 << (2 * big_n - 1).bit_length()
        spec = np.fft.rfft(g, size)
        ac = np.fft.irfft(spec * spec.conj(), size)
        pos = ac[: max_lag + 1]
        neg = ac[size - max_lag :] if max_lag else ac[:0]
        coeffs = np.concatenate((neg, pos))
        if f.is_integer_valued():
            coeffs = np.rint(coeffs)
    else:
        raise InvalidArgument(f"unknown mode {mode!r}")
    return CorrelationTable(max_lag, coeffs, big_n)
