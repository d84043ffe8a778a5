"""Short-interval sums and the (modified) Selberg integrals.

    J_f(N, H)  = sum_{N < x <= 2N} (sum_{x < n <= x+H} f(n))^2
    J~_f(N, H) = sum_{N < x <= 2N} (sum_n C_H(n-x) f(n))^2

``fast`` mode uses prefix sums (O(N) per H); ``bruteforce`` sums every
window explicitly (O(NH)). Cesaro sums are formed as integer-weight
numerators sum_n (H - |n-x|) f(n) and divided by H only at the end, so both
modes agree bit for bit on integer-valued f.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from corravg.arith import SampledFunction
from corravg.errors import InvalidArgument, OutOfRange

MODES = ("fast", "bruteforce")


@dataclass(frozen=True)
class IntegralResult:
    value: float
    big_n: int
    cap_h: int
    mode: str
    kind: str  # "selberg" or "modified"


def _check(f: SampledFunction, cap_h: int, x: int | None = None) -> None:
    if cap_h < 1:
        raise InvalidArgument(f"H must be positive, got {cap_h}")
    if cap_h > f.big_n:
        raise OutOfRange(f"H = {cap_h} exceeds N = {f.big_n}")
    if x is not None and not f.big_n < x <= 2 * f.big_n:
        raise OutOfRange(f"x = {x} outside (N, 2N] = ({f.big_n}, {2 * f.big_n}]")


def _prefix(f: SampledFunction) -> np.ndarray:
    """P[k] = f(1) + ... + f(k), P[0] = 0."""
    return np.cumsum(f.values)


def window_sum(f: SampledFunction, x: int, cap_h: int) -> float:
    """sum_{x < n <= x+H} f(n) for x in (N, 2N]."""
    _check(f, cap_h, x)
    p = _prefix(f)
    return float(p[x + cap_h] - p[x])


def _cesaro_numerators_fast(f: SampledFunction, cap_h: int) -> np.ndarray:
    """H * (Cesaro window sum) for every x in (N, 2N], via second-order prefix sums.

    sum_n (H - |n-x|) f(n) = sum_{h=1}^{H} (P[x+h-1] - P[x-h])
                           = (Q[x+H-1] - Q[x-1]) - (Q[x-1] - Q[x-H-1])
    with Q[k] = P[0] + ... + P[k].
    """
    big_n = f.big_n
    q = np.cumsum(_prefix(f))
    x = np.arange(big_n + 1, 2 * big_n + 1)
    return q[x + cap_h - 1] - 2.0 * q[x - 1] + q[x - cap_h - 1]


def _cesaro_numerators_brute(f: SampledFunction, cap_h: int) -> np.ndarray:
    big_n = f.big_n
    weights = cap_h - np.abs(np.arange(-cap_h, cap_h + 1, dtype=np.float64))
    # windows[i] covers n = x-H .. x+H for x = N+1+i
    windows = sliding_window_view(f.values[big_n + 1 - cap_h : 2 * big_n + cap_h + 1], 2 * cap_h + 1)
    return windows @ weights


def cesaro_window_sum(f: SampledFunction, x: int, cap_h: int) -> float:
    """sum_{|n-x| <= H} (1 - |n-x|/H) f(n) for x in (N, 2N]."""
    _check(f, cap_h, x)
    q = np.cumsum(_prefix(f))
    numerator = q[x + cap_h - 1] - 2.0 * q[x - 1] + q[x - cap_h - 1]
    return float(numerator) / cap_h


def cesaro_identity_gap(f: SampledFunction, x: int, cap_h: int) -> float:
    """|lhs - rhs| of the Cesaro identity at (x, H), both sides summed independently.

    lhs = sum_{|n-x| <= H} (1 - |n-x|/H) f(n)
    rhs = (1/H) sum_{h=1}^{H} sum_{|n-x| < h} f(n)
    """
    _check(f, cap_h, x)
    v = f.values
    lhs = 0.0
    for n in range(x - cap_h, x + cap_h + 1):
        lhs += (1.0 - abs(n - x) / cap_h) * v[n]
    inner = 0.0
    for h in range(1, cap_h + 1):
        inner += float(v[x - h + 1 : x + h].sum())
    return abs(lhs - inner / cap_h)


def selberg_integral(f: SampledFunction, cap_h: int, mode: str = "fast") -> IntegralResult:
    _check(f, cap_h)
    big_n = f.big_n
    if mode == "fast":
        p = _prefix(f)
        sums = p[big_n + 1 + cap_h : 2 * big_n + 1 + cap_h] - p[big_n + 1 : 2 * big_n + 1]
    elif mode == "bruteforce":
        # windows[i] covers n = x+1 .. x+H for x = N+1+i
        windows = sliding_window_view(f.values[big_n + 2 : 2 * big_n + cap_h + 1], cap_h)
        sums = windows.sum(axis=1)
    else:
        raise InvalidArgument(f"unknown mode {mode!r}; expected one of {MODES}")
    return IntegralResult(float(np.dot(sums, sums)), big_n, cap_h, mode, "selberg")


def modified_selberg_integral(f: SampledFunction, cap_h: int, mode: str = "fast") -> IntegralResult:
    _check(f, cap_h)
    if mode == "fast":
        num = _cesaro_numerators_fast(f, cap_h)
    elif mode == "bruteforce":
        num = _cesaro_numerators_brute(f, cap_h)
    else:
        raise InvalidArgument(f"unknown mode {mode!r}; expected one of {MODES}")
    value = float(np.dot(num, num)) / cap_h**2
    return IntegralResult(value, f.big_n, cap_h, mode, "modified")
