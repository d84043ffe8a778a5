"""Exact spectral integrals against |f^(beta)|^2, with f^(beta) = sum_{n in (N,2N]} f(n) e(n beta).

Because |f^|^2 = sum_k c'_k e(k beta) is a trigonometric polynomial, every
integral of it against a trigonometric-polynomial kernel with Fourier
coefficients kappa(k) collapses by orthogonality to sum_k kappa(k) c'_k.
No quadrature is involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from corravg.arith import SampledFunction
from corravg.correlation import CorrelationTable, deviation, near_diag_table
from corravg.errors import InvalidArgument, OutOfRange
from corravg.kernels import KernelKind, cesaro_sq_numerators, correlation_weights
from corravg.selberg import modified_selberg_integral, selberg_integral

IDENTITIES = ("I", "II", "III")
_IDENTITY_KERNEL = {
    "I": KernelKind.UNIT_STEP,
    "II": KernelKind.FEJER,
    "III": KernelKind.CESARO_SQUARED,
}
# residual bound = c * H^p * sup_norm^2
RESIDUAL_CONSTANTS = {"I": (2.0, 2), "II": (8.0, 3), "III": (8.0, 3)}


@dataclass(frozen=True)
class KernelCoeffs:
    """Fourier coefficients kappa(k) of a kernel; ``weights[i]`` belongs to lag ``lags[i]``.

    For CESARO_SQUARED the exact integer numerators H^2 * kappa(k) are kept
    in ``numerators`` and ``denominator`` is H^2; otherwise the denominator is 1.
    """

    kind: KernelKind
    cap_h: int
    lags: np.ndarray
    numerators: np.ndarray
    denominator: int

    @property
    def weights(self) -> np.ndarray:
        return self.numerators / self.denominator

    @property
    def support(self) -> int:
        return int(np.max(np.abs(self.lags)))

    def as_dict(self) -> dict[int, float]:
        return {int(k): float(w) for k, w in zip(self.lags, self.weights)}


def kernel_coeffs(kind: KernelKind, cap_h: int) -> KernelCoeffs:
    kind = KernelKind(kind)
    if cap_h < 1:
        raise InvalidArgument(f"H must be positive, got {cap_h}")
    if kind is KernelKind.UNIT_STEP:
        lags = np.arange(1, cap_h + 1)
        return KernelCoeffs(kind, cap_h, lags, np.ones(cap_h, dtype=np.int64), 1)
    if kind is KernelKind.FEJER:
        lags = np.arange(-(cap_h - 1), cap_h)
        return KernelCoeffs(kind, cap_h, lags, correlation_weights(cap_h), 1)
    lags = np.arange(-(2 * cap_h - 2), 2 * cap_h - 1)
    return KernelCoeffs(kind, cap_h, lags, cesaro_sq_numerators(cap_h), cap_h**2)


def _table_for(f: SampledFunction, lag: int, table: CorrelationTable | None) -> CorrelationTable:
    need = min(lag, f.big_n - 1)
    if table is None:
        return near_diag_table(f, need, mode="fft")
    if table.big_n != f.big_n or table.max_lag < need:
        raise InvalidArgument(f"table must cover lags up to {need} for N = {f.big_n}")
    return table


def main_term(
    f: SampledFunction,
    cap_h: int,
    kind: KernelKind,
    table: CorrelationTable | None = None,
) -> float:
    """integral_0^1 |f^(beta)|^2 K(beta) d(beta) for the kernel ``kind``, exactly.

    Lags with |k| >= N carry no pairs and contribute nothing.
    """
    if cap_h > f.big_n:
        raise OutOfRange(f"H = {cap_h} exceeds N = {f.big_n}")
    kc = kernel_coeffs(kind, cap_h)
    table = _table_for(f, kc.support, table)
    keep = np.abs(kc.lags) < f.big_n
    c = table.coeffs[kc.lags[keep] + table.max_lag]
    return float(np.dot(kc.numerators[keep].astype(np.float64), c)) / kc.denominator


@dataclass(frozen=True)
class IdentityReport:
    which: str
    big_n: int
    cap_h: int
    lhs: float
    main_term: float
    residual: float
    bound: float
    ratio: float

    @property
    def ok(self) -> bool:
        return self.ratio <= 1.0


def _identity_lhs(f: SampledFunction, cap_h: int, which: str) -> float:
    if which == "I":
        return deviation(f, cap_h)
    if which == "II":
        return selberg_integral(f, cap_h).value
    return modified_selberg_integral(f, cap_h).value


def verify_identity(
    f: SampledFunction,
    cap_h: int,
    which: str,
    table: CorrelationTable | None = None,
    lhs: float | None = None,
) -> IdentityReport:
    """Compare D_f, J_f or J~_f (``which`` = I, II, III) with its spectral main term.

    The residual is checked against c * H^p * sup_norm^2 with (c, p) from
    ``RESIDUAL_CONSTANTS``. A caller that already holds the left-hand
    quantity may pass it as ``lhs``.
    """
    if which not in IDENTITIES:
        raise InvalidArgument(f"unknown identity {which!r}; expected one of {IDENTITIES}")
    if lhs is None:
        lhs = _identity_lhs(f, cap_h, which)
    main = main_term(f, cap_h, _IDENTITY_KERNEL[which], table)
    residual = abs(lhs - main)
    const, power = RESIDUAL_CONSTANTS[which]
    bound = const * cap_h**power * f.sup_norm**2
    if residual == 0.0:
        ratio = 0.0
    else:
        ratio = residual / bound if bound > 0 else math.inf
    return IdentityReport(which, f.big_n, cap_h, lhs, main, residual, bound, ratio)


def _sinpi(x: np.ndarray) -> np.ndarray:
    """sin(pi x), exactly zero at integers."""
    r = np.mod(x, 2.0)
    out = np.sin(np.pi * r)
    mid = (r >= 0.5) & (r < 1.5)
    out[mid] = np.sin(np.pi * (1.0 - r[mid]))
    hi = r >= 1.5
    out[hi] = -np.sin(np.pi * (2.0 - r[hi]))
    return out


def band_energy(
    f: SampledFunction,
    half_width: float,
    table: CorrelationTable | None = None,
) -> float:
    """integral_{-a}^{a} |f^(alpha)|^2 d(alpha) for a = ``half_width`` in (0, 1/2].

    Equals 2a c'_0 + 2 sum_{k=1}^{N-1} c'_k sin(2 pi k a) / (pi k), summed
    with ``math.fsum``.
    """
    if not 0.0 < half_width <= 0.5:
        raise InvalidArgument(f"half_width must lie in (0, 1/2], got {half_width}")
    table = _table_for(f, f.big_n - 1, table)
    c = table.one_sided()[: f.big_n]
    k = np.arange(1, c.size, dtype=np.float64)
    terms = c[1:] * _sinpi(2.0 * half_width * k) / (np.pi * k)
    return 2.0 * half_width * float(c[0]) + 2.0 * math.fsum(terms)
