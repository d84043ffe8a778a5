"""Gallagher-type band-energy checks and the exponent bookkeeping that links
bounds on J_f / J~_f to bounds on D_f / J_f.

Variant ``i`` feeds a hypothesis J_f(N, H) << N H^(1+A), A in [-1, 1), into a
bound for D_f(N, H). Variant ``ii`` feeds J~_f(N, H) << N H^(1+A),
A in [-3, 1), into a bound for J_f(N, H). Both use an auxiliary length
[H^(1 - delta)] where [t] is the integer part.

The N^eps slack of these bounds cannot be checked at finite N, so
``gallagher_check`` compares against a configurable threshold and
``theorem_report`` only reports ratios.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from corravg.arith import SampledFunction
from corravg.correlation import CorrelationTable, deviation
from corravg.errors import ExponentDomainError, FitError, InvalidArgument, OutOfRange
from corravg.selberg import modified_selberg_integral, selberg_integral
from corravg.spectral import band_energy

VARIANTS = ("i", "ii")
# admissible A: [low, 1)
_A_LOW = {"i": -1.0, "ii": -3.0}
# 3 - A and 5 - A in the exponent formulas
_SHIFT = {"i": 3.0, "ii": 5.0}


def _check_variant(variant: str) -> None:
    if variant not in VARIANTS:
        raise InvalidArgument(f"unknown variant {variant!r}; expected one of {VARIANTS}")


def _check_a(a_exp: float, variant: str) -> None:
    _check_variant(variant)
    low = _A_LOW[variant]
    if not (math.isfinite(a_exp) and low <= a_exp < 1.0):
        raise ExponentDomainError(
            f"A = {a_exp} is outside the admissible interval [{low:g}, 1) for variant {variant}"
        )


def proof_exponents(a_exp: float, variant: str) -> tuple[float, float]:
    """(delta, gamma) balancing the three ranges of the kernel decomposition.

    i:  delta = 2(1-A)/(3-A), gamma = (1-A)^2/(3-A)
    ii: delta = 2(1-A)/(5-A), gamma = (1-A)^2/(2(5-A))
    """
    _check_a(a_exp, variant)
    s = _SHIFT[variant]
    delta = 2.0 * (1.0 - a_exp) / (s - a_exp)
    gamma = (1.0 - a_exp) ** 2 / (s - a_exp)
    if variant == "ii":
        gamma /= 2.0
    return delta, gamma


def length_exponent(a_exp: float, variant: str) -> float:
    """1 - delta = 1 - 2(1-A)/(3-A) (variant i) or 1 - 2(1-A)/(5-A) (variant ii)."""
    _check_a(a_exp, variant)
    return 1.0 - 2.0 * (1.0 - a_exp) / (_SHIFT[variant] - a_exp)


def integer_part(t: float) -> int:
    """floor(t), snapping up when t sits within 1e-9 (relative) below an integer.

    Powers such as 8 ** (1/3) land a few ulps under the exact integer.
    """
    k = math.floor(t)
    if (k + 1) - t <= 1e-9 * (k + 1):
        k += 1
    return k


def theorem_lengths(cap_h: int, a_exp: float, variant: str) -> int:
    """H_1 = [H^(1 - 2(1-A)/(3-A))] or H_2 = [H^(1 - 2(1-A)/(5-A))], at least 1."""
    if cap_h < 1:
        raise InvalidArgument(f"H must be positive, got {cap_h}")
    return max(1, integer_part(cap_h ** length_exponent(a_exp, variant)))


def range_equivalences(a_exp: float, variant: str) -> tuple[bool, bool, bool, bool]:
    """The four equivalent admissibility predicates, evaluated independently.

    i:  A in [-1,1), 1+A in [0,2), 1-2(1-A)/(3-A) in [0,1), 1/(2-A) in [1/3,1)
    ii: A in [-3,1), 1+A in [-2,2), 1-2(1-A)/(5-A) in [0,1), 1/(2-A) in [1/5,1)
    """
    _check_variant(variant)
    low = _A_LOW[variant]
    s = _SHIFT[variant]
    a = a_exp
    e = 1.0 - 2.0 * (1.0 - a) / (s - a) if a != s else math.inf
    r = 1.0 / (2.0 - a) if a != 2.0 else math.inf
    return (
        low <= a < 1.0,
        1.0 + low <= 1.0 + a < 2.0,
        0.0 <= e < 1.0,
        1.0 / (2.0 - low) <= r < 1.0,
    )


@dataclass(frozen=True)
class ExponentParams:
    a_exp: float
    variant: str
    delta: float
    gamma: float
    cap_h: int
    derived_length: int


def exponent_params(cap_h: int, a_exp: float, variant: str) -> ExponentParams:
    delta, gamma = proof_exponents(a_exp, variant)
    return ExponentParams(a_exp, variant, delta, gamma, cap_h, theorem_lengths(cap_h, a_exp, variant))


@dataclass(frozen=True)
class GallagherReport:
    h: int
    variant: str
    lhs: float
    rhs_core: float
    ratio: float
    threshold: float

    @property
    def passed(self) -> bool:
        return self.ratio <= self.threshold


def gallagher_check(
    f: SampledFunction,
    h: int,
    variant: str = "i",
    threshold: float = 100.0,
    table: CorrelationTable | None = None,
) -> GallagherReport:
    """h^2 * (band energy on |alpha| <= 1/(2h)) against J (or J~) + h^3 * sup_norm^2.

    Variant ``i`` uses J_f(N, h), variant ``ii`` uses J~_f(N, h). The ratio
    is reported; ``passed`` tells whether it stays within ``threshold``.
    """
    _check_variant(variant)
    if h < 1:
        raise InvalidArgument(f"h must be positive, got {h}")
    if h > f.big_n:
        raise OutOfRange(f"h = {h} exceeds N = {f.big_n}")
    if not threshold > 0:
        raise InvalidArgument(f"threshold must be positive, got {threshold}")
    lhs = h**2 * band_energy(f, 1.0 / (2 * h), table)
    integral = selberg_integral(f, h) if variant == "i" else modified_selberg_integral(f, h)
    rhs = integral.value + h**3 * f.sup_norm**2
    if lhs == 0.0:
        ratio = 0.0
    else:
        ratio = lhs / rhs if rhs > 0 else math.inf
    return GallagherReport(h, variant, lhs, rhs, ratio, threshold)


@dataclass(frozen=True)
class ExponentFit:
    """Least-squares fit of log(value/N) = log C + (1+A) log H."""

    a_exp: float
    slope: float
    intercept: float
    n_used: int
    excluded: tuple[int, ...]

    @property
    def warning(self) -> bool:
        return bool(self.excluded)


def fit_exponent(points, big_n: int) -> ExponentFit:
    """Estimate A from ``(H, value)`` samples of a quantity assumed ~ N H^(1+A).

    Non-positive values (e.g. exact zeros) are dropped and listed in
    ``excluded``; a ``RuntimeWarning`` is issued when that happens.
    """
    used, excluded = [], []
    for cap_h, value in points:
        (used if value > 0 else excluded).append((cap_h, value))
    if excluded:
        warnings.warn(
            f"fit_exponent: dropped {len(excluded)} non-positive sample(s)", RuntimeWarning, stacklevel=2
        )
    if len({h for h, _ in used}) < 2:
        raise FitError("need at least two positive samples at distinct H")
    log_h = np.log(np.array([h for h, _ in used], dtype=np.float64))
    log_v = np.log(np.array([v for _, v in used], dtype=np.float64) / big_n)
    design = np.column_stack((log_h, np.ones_like(log_h)))
    (slope, intercept), *_ = np.linalg.lstsq(design, log_v, rcond=None)
    return ExponentFit(float(slope - 1.0), float(slope), float(intercept), len(used),
                       tuple(int(h) for h, _ in excluded))


@dataclass(frozen=True)
class TheoremReport:
    """Diagnostic numbers for one (f, H, variant, A); nothing here is asserted.

    ``hypothesis_*`` hold J_f (variant i) or J~_f (variant ii) at H and at
    the derived length, and their ratios to N * length^(1+A). ``conclusion``
    is |D_f(N, H)| (i) or J_f(N, H) (ii); ``bound`` is
    (N + H^(2-A)) * H^(1-delta) (i) or (N + H^(2-A)) * H^(2-2 delta) (ii).
    """

    params: ExponentParams
    big_n: int
    hypothesis_at_h: float
    hypothesis_at_length: float
    hypothesis_ratio_at_h: float
    hypothesis_ratio_at_length: float
    conclusion: float
    bound: float
    conclusion_ratio: float


def theorem_report(f: SampledFunction, cap_h: int, variant: str, a_exp: float) -> TheoremReport:
    params = exponent_params(cap_h, a_exp, variant)
    if cap_h > f.big_n:
        raise OutOfRange(f"H = {cap_h} exceeds N = {f.big_n}")
    big_n = f.big_n
    length = params.derived_length
    hyp = selberg_integral if variant == "i" else modified_selberg_integral
    at_h = hyp(f, cap_h).value
    at_len = hyp(f, length).value
    scale_h = big_n * cap_h ** (1.0 + a_exp)
    scale_len = big_n * length ** (1.0 + a_exp)
    power = 1.0 - params.delta
    if variant == "i":
        conclusion = abs(deviation(f, cap_h))
        bound = (big_n + cap_h ** (2.0 - a_exp)) * cap_h**power
    else:
        conclusion = selberg_integral(f, cap_h).value
        bound = (big_n + cap_h ** (2.0 - a_exp)) * cap_h ** (2.0 * power)
    return TheoremReport(
        params, big_n, at_h, at_len, at_h / scale_h, at_len / scale_len,
        conclusion, bound, conclusion / bound,
    )
