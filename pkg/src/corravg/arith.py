"""Balanced, bounded real arithmetic functions sampled on 1..3N.

Every built-in family is used under the assumption that its short-interval
mean value vanishes identically (the function is *balanced*); this is not
checked.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from corravg.errors import FunctionFormatError, InvalidArgument

KINDS = ("parity", "liouville", "moebius", "rademacher")


@dataclass(frozen=True)
class SampledFunction:
    """Values of a real arithmetic function f on 1..3N.

    ``values`` has length ``n_max + 1`` and ``values[0]`` is a zero pad, so
    ``values[n]`` is f(n) for 1 <= n <= n_max. The array is read-only.
    """

    big_n: int
    values: np.ndarray
    label: str = ""
    sup_norm: float = field(init=False)

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64)
        if values.ndim != 1 or values.size != 3 * self.big_n + 1:
            raise InvalidArgument(
                f"expected {3 * self.big_n + 1} entries (pad + 3N), got {values.size}"
            )
        if not np.all(np.isfinite(values)):
            raise InvalidArgument("values must be finite")
        values[0] = 0.0
        values.flags.writeable = False
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "sup_norm", float(np.max(np.abs(values[1:]))))

    @property
    def n_max(self) -> int:
        return 3 * self.big_n

    def block(self) -> np.ndarray:
        """f restricted to the dyadic block (N, 2N], as a view."""
        return self.values[self.big_n + 1 : 2 * self.big_n + 1]

    def is_integer_valued(self) -> bool:
        v = self.values
        return bool(np.all(v == np.rint(v)))

    def __call__(self, n: int) -> float:
        if not 1 <= n <= self.n_max:
            raise IndexError(n)
        return float(self.values[n])


def from_values(values, label: str = "custom") -> SampledFunction:
    """Wrap f(1), ..., f(3N) (no pad) as a SampledFunction."""
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1 or arr.size == 0 or arr.size % 3:
        raise InvalidArgument(f"length must be a positive multiple of 3, got {arr.size}")
    return SampledFunction(arr.size // 3, np.concatenate(([0.0], arr)), label)


def smallest_prime_factors(n_max: int) -> np.ndarray:
    """spf[n] = smallest prime factor of n for 2 <= n <= n_max; spf[0] = spf[1] = 0."""
    spf = np.zeros(n_max + 1, dtype=np.int64)
    for p in range(2, math.isqrt(n_max) + 1):
        if spf[p] == 0:
            tail = spf[p * p :: p]
            tail[tail == 0] = p
    rest = np.flatnonzero(spf == 0)
    spf[rest] = rest  # primes (and 0, 1, reset below)
    spf[:2] = 0
    return spf


def _omega_and_squarefree(n_max: int) -> tuple[np.ndarray, np.ndarray]:
    """Big-omega Omega(n) and a squarefree mask for 1..n_max, index 0 unused."""
    spf = smallest_prime_factors(n_max)
    rem = np.arange(n_max + 1, dtype=np.int64)
    omega = np.zeros(n_max + 1, dtype=np.int64)
    squarefree = np.ones(n_max + 1, dtype=bool)
    active = np.flatnonzero(rem > 1)
    while active.size:
        p = spf[rem[active]]
        rem[active] //= p
        omega[active] += 1
        left = rem[active]
        repeated = (left > 1) & (spf[left] == p)
        squarefree[active[repeated]] = False
        active = active[left > 1]
    return omega, squarefree


def generate(kind: str, big_n: int, seed: int | None = None) -> SampledFunction:
    """Sample a built-in balanced family on 1..3*big_n.

    Kinds: ``parity`` (-1)^(n+1), ``liouville`` (-1)^Omega(n), ``moebius``
    mu(n), and ``rademacher``, independent signs drawn from
    ``numpy.random.default_rng(seed)``; the seed is required for it and
    rejected for the others.
    """
    if kind not in KINDS:
        raise InvalidArgument(f"unknown kind {kind!r}; expected one of {KINDS}")
    if not isinstance(big_n, (int, np.integer)) or big_n < 1:
        raise InvalidArgument(f"big_n must be a positive integer, got {big_n!r}")
    big_n = int(big_n)
    if kind == "rademacher" and seed is None:
        raise InvalidArgument("rademacher needs a seed")
    if kind != "rademacher" and seed is not None:
        raise InvalidArgument(f"{kind} is deterministic and takes no seed")

    n_max = 3 * big_n
    n = np.arange(n_max + 1)
    if kind == "parity":
        values = np.where(n % 2 == 1, 1.0, -1.0)
    elif kind == "rademacher":
        rng = np.random.default_rng(seed)
        values = np.concatenate(([0.0], 2.0 * rng.integers(0, 2, size=n_max) - 1.0))
    else:
        omega, squarefree = _omega_and_squarefree(n_max)
        values = np.where(omega % 2 == 0, 1.0, -1.0)
        if kind == "moebius":
            values[~squarefree] = 0.0
    label = kind if seed is None else f"{kind}:{seed}"
    return SampledFunction(big_n, values, label)


def load(path) -> SampledFunction:
    """Read a function file: header ``n,value`` then rows ``n,f(n)`` for n = 1, 2, ..."""
    path = Path(path)
    values = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [c.strip() for c in header] != ["n", "value"]:
            raise FunctionFormatError("header must be 'n,value'", row=1)
        for row in reader:
            lineno = reader.line_num
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != 2:
                raise FunctionFormatError(f"expected 2 fields, got {len(row)}", row=lineno)
            try:
                n = int(row[0])
                v = float(row[1])
            except ValueError as exc:
                raise FunctionFormatError(str(exc), row=lineno) from None
            if n != len(values) + 1:
                raise FunctionFormatError(f"expected n={len(values) + 1}, got n={n}", row=lineno)
            if not math.isfinite(v):
                raise FunctionFormatError(f"non-finite value {row[1]!r}", row=lineno)
            values.append(v)
    if not values or len(values) % 3:
        raise FunctionFormatError(f"{len(values)} rows; the length must be 3N with N >= 1")
    return from_values(values, label=f"file:{path}")


def save(f: SampledFunction, path_or_file) -> None:
    """Write ``f`` in the function file format (12 significant digits)."""
    if hasattr(path_or_file, "write"):
        _write(f, path_or_file)
    else:
        with open(path_or_file, "w", newline="", encoding="utf-8") as fh:
            _write(f, fh)


def _write(f: SampledFunction, fh) -> None:
    fh.write("n,value\n")
    for n in range(1, f.n_max + 1):
        fh.write(f"{n},{f.values[n]:.12g}\n")
