"""Evaluate every quantity and check over a grid of interval lengths H."""

from __future__ import annotations

import csv
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from corravg.arith import SampledFunction
from corravg.bounds import gallagher_check
from corravg.correlation import _deviations, correlations, near_diag_table
from corravg.errors import InvalidArgument, OutOfRange
from corravg.selberg import modified_selberg_integral, selberg_integral
from corravg.spectral import IDENTITIES, verify_identity

CSV_COLUMNS = (
    "cap_h",
    "deviation",
    "selberg",
    "modified",
    "identity_ratio_I",
    "identity_ratio_II",
    "identity_ratio_III",
    "gallagher_ratio",
)


@dataclass(frozen=True)
class ScanRow:
    cap_h: int
    deviation: float
    selberg: float
    modified: float
    identity_ratios: tuple[float, float, float]
    gallagher_ratio: float

    def flat(self) -> tuple:
        return (self.cap_h, self.deviation, self.selberg, self.modified,
                *self.identity_ratios, self.gallagher_ratio)


def worker_count() -> int:
    """Thread cap from CORRAVG_THREADS, else the CPU count."""
    env = os.environ.get("CORRAVG_THREADS")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise InvalidArgument(f"CORRAVG_THREADS must be an integer, got {env!r}") from None
        return max(1, n)
    return os.cpu_count() or 1


def check_grid(f: SampledFunction, h_grid) -> list[int]:
    grid = [int(h) for h in h_grid]
    if not grid:
        raise InvalidArgument("H grid is empty")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise InvalidArgument(f"H grid must be strictly ascending: {grid}")
    if grid[0] < 1:
        raise InvalidArgument(f"H values must be positive: {grid}")
    if grid[-1] > f.big_n:
        raise OutOfRange(f"H = {grid[-1]} exceeds N = {f.big_n}")
    return grid


def scan(f: SampledFunction, h_grid, gallagher_variant: str = "i") -> list[ScanRow]:
    """One ScanRow per H, in grid order.

    The full near-diagonal table (one FFT) and the correlations up to
    max(H) are built once and shared by all rows.
    """
    grid = check_grid(f, h_grid)
    table = near_diag_table(f, f.big_n - 1, mode="fft")
    devs = _deviations(correlations(f, grid[-1]))

    def row(cap_h: int) -> ScanRow:
        lhs = {
            "I": float(devs[cap_h]),
            "II": selberg_integral(f, cap_h).value,
            "III": modified_selberg_integral(f, cap_h).value,
        }
        ratios = tuple(verify_identity(f, cap_h, w, table=table, lhs=lhs[w]).ratio for w in IDENTITIES)
        g = gallagher_check(f, cap_h, gallagher_variant, table=table)
        return ScanRow(cap_h, lhs["I"], lhs["II"], lhs["III"], ratios, g.ratio)

    workers = min(worker_count(), len(grid))
    if workers == 1:
        return [row(h) for h in grid]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(row, grid))


def parse_grid(text: str) -> list[int]:
    """``geom:start:stop:count`` (geometric, rounded, duplicates dropped) or ``list:a,b,c``."""
    kind, _, body = text.partition(":")
    try:
        if kind == "geom":
            start, stop, count = body.split(":")
            start, stop, count = float(start), float(stop), int(count)
            if start < 1 or stop < start or count < 1:
                raise ValueError("need 1 <= start <= stop and count >= 1")
            points = np.rint(np.geomspace(start, stop, count)).astype(int)
            return sorted({int(p) for p in points})
        if kind == "list":
            return [int(tok) for tok in body.split(",")]
    except ValueError as exc:
        raise InvalidArgument(f"bad H grid {text!r}: {exc}") from None
    raise InvalidArgument(f"bad H grid {text!r}: expected 'geom:start:stop:count' or 'list:a,b,c'")


def write_csv(rows: list[ScanRow], fh, fmt=str) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in rows:
        writer.writerow([r.cap_h, *(fmt(v) for v in r.flat()[1:])])
