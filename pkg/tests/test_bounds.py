import math

import numpy as np
import pytest

from corravg import (
    ExponentDomainError,
    FitError,
    from_values,
    exponent_params,
    fit_exponent,
    gallagher_check,
    generate,
    proof_exponents,
    theorem_lengths,
    theorem_report,
)
from corravg.bounds import integer_part, length_exponent, range_equivalences

A_GRID_I = np.linspace(-1, 1, 401)[:-1]
A_GRID_II = np.linspace(-3, 1, 801)[:-1]


def test_proof_exponent_values():
    assert proof_exponents(0, "i") == pytest.approx((2 / 3, 1 / 3))
    assert proof_exponents(0, "ii") == pytest.approx((0.4, 0.1))
    assert proof_exponents(-1, "i") == (1.0, 1.0)
    assert proof_exponents(-3, "ii") == (1.0, 1.0)


@pytest.mark.parametrize("variant, grid", [("i", A_GRID_I), ("ii", A_GRID_II)])
def test_gamma_delta_ordering(variant, grid):
    for a in grid:
        delta, gamma = proof_exponents(a, variant)
        assert 0 < gamma <= delta


@pytest.mark.parametrize("variant, grid", [("i", A_GRID_I), ("ii", A_GRID_II)])
def test_balancing_conditions(variant, grid):
    # i:  delta = gamma + (1-delta)(1-A) = 1-A-gamma
    # ii: 2 delta = 2 gamma + (1-A)(1-delta) = 1-A-2 gamma
    for a in grid:
        delta, gamma = proof_exponents(a, variant)
        g = gamma if variant == "i" else 2 * gamma
        d = delta if variant == "i" else 2 * delta
        assert d == pytest.approx(g + (1 - delta) * (1 - a), abs=1e-12)
        assert d == pytest.approx(1 - a - g, abs=1e-12)


@pytest.mark.parametrize("a, variant", [(1.0, "i"), (-1.0001, "i"), (-3.5, "ii"), (1.2, "ii"), (math.nan, "i")])
def test_exponent_domain_errors(a, variant):
    with pytest.raises(ExponentDomainError, match=r"\["):
        proof_exponents(a, variant)
    with pytest.raises(ExponentDomainError):
        theorem_lengths(100, a, variant)


def test_theorem_lengths():
    assert theorem_lengths(10000, 0, "i") == 21
    assert theorem_lengths(10000, -1, "i") == 1
    assert theorem_lengths(10000, 0, "ii") == 251
    assert theorem_lengths(10000, -3, "ii") == 1
    # exact powers must not fall one short
    assert 1000 ** (1 / 3) < 10
    assert integer_part(1000 ** (1 / 3)) == 10
    assert theorem_lengths(1000, 0, "i") == 10
    assert integer_part(21.544) == 21


@pytest.mark.parametrize("variant, grid", [("i", A_GRID_I), ("ii", A_GRID_II)])
def test_lengths_monotone_in_a(variant, grid):
    exps = [length_exponent(a, variant) for a in grid]
    assert all(b >= a for a, b in zip(exps, exps[1:]))
    for cap_h in (10, 1000, 10**6):
        lengths = [theorem_lengths(cap_h, a, variant) for a in grid]
        assert all(b >= a for a, b in zip(lengths, lengths[1:]))
        assert all(1 <= l <= cap_h for l in lengths)


@pytest.mark.parametrize("variant, low", [("i", -1.0), ("ii", -3.0)])
def test_range_equivalences(variant, low):
    for a in np.linspace(low - 2, 3, 1001):
        if a in (3.0, 5.0, 2.0):
            continue
        preds = range_equivalences(a, variant)
        assert len(set(preds)) == 1, (a, preds)
        assert preds[0] == (low <= a < 1)


def test_exponent_params():
    p = exponent_params(10000, 0, "ii")
    assert (p.derived_length, p.cap_h, p.variant) == (251, 10000, "ii")
    assert (p.delta, p.gamma) == pytest.approx((0.4, 0.1))


def test_gallagher_parity_h1():
    r = gallagher_check(generate("parity", 100), 1, "i")
    assert r.lhs == pytest.approx(100, abs=1e-9)
    assert r.rhs_core == 101
    assert r.ratio == pytest.approx(100 / 101, rel=1e-12)
    assert r.passed


def test_gallagher_zero_function():
    f = from_values(np.zeros(60))
    for variant in ("i", "ii"):
        r = gallagher_check(f, 4, variant)
        assert r.lhs == 0 and r.ratio == 0


def test_gallagher_parity_band_misses_mass():
    r = gallagher_check(generate("parity", 1000), 10, "i")
    assert r.ratio <= 1


def test_gallagher_threshold():
    f = generate("rademacher", 200, seed=5)
    r = gallagher_check(f, 10, "ii", threshold=1e-6)
    assert not r.passed
    with pytest.raises(ValueError):
        gallagher_check(f, 10, threshold=0)
    with pytest.raises(ValueError):
        gallagher_check(f, 201)
    with pytest.raises(ValueError):
        gallagher_check(f, 2, "iii")


@pytest.mark.parametrize("a", [-1.0, 0.0, 0.5, -0.37, 0.93])
def test_fit_recovers_planted(a):
    big_n = 1000
    pts = [(h, big_n * h ** (1 + a)) for h in (16, 32, 64, 100, 333)]
    assert fit_exponent(pts, big_n).a_exp == pytest.approx(a, abs=1e-9)


def test_fit_examples():
    pts = [(16, 1000 * 16**1.5), (32, 1000 * 32**1.5), (64, 1000 * 64**1.5)]
    assert fit_exponent(pts, 1000).a_exp == pytest.approx(0.5, abs=1e-12)
    assert fit_exponent([(8, 1000), (64, 1000)], 1000).a_exp == pytest.approx(-1, abs=1e-12)
    with pytest.raises(FitError):
        fit_exponent([(8, 1000)], 1000)
    with pytest.raises(FitError), pytest.warns(RuntimeWarning):
        fit_exponent([(8, 0), (16, 0)], 1000)
    with pytest.raises(FitError):
        fit_exponent([(8, 5), (8, 7)], 1000)


def test_fit_drops_zeros():
    with pytest.warns(RuntimeWarning):
        fit = fit_exponent([(3, 100), (4, 0), (5, 100), (6, 0)], 100)
    assert fit.excluded == (4, 6) and fit.warning and fit.n_used == 2
    assert fit.a_exp == pytest.approx(-1, abs=1e-12)


def test_theorem_report_parity():
    f = generate("parity", 100)
    r = theorem_report(f, 31, "i", -1.0)
    assert r.params.derived_length == 1
    assert r.hypothesis_ratio_at_h <= 1 and r.hypothesis_ratio_at_length <= 1
    assert r.bound == 100 + 31**3
    assert r.conclusion == 100
    assert r.conclusion_ratio == pytest.approx(100 / 29891, rel=1e-12)
    assert round(r.conclusion_ratio, 4) == 0.0033

    r = theorem_report(f, 32, "i", -1.0)
    assert r.conclusion == 0 and r.conclusion_ratio == 0
    assert theorem_report(f, 31, "i", -1.0) == theorem_report(f, 31, "i", -1.0)


def test_theorem_report_variant_ii():
    f = from_values(np.zeros(300))
    r = theorem_report(f, 50, "ii", 0.0)
    assert r.params.derived_length == theorem_lengths(50, 0.0, "ii")
    assert (r.hypothesis_at_h, r.hypothesis_at_length, r.conclusion, r.conclusion_ratio) == (0, 0, 0, 0)

    g = generate("parity", 1000)
    r = theorem_report(g, 31, "ii", -3.0)
    assert r.hypothesis_at_h == pytest.approx(1000 / 31**2, rel=1e-12)
    assert r.conclusion == 1000
    assert r.bound == pytest.approx((1000 + 31**5) * 31 ** (2 * (1 - 1.0)))


def test_theorem_report_errors():
    f = generate("parity", 10)
    with pytest.raises(ValueError):
        theorem_report(f, 11, "i", 0)
    with pytest.raises(ExponentDomainError):
        theorem_report(f, 5, "i", -2)
