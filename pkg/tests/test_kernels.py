import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from corravg.kernels import (
    cesaro_sq_numerators,
    cesaro_sq_weight,
    cesaro_weight,
    correlation_weight,
    correlation_weights,
    fejer_sum,
    reduce_frequency,
    u_hat,
    unit_step,
)


def U_brute(h, cap_h):
    return sum(unit_step(a, cap_h) * unit_step(a + h, cap_h) for a in range(-2 * cap_h, 2 * cap_h + 1))


def U_tilde_brute(h, cap_h):
    """Double sum over (a, b) with b - a = h, U itself from the unit-step oracle."""
    span = range(-2 * cap_h, 2 * cap_h + 1)
    return sum(U_brute(b, cap_h) * U_brute(a, cap_h) for a in span for b in span if b - a == h) / cap_h**2


@pytest.mark.parametrize("a, cap_h, expected", [(1, 5, 1), (0, 5, 0), (5, 5, 1), (6, 5, 0), (-1, 5, 0)])
def test_unit_step(a, cap_h, expected):
    assert unit_step(a, cap_h) == expected


@pytest.mark.parametrize("h, cap_h, expected", [(2, 5, 3), (0, 5, 5), (-7, 5, 0), (-4, 5, 1)])
def test_correlation_weight(h, cap_h, expected):
    assert correlation_weight(h, cap_h) == expected


@pytest.mark.parametrize("cap_h", [1, 2, 3, 7, 64])
def test_correlation_weight_is_self_convolution(cap_h):
    for h in range(-cap_h - 2, cap_h + 3):
        assert correlation_weight(h, cap_h) == U_brute(h, cap_h)


@pytest.mark.parametrize("h, cap_h, expected", [(0, 2, 1.5), (1, 2, 1.0), (2, 2, 0.25), (3, 2, 0.0), (-1, 2, 1.0)])
def test_cesaro_sq_weight(h, cap_h, expected):
    assert cesaro_sq_weight(h, cap_h) == expected


@pytest.mark.parametrize("cap_h", [1, 2, 3, 5, 8])
def test_cesaro_sq_weight_oracle(cap_h):
    table = cesaro_sq_numerators(cap_h)
    for h in range(-2 * cap_h, 2 * cap_h + 1):
        expected = U_tilde_brute(h, cap_h)
        assert cesaro_sq_weight(h, cap_h) == pytest.approx(expected, abs=1e-15)
        if abs(h) <= 2 * cap_h - 2:
            assert table[h + 2 * cap_h - 2] / cap_h**2 == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize("cap_h", range(1, 65))
def test_mass_identities(cap_h):
    assert int(correlation_weights(cap_h).sum()) == cap_h**2
    assert int(cesaro_sq_numerators(cap_h).sum()) == cap_h**4


@pytest.mark.parametrize("t, cap_h, expected", [(0, 3, 1.0), (1, 3, 2 / 3), (3, 3, 0.0), (-1.5, 3, 0.5), (7, 3, 0.0)])
def test_cesaro_weight(t, cap_h, expected):
    assert cesaro_weight(t, cap_h) == pytest.approx(expected)


def test_u_hat_examples():
    assert u_hat(0.0, 7) == pytest.approx(7)
    assert u_hat(3.0, 7) == pytest.approx(7)
    assert abs(u_hat(1 / 7, 7)) < 1e-12
    expected = math.sin(0.3 * math.pi) / math.sin(0.1 * math.pi)
    direct = sum(complex(math.cos(2 * math.pi * h * 0.1), math.sin(2 * math.pi * h * 0.1)) for h in (1, 2, 3))
    assert abs(u_hat(0.1, 3)) == pytest.approx(expected, rel=1e-12)
    assert abs(direct) == pytest.approx(2.618034, abs=1e-6)


@given(beta=st.floats(-10, 10), cap_h=st.integers(1, 40))
@settings(max_examples=200, deadline=None)
def test_u_hat_sine_ratio(beta, cap_h):
    s = math.sin(math.pi * beta)
    if abs(s) < 1e-6:
        return
    assert abs(u_hat(beta, cap_h)) == pytest.approx(abs(math.sin(math.pi * cap_h * beta) / s), abs=1e-9 * cap_h)


@pytest.mark.parametrize("cap_h", [1, 2, 5, 16, 33, 100])
def test_fejer_identity(cap_h):
    beta = np.arange(1000) / 1000 + 0.000123
    assert np.max(np.abs(fejer_sum(beta, cap_h) - np.abs(u_hat(beta, cap_h)) ** 2)) <= 1e-9 * cap_h**2


@pytest.mark.parametrize("cap_h", [2, 7, 50])
def test_fejer_majorant_and_implication(cap_h):
    alpha = (np.arange(1, 4000) / 8000.0)
    mag = np.abs(u_hat(alpha, cap_h))
    assert np.all(mag <= np.minimum(cap_h, 1 / (2 * alpha)) + 1e-9)
    sym = np.concatenate((-alpha[::-1], alpha))
    mag_sym = np.abs(u_hat(sym, cap_h))
    for h in range(1, cap_h + 1):
        assert np.all(np.abs(sym[mag_sym > h]) < 1 / (2 * h))


def test_reduce_frequency():
    assert reduce_frequency(1.25) == pytest.approx(0.25)
    assert reduce_frequency(-0.25) == pytest.approx(0.75)
    assert reduce_frequency(0.75, symmetric=True) == pytest.approx(-0.25)
    assert reduce_frequency(0.5, symmetric=True) == pytest.approx(-0.5)
