import math
from fractions import Fraction

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ifunction import (
    SingularityError,
    bernoulli_number,
    bernoulli_polynomial,
    log_gamma,
    log_gamma_asymptotic,
    powered_gamma_log,
    stirling_magnitude,
)

coords = st.floats(-40, 40, allow_nan=False)


def far_from_poles(z):
    return not (z.real <= 0.5 and abs(z - round(z.real)) < 1e-3)


@given(coords, coords)
@settings(max_examples=200, deadline=None)
def test_branch_matches_mpmath(x, y):
    z = complex(x, y)
    if not far_from_poles(z):
        return
    ref = complex(mp.loggamma(z))
    assert abs(log_gamma(z) - ref) <= 1e-13 * max(1.0, abs(ref))


@pytest.mark.parametrize(
    "z", [0.5 + 0.5j, 3.25 - 7j, 12 + 40j, -4.5 + 0.1j, -7.3 - 2j, 0.1 + 100j, 25.5, 1e-3 + 0j]
)
def test_matches_mpmath(z):
    ref = complex(mp.loggamma(z))
    assert abs(log_gamma(z) - ref) <= 1e-13 * max(1.0, abs(ref))


def test_vectorized_and_scalar():
    zs = np.array([0.5, 2 + 1j, -3.5 - 2j])
    out = log_gamma(zs)
    assert out.shape == (3,)
    assert isinstance(log_gamma(2.0), complex)
    for z, v in zip(zs, out):
        assert abs(v - log_gamma(complex(z))) == 0


@pytest.mark.parametrize("side", [1, -1])
def test_branch_continuous_off_the_cut(side):
    # the principal branch jumps only where the line meets the cut (-inf, 0]
    y = side * np.linspace(1e-6, 60, 4001)
    v = log_gamma(-2.7 + 1j * y)
    assert np.max(np.abs(np.diff(v.imag))) < 0.1


def test_negative_axis_limits():
    # the signed zero selects the side of the cut
    up, down = log_gamma(complex(-2.5, 0.0)), log_gamma(complex(-2.5, -0.0))
    assert abs(up - log_gamma(complex(-2.5, 1e-14))) < 1e-12
    assert abs(up.imag + down.imag) < 1e-13


@pytest.mark.parametrize("z", [0, -1, -7, -3 + 1e-15j])
def test_poles_raise(z):
    with pytest.raises(SingularityError):
        log_gamma(z)


def test_powered_gamma():
    assert powered_gamma_log(3.0, 2.5) == pytest.approx(2.5 * math.log(2.0))


def test_bernoulli_numbers():
    assert bernoulli_number(1) == Fraction(-1, 2)
    assert bernoulli_number(2) == Fraction(1, 6)
    assert bernoulli_number(12) == Fraction(-691, 2730)
    assert bernoulli_number(7) == 0


def test_bernoulli_polynomial():
    for a in (0.0, 0.3, 1.7):
        assert bernoulli_polynomial(2, a) == pytest.approx(a * a - a + 1 / 6)
        assert bernoulli_polynomial(3, a) == pytest.approx(a**3 - 1.5 * a * a + 0.5 * a)
        assert bernoulli_polynomial(5, a) == pytest.approx(float(mp.bernpoly(5, a)))


@pytest.mark.parametrize("a", [0.0, 0.5, -1.25, 2 + 1j])
def test_asymptotic_expansion_improves_with_order(a):
    z = 30 + 10j
    exact = complex(mp.loggamma(z + a))
    errs = [abs(log_gamma_asymptotic(z, a, r) - exact) for r in (0, 2, 4, 6)]
    assert errs == sorted(errs, reverse=True)
    assert errs[-1] < 1e-9


def test_asymptotic_order_range():
    with pytest.raises(ValueError):
        log_gamma_asymptotic(10, 0, 9)


@pytest.mark.parametrize("x", [0, 0.5, 1, 2])
@pytest.mark.parametrize("y", [50, -50, 200])
def test_stirling_magnitude(x, y):
    ratio = abs(complex(mp.gamma(complex(x, y)))) / stirling_magnitude(x, y)
    assert 0.99 <= ratio <= 1.01
