import math

import mpmath as mp
import pytest

from ifunction import GammaTriple, IFunctionParams


def exp_params():
    # phi(s) = Gamma(-s): I(z) = exp(-z)
    return IFunctionParams(1, 0, (), (GammaTriple(0, 1, 1),))


def log_power_params(k):
    # phi(s) = (Gamma(-s)/Gamma(1-s))**k = (-1/s)**k
    return IFunctionParams(1, 0, (GammaTriple(1, 1, k),), (GammaTriple(0, 1, k),))


def log_power_closed(k, z):
    return math.log(1 / z) ** (k - 1) / math.gamma(k)


def suite_params():
    return IFunctionParams(
        2,
        1,
        ((0.4, 1, 1.2), (0.9, 0.6, 0.8)),
        ((0.3, 1, 1.5), (0.8, 0.5, 1), (0.2, 1, 0.7)),
    )


def mp_contour(params, z, sigma, dps=20):
    """Independent oracle: mpmath quadrature of the Mellin-Barnes integral."""
    with mp.workdps(dps):
        z = mp.mpc(z)
        lz = mp.log(z)

        def phi(s):
            out = mp.mpf(1)
            for j, t in enumerate(params.lower):
                if j < params.m:
                    out *= mp.exp(t.exponent * mp.loggamma(t.a - t.alpha * s))
                else:
                    out /= mp.exp(t.exponent * mp.loggamma(1 - t.a + t.alpha * s))
            for j, t in enumerate(params.upper):
                if j < params.n:
                    out *= mp.exp(t.exponent * mp.loggamma(1 - t.a + t.alpha * s))
                else:
                    out /= mp.exp(t.exponent * mp.loggamma(t.a - t.alpha * s))
            return out

        f = lambda y: phi(sigma + 1j * y) * mp.exp((sigma + 1j * y) * lz)
        val = mp.quad(f, [-mp.inf, -20, -5, 0, 5, 20, mp.inf]) / (2 * mp.pi)
        return complex(val)


@pytest.fixture
def exp_instance():
    return exp_params()


@pytest.fixture
def suite_instance():
    return suite_params()
