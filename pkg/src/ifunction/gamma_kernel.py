"""Complex log-gamma on a fixed continuous branch, plus asymptotic helpers.

``log_gamma`` is the analytic continuation of ``ln Gamma`` from the positive
real axis into the plane cut along ``(-inf, 0]``.  It is *not* the principal
logarithm of ``Gamma(z)``: its imaginary part grows without bound instead of
wrapping, so ``exp(A * log_gamma(z))`` is continuous for non-integer ``A`` along
any path that avoids the cut.  On the cut itself the value is the limit from
the upper half plane (``Im z = +0``).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.special import loggamma

from .errors import SingularityError

__all__ = [
    "log_gamma",
    "powered_gamma_log",
    "stirling_magnitude",
    "log_gamma_asymptotic",
    "bernoulli_number",
    "bernoulli_polynomial",
    "POLE_TOL",
]

POLE_TOL = 1e-13

_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


def _check_poles(z, tol):
    near = np.rint(z.real)
    bad = (near <= 0) & (np.abs(z - near) < tol)
    if bad.any():
        where = z[bad][0]
        raise SingularityError(f"log_gamma: argument {where} is at a pole of Gamma")


def log_gamma(z, pole_tol: float = POLE_TOL):
    """Continuous-branch ``ln Gamma(z)``; scalar in, scalar out.

    Values come from :func:`scipy.special.loggamma`, which uses this branch;
    points within ``pole_tol`` of a pole raise :class:`SingularityError`.
    """
    arr = np.asarray(z, dtype=complex)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    _check_poles(arr, pole_tol)
    out = loggamma(arr)
    return complex(out[0]) if scalar else out


def powered_gamma_log(z, A: float):
    """``A * log_gamma(z)``: the logarithm of ``Gamma(z)**A`` on our branch."""
    return A * log_gamma(z)


def stirling_magnitude(x: float, y: float) -> float:
    """Large-``|y|`` estimate of ``|Gamma(x + iy)|``."""
    ay = abs(y)
    return math.sqrt(2.0 * math.pi) * math.exp(-math.pi * ay / 2.0) * ay ** (x - 0.5)


@lru_cache(maxsize=None)
def bernoulli_number(k: int) -> Fraction:
    """``B_k`` with ``B_1 = -1/2``, from ``sum_{j<=k} C(k+1, j) B_j = 0``."""
    if k == 0:
        return Fraction(1)
    acc = Fraction(0)
    for j in range(k):
        acc += math.comb(k + 1, j) * bernoulli_number(j)
    return -acc / (k + 1)


def bernoulli_polynomial(k: int, a):
    """``B_k(a) = sum_j C(k, j) B_j a^(k-j)``."""
    return sum(math.comb(k, j) * float(bernoulli_number(j)) * a ** (k - j) for j in range(k + 1))


def log_gamma_asymptotic(z, a=0.0, r: int = 2):
    """Truncated large-``z`` expansion of ``ln Gamma(z + a)``.

    ``r`` correction terms ``(-1)^{k+1} B_{k+1}(a) / (k (k+1) z^k)`` are kept;
    ``r = 0`` leaves the bare Stirling form.
    """
    if not 0 <= r <= 8:
        raise ValueError("r must lie in 0..8")
    z = complex(z)
    a = complex(a)
    val = (z + a - 0.5) * np.log(z) - z + _HALF_LOG_2PI
    for k in range(1, r + 1):
        val += (-1) ** (k + 1) * bernoulli_polynomial(k + 1, a) / (k * (k + 1) * z**k)
    return complex(val)
