"""The Mellin-Barnes kernel ``phi(s) z**s`` evaluated in log space."""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SingularityError
from .gamma_kernel import log_gamma
from .params import IFunctionParams

__all__ = ["GammaFactor", "gamma_factors", "log_phi", "integrand_at", "SINGULAR_TOL"]

SINGULAR_TOL = 1e-12


@dataclass(frozen=True)
class GammaFactor:
    """``Gamma(offset + slope*s) ** (sign * exponent)``.

    ``group`` is one of ``lower_num``, ``upper_num``, ``lower_den``,
    ``upper_den`` and ``index`` the position in the original triple list.
    """

    sign: int
    offset: complex
    slope: float
    exponent: float
    group: str
    index: int

    def arg(self, s):
        return self.offset + self.slope * s

    def singular_point(self, k):
        """``s`` where the gamma argument equals ``-k``."""
        return (-k - self.offset) / self.slope


def gamma_factors(params: IFunctionParams):
    out = []
    for j, t in enumerate(params.lower):
        if j < params.m:
            out.append(GammaFactor(1, t.a, -t.alpha, t.exponent, "lower_num", j))
        else:
            out.append(GammaFactor(-1, 1.0 - t.a, t.alpha, t.exponent, "lower_den", j))
    for j, t in enumerate(params.upper):
        if j < params.n:
            out.append(GammaFactor(1, 1.0 - t.a, t.alpha, t.exponent, "upper_num", j))
        else:
            out.append(GammaFactor(-1, t.a, -t.alpha, t.exponent, "upper_den", j))
    return out


def _pole_mask(w, tol):
    near = np.rint(w.real)
    return (near <= 0) & (np.abs(w - near) < tol)


def _log_phi(factors, s, tol):
    s = np.asarray(s, dtype=complex)
    total = np.zeros(np.broadcast(s).shape, dtype=complex)
    for f in factors:
        w = np.broadcast_to(f.arg(s), total.shape).astype(complex)
        poles = _pole_mask(w, tol)
        if f.sign > 0:
            if poles.any():
                bad = complex(np.broadcast_to(s, total.shape)[poles].ravel()[0])
                raise SingularityError(
                    f"s={bad} is a singular point of {f.group}[{f.index}]",
                    factor=(f.group, f.index),
                )
            total += f.exponent * log_gamma(w)
        else:
            contrib = np.full(total.shape, -np.inf + 0j)
            ok = ~poles
            if ok.any():
                contrib[ok] = -f.exponent * log_gamma(w[ok])
            total += contrib
    return total


def log_phi(params: IFunctionParams, s, tol: float = SINGULAR_TOL):
    """Sum of powered log-gammas making up ``ln phi(s)``.

    Denominator factors sitting on a pole of their gamma function contribute
    ``-inf`` (``phi`` vanishes there); numerator singularities raise
    :class:`SingularityError` naming the factor.
    """
    out = _log_phi(gamma_factors(params), s, tol)
    return complex(out) if np.ndim(s) == 0 else out


def principal_log(z) -> complex:
    z = complex(z)
    if z == 0:
        raise DomainError("z must be nonzero")
    return cmath.log(z)


def _integrand(factors, log_z, s, tol=SINGULAR_TOL):
    return np.exp(_log_phi(factors, s, tol) + np.asarray(s) * log_z)


def integrand_at(params: IFunctionParams, z, s, tol: float = SINGULAR_TOL):
    """``phi(s) * z**s`` with the principal branch of ``log z``."""
    out = _integrand(gamma_factors(params), principal_log(z), s, tol)
    return complex(out) if np.ndim(s) == 0 else out
