"""Named functions expressed as I-functions, with series and closed-form oracles.

Constants that the source formulas leave to the literature (``K`` and the
``B_r`` of the likelihood-ratio density, the ``K_{a-1}`` of the Feynman
integral) are always caller inputs.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import betaln, gammaln

from .errors import DomainError, ValidationError
from .evaluate import evaluate_log
from .params import GammaTriple, IFunctionParams, validate
from .quadrature import EvalResult
from .series import DEFAULT_TERMS

__all__ = [
    "SpecialCaseSpec",
    "KINDS",
    "from_h_function",
    "from_g_function",
    "from_h_bar",
    "feynman_g_spec",
    "feynman_g",
    "feynman_g_series",
    "gaussian_free_energy_spec",
    "gaussian_free_energy",
    "gaussian_free_energy_series",
    "gaussian_free_energy_terms",
    "lrc_density_term_spec",
    "lrc_density_term",
    "lrc_density_term_closed_form",
    "lrc_density",
    "lrc_v",
]

KINDS = ("h_function", "g_function", "h_bar", "feynman_g", "gaussian_free_energy", "lrc_density_term")


@dataclass(frozen=True)
class SpecialCaseSpec:
    """A named function: ``prefactor * I(argument)`` with ``I`` given by ``params``.

    ``log_argument`` fixes the branch of the argument (negative reals are
    taken with ``arg = pi``).
    """

    kind: str
    parameters: dict
    prefactor: complex
    params: IFunctionParams
    log_argument: complex | None = None
    notes: tuple = field(default_factory=tuple)

    def evaluate(self, tol=1e-10, method="auto", R=DEFAULT_TERMS) -> EvalResult:
        if self.log_argument is None:
            raise DomainError(f"{self.kind} spec carries no argument")
        res = evaluate_log(self.params, self.log_argument, tol, method, R)
        return res.scaled(self.prefactor, kind=self.kind, prefactor=self.prefactor)

    def to_dict(self):
        return {
            "kind": self.kind,
            "parameters": dict(self.parameters),
            "prefactor": [self.prefactor.real, self.prefactor.imag],
            "params": self.params.to_dict(),
            "log_argument": None
            if self.log_argument is None
            else [self.log_argument.real, self.log_argument.imag],
            "notes": list(self.notes),
        }


def _checked(params):
    problems = validate(params)
    if problems:
        raise ValidationError(problems)
    return params


def _log_negated(x) -> complex:
    """``log(-x)``; a negative real result lies on ``arg = +pi``."""
    w = -complex(x)
    if w == 0:
        raise DomainError("argument must be nonzero")
    if w.imag == 0 and w.real < 0:
        return complex(math.log(-w.real), math.pi)
    return cmath.log(w)


def from_h_function(upper, lower, m: int, n: int) -> IFunctionParams:
    """Fox H-function: ``(a, alpha)`` pairs, every exponent 1."""
    return _checked(
        IFunctionParams(
            m,
            n,
            tuple(GammaTriple(a, al, 1.0) for a, al in upper),
            tuple(GammaTriple(b, be, 1.0) for b, be in lower),
        )
    )


def from_g_function(a, b, m: int, n: int) -> IFunctionParams:
    """Meijer G-function: unit slopes and exponents."""
    return from_h_function([(x, 1.0) for x in a], [(x, 1.0) for x in b], m, n)


def from_h_bar(upper_special, upper_plain, lower_plain, lower_special) -> IFunctionParams:
    """The H-bar function.

    Free exponents sit on ``upper[:n]`` and ``lower[m:]``; the remaining
    factors have exponent 1, so the ``lower[:m]`` poles are simple.
    """
    upper = tuple(GammaTriple(a, al, A) for a, al, A in upper_special) + tuple(
        GammaTriple(a, al, 1.0) for a, al in upper_plain
    )
    lower = tuple(GammaTriple(b, be, 1.0) for b, be in lower_plain) + tuple(
        GammaTriple(b, be, B) for b, be, B in lower_special
    )
    return _checked(IFunctionParams(len(lower_plain), len(upper_special), upper, lower))


# Feynman integral g(tau, n, mu, m; z)


def _feynman_params(tau, n, mu, m):
    return IFunctionParams(
        1,
        3,
        (
            GammaTriple(1 - tau, 1, 1),
            GammaTriple(1 - tau + 0.5 * mu, 1, 1),
            GammaTriple(1 - n, 1, 1 + m),
        ),
        (
            GammaTriple(0, 1, 1),
            GammaTriple(-0.5 * mu, 1, 1),
            GammaTriple(-n, 1, 1 + m),
        ),
    )


def _feynman_log_prefactor(tau, mu, m, K):
    return (
        math.log(K)
        - (m + 2) * math.log(2.0)
        + gammaln(m + 1)
        + gammaln(1 + 0.5 * mu)
        + betaln(0.5, 0.5 + 0.5 * mu)
        - math.log(math.pi)
        - gammaln(tau)
        - gammaln(tau - 0.5 * mu)
    )


def feynman_g_spec(tau, n, mu, m, K=1.0, z=None) -> SpecialCaseSpec:
    if K <= 0 or tau <= 0 or tau - 0.5 * mu <= 0 or n <= 0 or m <= -1 or mu <= -1:
        raise DomainError("feynman_g needs K > 0, tau > 0, tau > mu/2, n > 0, m > -1, mu > -1")
    params = _checked(_feynman_params(tau, n, mu, m))
    return SpecialCaseSpec(
        "feynman_g",
        {"tau": tau, "n": n, "mu": mu, "m": m, "K": K},
        complex(math.exp(_feynman_log_prefactor(tau, mu, m, K))),
        params,
        None if z is None else _log_negated(z),
    )


def feynman_g(tau, n, mu, m, K, z, tol=1e-10, method="auto") -> EvalResult:
    """Feynman integral ``g``; the I-function is evaluated at ``-z``."""
    return feynman_g_spec(tau, n, mu, m, K, z).evaluate(tol, method)


def feynman_g_series(tau, n, mu, m, K, z, R=50):
    """Terms of the ascending Pochhammer series for ``g`` (valid for ``|z| < 1``).

    Returns the array of the first ``R`` terms, prefactor included.
    """
    r = np.arange(R, dtype=float)
    log_c = (
        gammaln(tau - 0.5 * mu + r) - gammaln(tau - 0.5 * mu)
        + gammaln(tau + r) - gammaln(tau)
        - gammaln(1 + 0.5 * mu + r) + gammaln(1 + 0.5 * mu)
        - (1 + m) * np.log(n + r)
        - gammaln(r + 1)
    )
    pre = K * 2.0 ** (-m - 2) * math.exp(gammaln(m + 1) + betaln(0.5, 0.5 + 0.5 * mu)) / math.pi
    return pre * np.exp(log_c) * complex(z) ** r


# Free energy of a Gaussian model


def _free_energy_params(d):
    return IFunctionParams(
        1,
        2,
        (GammaTriple(0, 1, 2), GammaTriple(-0.5, 1, d)),
        (GammaTriple(0, 1, 1), GammaTriple(-1, 1, 1 + d)),
    )


def gaussian_free_energy_spec(d, epsilon) -> SpecialCaseSpec:
    if d <= 0:
        raise DomainError(f"dimension d must be positive (got {d})")
    if epsilon <= -1:
        raise DomainError(f"epsilon must exceed -1 (got {epsilon})")
    scale = (1.0 + epsilon) ** 2
    return SpecialCaseSpec(
        "gaussian_free_energy",
        {"d": d, "epsilon": epsilon},
        complex(-1.0 / (4.0 * math.pi ** (0.5 * d) * scale)),
        _checked(_free_energy_params(d)),
        complex(-2.0 * math.log1p(epsilon), math.pi),
        ("denominator factor follows the triple (-1, 1, 1+d), i.e. Gamma^(1+d)(2+s)",),
    )


def gaussian_free_energy(d, epsilon, tol=1e-10, method="auto") -> EvalResult:
    """Free energy ``beta F(d; epsilon)`` of the Gaussian model."""
    return gaussian_free_energy_spec(d, epsilon).evaluate(tol, method)


def gaussian_free_energy_terms(d, epsilon, R=50):
    """First ``R`` terms of the Pochhammer series for ``beta F``, prefactor included."""
    r = np.arange(R, dtype=float)
    log_t = (
        gammaln(1 + r)
        + d * (gammaln(1.5 + r) - gammaln(1.5))
        - (1 + d) * gammaln(2 + r)
        - 2 * r * math.log1p(epsilon)
    )
    return -((1 + epsilon) ** -2) * 2.0 ** (-d - 2) * np.exp(log_t)


def gaussian_free_energy_series(d, epsilon, R=50) -> float:
    """Partial sum of the Pochhammer series for ``beta F`` with ``R`` terms."""
    return float(gaussian_free_energy_terms(d, epsilon, R).sum())


# Likelihood-ratio-criterion density


def lrc_density_term_spec(v_plus_r, lam) -> SpecialCaseSpec:
    if v_plus_r <= 0:
        raise DomainError(f"v + r must be positive (got {v_plus_r})")
    if not 0 < lam < 1:
        raise DomainError(f"lambda must lie in (0, 1) (got {lam})")
    k = float(v_plus_r)
    return SpecialCaseSpec(
        "lrc_density_term",
        {"v_plus_r": k, "lambda": lam},
        1 + 0j,
        _checked(IFunctionParams(1, 0, (GammaTriple(1, 1, k),), (GammaTriple(0, 1, k),))),
        complex(math.log(lam), 0.0),
    )


def lrc_density_term(v_plus_r, lam, tol=1e-10, method="auto") -> EvalResult:
    return lrc_density_term_spec(v_plus_r, lam).evaluate(tol, method)


def lrc_density_term_closed_form(v_plus_r, lam) -> float:
    return math.exp((v_plus_r - 1) * math.log(math.log(1.0 / lam)) - gammaln(v_plus_r))


def lrc_v(p_dim) -> float:
    return p_dim * (p_dim + 3) / 4.0


def lrc_density(p_dim, N, K, B, lam, R_terms=None, tol=1e-10) -> EvalResult:
    """Truncated density of ``lambda = L^(2/N)``; ``K`` and ``B`` are caller inputs.

    The outer factor uses ``(2 pi)^(p/2)``.
    """
    B = list(B)
    R = len(B) if R_terms is None else min(R_terms, len(B))
    v = lrc_v(p_dim)
    outer = K * lam ** (0.5 * N - 1) * (2 * math.pi) ** (0.5 * p_dim)
    total, err, partial, methods = 0j, 0.0, [], []
    for r in range(R):
        t = lrc_density_term(v + r, lam, tol)
        methods.append(t.method)
        total += B[r] * t.value
        err += abs(B[r]) * t.abs_error_estimate
        partial.append(outer * total.real)
    warnings = []
    if all(b >= 0 for b in B[:R]) and any(b2 < b1 for b1, b2 in zip(partial, partial[1:])):
        warnings.append("partial sums not monotone despite nonnegative coefficients")
    return EvalResult(
        outer * total,
        abs(outer) * err,
        methods[0] if len(set(methods)) == 1 else "mixed",
        {"v": v, "terms": R, "term_methods": methods, "partial_sums": partial, "warnings": warnings},
    )
