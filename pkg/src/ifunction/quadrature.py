"""Numerical evaluation of the I-function along a vertical contour.

With ``s = sigma + i t`` the defining integral becomes

    I(z) = (1 / 2 pi) * integral_{-inf}^{inf} phi(sigma + i t) z^(sigma + i t) dt.

The window ``[-T_-, T_+]`` is integrated by adaptive Gauss-Kronrod (7/15)
subdivision.  Each tail is handled according to its large-``|t|`` envelope
``C |t|^(-nabla - sigma*mu) exp(-t arg z - pi |t| delta / 2)``:

* exponential decay: ``T`` is doubled until the envelope bound on the tail is
  below tolerance;
* algebraic decay with a fixed oscillation frequency ``ln(|z| / nu)``
  (``mu = 0``): the tail is integrated as a Fourier integral;
* algebraic decay without fixed frequency: envelope bound with ``T`` doubling,
  capped at ``T_MAX``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate

from .convergence import MARGINAL, NO, ZERO_TOL, analyze_log
from .errors import ContourError, NonConvergentError, ValidationError
from .integrand import _integrand, gamma_factors, principal_log
from .params import IFunctionParams, validate

__all__ = ["EvalResult", "eval_contour_a", "gauss_kronrod", "T_MAX"]

T_MAX = 1e6
MAX_INTERVALS = 20000

# 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1]
_XK = np.array(
    [
        -0.991455371120812639206854697526329,
        -0.949107912342758524526189684047851,
        -0.864864423359769072789712788640926,
        -0.741531185599394439863864773280788,
        -0.586087235467691130294144845693013,
        -0.405845151377397166906606412076961,
        -0.207784955007898467600689403773245,
        0.0,
        0.207784955007898467600689403773245,
        0.405845151377397166906606412076961,
        0.586087235467691130294144845693013,
        0.741531185599394439863864773280788,
        0.864864423359769072789712788640926,
        0.949107912342758524526189684047851,
        0.991455371120812639206854697526329,
    ]
)
_WK = np.array(
    [
        0.022935322010529224963732008058970,
        0.063092092629978553290700663189204,
        0.104790010322250183839876322541518,
        0.140653259715525918745189590510238,
        0.169004726639267902826583426598550,
        0.190350578064785409913256402421014,
        0.204432940075298892414161999234649,
        0.209482141084727828012999174891714,
        0.204432940075298892414161999234649,
        0.190350578064785409913256402421014,
        0.169004726639267902826583426598550,
        0.140653259715525918745189590510238,
        0.104790010322250183839876322541518,
        0.063092092629978553290700663189204,
        0.022935322010529224963732008058970,
    ]
)
_WG = np.zeros(15)
_WG[1::2] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082,
]


@dataclass
class EvalResult:
    value: complex
    abs_error_estimate: float
    method: str
    diagnostics: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "value": [self.value.real, self.value.imag],
            "abs_error_estimate": self.abs_error_estimate,
            "method": self.method,
            "diagnostics": _jsonable(self.diagnostics),
        }

    def scaled(self, factor, method=None, **extra):
        """Result multiplied by a constant prefactor."""
        diag = dict(self.diagnostics)
        diag.update(extra)
        return EvalResult(
            complex(factor) * self.value,
            abs(complex(factor)) * self.abs_error_estimate,
            method or self.method,
            diag,
        )


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, float) and not math.isfinite(obj):
        return str(obj)
    return obj


def gauss_kronrod(f, a, b, tol, initial=16, max_intervals=MAX_INTERVALS):
    """Globally adaptive G7/K15 quadrature of a vectorised complex ``f``.

    Returns ``(value, error_estimate, n_evaluations)``; the estimate is the sum
    of ``|K15 - G7|`` over the final panels.
    """
    edges = np.linspace(a, b, initial + 1)
    lo, hi = edges[:-1], edges[1:]
    n_eval = 0

    def panels(lo, hi):
        half = 0.5 * (hi - lo)
        mid = 0.5 * (hi + lo)
        x = mid[:, None] + half[:, None] * _XK[None, :]
        y = np.asarray(f(x.ravel()), dtype=complex).reshape(x.shape)
        k = (y @ _WK) * half
        g = (y @ _WG) * half
        return k, np.abs(k - g)

    est, err = panels(lo, hi)
    n_eval += 15 * lo.size
    while err.sum() > tol:
        if lo.size >= max_intervals:
            break
        # split the panels carrying the largest share of the error
        order = np.argsort(err)[::-1]
        csum = np.cumsum(err[order])
        nsplit = max(1, int(np.searchsorted(csum, 0.5 * csum[-1])) + 1)
        pick = order[:nsplit]
        keep = np.ones(lo.size, bool)
        keep[pick] = False
        mid = 0.5 * (lo[pick] + hi[pick])
        nlo = np.concatenate([lo[pick], mid])
        nhi = np.concatenate([mid, hi[pick]])
        nest, nerr = panels(nlo, nhi)
        n_eval += 15 * nlo.size
        lo = np.concatenate([lo[keep], nlo])
        hi = np.concatenate([hi[keep], nhi])
        est = np.concatenate([est[keep], nest])
        err = np.concatenate([err[keep], nerr])
    order = np.argsort(lo)
    return complex(np.sum(est[order])), float(err.sum()), n_eval


class _Kernel:
    """``g(t) = phi(sigma + i t) z^(sigma + i t) / (2 pi)`` for real ``t``."""

    def __init__(self, params, log_z, sigma):
        self.factors = gamma_factors(params)
        self.log_z = log_z
        self.sigma = sigma

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        return _integrand(self.factors, self.log_z, self.sigma + 1j * t) / (2.0 * math.pi)


def _envelope_tail(g, side, T, rate, power):
    """Envelope bound on ``int_T^inf |g(side*u)| du`` from samples near ``T``."""
    u = T * np.array([0.8, 0.9, 1.0])
    mags = np.abs(g(side * u))
    lam = -rate
    consts = mags * u**power * np.exp(lam * u)
    c_est = float(np.max(consts))
    if lam > ZERO_TOL:
        denom = lam + min(power, 0.0) / T
        if denom <= 0:
            return math.inf
        return c_est * T ** (-power) * math.exp(-lam * T) / denom
    if power <= 1.0:
        return math.inf
    return c_est * T ** (1.0 - power) / (power - 1.0)


def _fourier_tail(g, side, T, omega, tol):
    """``int_T^inf g(side*u) du`` for ``g(side*u) ~ h(u) exp(i side omega u)``, ``h`` smooth."""
    w = side * omega
    cache = {}

    def h(u):
        val = cache.get(u)
        if val is None:
            val = complex(g(np.array([side * u]))[0] * np.exp(-1j * w * u))
            cache[u] = val
        return val

    absw = abs(w)
    sgn = 1.0 if w > 0 else -1.0
    parts = {}
    notes = []
    for name, comp, weight in (
        ("rc", lambda u: h(u).real, "cos"),
        ("rs", lambda u: h(u).real, "sin"),
        ("ic", lambda u: h(u).imag, "cos"),
        ("is", lambda u: h(u).imag, "sin"),
    ):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            val, err = integrate.quad(
                comp, T, np.inf, weight=weight, wvar=absw, epsabs=tol / 8, limlst=200
            )
        notes.extend(str(c.message).splitlines()[0] for c in caught)
        parts[name] = (val, err)
    # exp(i w u) = cos|w|u + i sgn sin|w|u
    re = parts["rc"][0] - sgn * parts["is"][0]
    im = sgn * parts["rs"][0] + parts["ic"][0]
    err = sum(e for _, e in parts.values())
    return complex(re, im), float(err), len(cache), notes


def _require_valid(params):
    problems = validate(params)
    if problems:
        raise ValidationError(problems)


def eval_contour_a(params: IFunctionParams, z, sigma="auto", tol: float = 1e-10, allow_marginal=False):
    """Integrate along the vertical line ``Re s = sigma``.

    ``sigma="auto"`` takes the default abscissa from the convergence analysis.
    A "marginal" contour verdict is refused unless ``allow_marginal`` is set.
    """
    return _contour_a(params, principal_log(z), sigma, tol, allow_marginal)


def _contour_a(params, log_z, sigma="auto", tol=1e-10, allow_marginal=False):
    _require_valid(params)
    rep = analyze_log(params, log_z)
    lo, hi = rep.sigma_strip
    if not lo < hi:
        raise ContourError(rep.contour_a_ok.reason)
    verdict = rep.contour_a_ok
    warn = []
    if verdict.state == NO:
        raise NonConvergentError(f"contour (a) not admissible: {verdict.reason}")
    if verdict.state == MARGINAL:
        if not allow_marginal:
            raise NonConvergentError(f"contour (a) marginal: {verdict.reason}")
        warn.append(f"marginal contour accepted: {verdict.reason}")
    if sigma == "auto" or sigma is None:
        sigma = rep.default_sigma
    sigma = float(sigma)
    if not lo < sigma < hi:
        raise ContourError(f"sigma={sigma} outside the separating strip ({lo}, {hi})")

    g = _Kernel(params, log_z, sigma)
    power = rep.nabla + sigma * rep.mu
    omega = log_z.real - math.log(rep.nu)
    mu_zero = abs(rep.mu) <= ZERO_TOL

    # per side: rate of exponential decay in |t| (negative means decaying)
    sides = {}
    for side in (1, -1):
        rate = -side * rep.arg_z - math.pi * rep.delta / 2
        if rate < -1e-9:
            kind = "exponential"
        elif rate > 1e-9:
            raise NonConvergentError(f"integrand grows along the contour (side {side:+d})")
        elif mu_zero and abs(omega) > 1e-9:
            kind = "fourier"
        else:
            kind = "algebraic"
            if power <= 1.0:
                raise NonConvergentError(
                    f"algebraic tail |t|^-{power:.6g} is not integrable (side {side:+d})"
                )
        sides[side] = (kind, max(rate, -math.inf))

    tails = {}
    T_used = {}
    tail_err = 0.0
    tail_val = 0j
    tail_nodes = 0
    for side, (kind, rate) in sides.items():
        if kind == "fourier":
            T = max(8.0, 4.0 * 2 * math.pi / abs(omega))
            val, err, nev, notes = _fourier_tail(g, side, T, omega, tol)
            tail_val += val
            tail_err += err
            tail_nodes += nev
            warn.extend(notes)
        else:
            T = 4.0
            while True:
                bound = _envelope_tail(g, side, T, rate if kind == "exponential" else 0.0, power)
                if bound < tol / 4:
                    break
                T *= 2.0
                if T > T_MAX:
                    raise NonConvergentError(
                        f"tail envelope above tolerance at T={T_MAX:g} (side {side:+d})"
                    )
            tail_err += bound
        T_used[side] = T
        tails[side] = kind

    Tm, Tp = T_used[-1], T_used[1]
    span = Tm + Tp
    n_init = int(min(2000, max(16, 4 * span * max(abs(omega), 1.0) / (2 * math.pi))))
    with np.errstate(over="ignore", under="ignore"):
        core, core_err, n_eval = gauss_kronrod(g, -Tm, Tp, tol / 2, initial=n_init)
    if core_err > tol / 2:
        warn.append(f"window quadrature error {core_err:.3g} above target {tol / 2:.3g}")
    value = core + tail_val
    err = core_err + tail_err
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise NonConvergentError("non-finite quadrature result")
    diagnostics = {
        "sigma": sigma,
        "T": [Tm, Tp],
        "tails": {"+": tails[1], "-": tails[-1]},
        "nodes": n_eval + tail_nodes,
        "warnings": warn,
    }
    return EvalResult(value, err, "quadrature", diagnostics)
