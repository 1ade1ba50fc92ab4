"""Residue-series representations of the I-function.

Closing the vertical contour to the right picks up the poles of the
``lower`` numerator factors (a series in ascending powers of ``z``, the
"inside" expansion); closing to the left picks up the poles of the ``upper``
numerator factors (descending powers, the "outside" expansion).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .convergence import compute_delta, compute_mu, compute_nabla, compute_nu, ZERO_TOL
from .errors import (
    HigherOrderPoleError,
    NonConvergentError,
    PreconditionError,
    UnsupportedOrderError,
    ValidationError,
)
from .gamma_kernel import log_gamma
from .integrand import _log_phi, gamma_factors, principal_log
from .params import IFunctionParams, validate
from .quadrature import EvalResult

__all__ = [
    "SeriesTerm",
    "SeriesExpansion",
    "residue_series_inside",
    "residue_series_outside",
    "coincident_pole_series",
    "series_eval",
    "small_z_order",
    "procedure1_leading",
    "DEFAULT_TERMS",
    "MAX_ORDER",
]

DEFAULT_TERMS = 200
MAX_ORDER = 6
POLE_TOL = 1e-12
_CIRCLE_NODES = 64


@dataclass(frozen=True)
class SeriesTerm:
    """``coefficient * z**exponent * (log z)**log_power``."""

    exponent: complex
    coefficient: complex
    log_power: int = 0
    family: tuple = ()

    def to_dict(self):
        return {
            "exponent": [self.exponent.real, self.exponent.imag],
            "coefficient": [self.coefficient.real, self.coefficient.imag],
            "log_power": self.log_power,
            "family": list(self.family),
        }


@dataclass
class SeriesExpansion:
    terms: list
    region: str
    truncation: dict = field(default_factory=dict)
    pole_families: list = field(default_factory=list)
    diagnostics: list = field(default_factory=list)

    def __len__(self):
        return len(self.terms)

    def term_values(self, z=None, log_z=None):
        if log_z is None:
            log_z = principal_log(z)
        e = np.array([t.exponent for t in self.terms], dtype=complex)
        c = np.array([t.coefficient for t in self.terms], dtype=complex)
        j = np.array([t.log_power for t in self.terms])
        with np.errstate(over="ignore", invalid="ignore"):
            return c * np.exp(e * log_z) * log_z**j

    def evaluate(self, z=None, log_z=None):
        """Sum of all terms at ``z``; returns ``(value, tail_estimate)``."""
        if not self.terms:
            return 0j, 0.0
        vals = self.term_values(z, log_z)
        if not np.all(np.isfinite(vals)):
            raise NonConvergentError("series terms overflow at this z")
        value = complex(vals.sum())
        tail = 0.0
        fams = {}
        for t, v in zip(self.terms, vals):
            fams.setdefault(t.family[:2], []).append(abs(v))
        for mags in fams.values():
            tail += _tail_estimate(mags)
        tail += 4 * np.finfo(float).eps * float(np.abs(vals).sum())
        return value, tail

    def to_dict(self):
        return {
            "region": self.region,
            "terms": [t.to_dict() for t in self.terms],
            "truncation": self.truncation,
            "pole_families": [list(f) for f in self.pole_families],
            "diagnostics": list(self.diagnostics),
        }


def _tail_estimate(mags):
    mags = [m for m in mags]
    if not mags:
        return 0.0
    last = mags[-1]
    if len(mags) < 2 or last == 0.0:
        return last
    prev = mags[-2]
    if prev == 0.0:
        return last
    ratio = last / prev
    if ratio >= 1.0:
        return math.inf
    return last * ratio / (1.0 - ratio)


def _require_valid(params):
    problems = validate(params)
    if problems:
        raise ValidationError(problems)


def _is_int(x, tol=1e-12):
    return abs(x - round(x)) <= tol and round(x) >= 1


def _family_hits(f, s, tol=POLE_TOL):
    """Mask of points ``s`` that are singular points of factor ``f``."""
    x = -f.arg(np.asarray(s, dtype=complex))
    k = np.rint(x.real)
    return (k >= 0) & (np.abs(x - k) < tol * max(1.0, abs(f.slope)))


def _side_groups(side):
    if side == "inside":
        return "lower_num", -1
    if side == "outside":
        return "upper_num", 1
    raise ValueError("side must be 'inside' or 'outside'")


def _simple_series(params, R, side, log_z=None, tol=None):
    _require_valid(params)
    group, orient = _side_groups(side)
    factors = gamma_factors(params)
    poles = [f for f in factors if f.group == group]
    region = side
    if not poles:
        which = "lower" if side == "inside" else "upper"
        return SeriesExpansion([], region, {"terms_per_family": R}, [], [f"no {which} poles"])
    for f in poles:
        if f.exponent != 1.0:
            raise HigherOrderPoleError(
                f"{f.group}[{f.index}] has exponent {f.exponent}; simple-pole series needs 1 "
                "(use coincident_pole_series or quadrature)"
            )
    r = np.arange(R)
    points = {f.index: f.singular_point(r) for f in poles}
    # distinct pole locations across families
    for i, f in enumerate(poles):
        for g in poles[i + 1 :]:
            if _family_hits(g, points[f.index]).any():
                raise HigherOrderPoleError(
                    f"poles of {f.group}[{f.index}] and {g.group}[{g.index}] coincide"
                )
    blocking = "upper_den" if side == "inside" else "lower_den"
    for f in poles:
        for g in factors:
            if g.group == group or not _family_hits(g, points[f.index]).any():
                continue
            if g.sign > 0:
                raise ValidationError([f"{g.group}[{g.index}] is singular at poles of {f.group}[{f.index}]"])
            if g.group == blocking:
                raise PreconditionError(
                    f"singularity of {g.group}[{g.index}] coincides with poles of "
                    f"{f.group}[{f.index}]; use coincident_pole_series"
                )
            if not _is_int(g.exponent):
                raise PreconditionError(
                    f"non-integer power of {g.group}[{g.index}] is singular at poles of "
                    f"{f.group}[{f.index}]"
                )

    terms = []
    fam_info = []
    lastmag = 0.0
    for f in poles:
        s0 = points[f.index]
        logc = np.zeros(R, dtype=complex)
        for g in factors:
            if g is f:
                continue
            logc += _log_phi([g], s0, POLE_TOL)
        logc += -log_gamma(r + 1.0) - math.log(abs(f.slope))
        with np.errstate(over="ignore"):
            coef = np.where(r % 2 == 0, 1.0, -1.0) * np.exp(logc)
        keep = R
        if log_z is not None and tol is not None:
            with np.errstate(over="ignore", invalid="ignore"):
                logmag = (logc + s0 * log_z).real
            mags = np.exp(np.minimum(logmag, 700.0))
            scale = max(float(np.nansum(mags[np.isfinite(mags)])), 1e-300)
            # cut well below tol: the ratio-based tail estimate is only indicative
            small = mags < 1e-3 * tol * scale
            # first index from which every remaining term is negligible
            tailsmall = np.logical_and.accumulate(small[::-1])[::-1]
            idx = np.flatnonzero(tailsmall & (r >= 2))
            if idx.size:
                keep = int(idx[0]) + 1
            lastmag = max(lastmag, float(mags[keep - 1]))
        for k in range(keep):
            terms.append(SeriesTerm(complex(s0[k]), complex(coef[k]), 0, (f.group, f.index, k)))
        fam_info.append((f.group, f.index))
    terms.sort(key=lambda t: (orient * -t.exponent.real, t.family))
    trunc = {"terms_per_family": R}
    if log_z is not None:
        trunc["last_term_magnitude"] = lastmag
    return SeriesExpansion(terms, region, trunc, fam_info, [])


def residue_series_inside(params: IFunctionParams, R: int = DEFAULT_TERMS, z=None, tol=None):
    """Residues at the poles of the ``lower`` numerator factors.

    Each lower numerator exponent must be 1 and the pole families must be
    pairwise disjoint.  Given ``z`` and ``tol``, each family is cut once all
    remaining terms fall below ``tol`` times the total.
    """
    log_z = None if z is None else principal_log(z)
    return _simple_series(params, R, "inside", log_z, tol)


def residue_series_outside(params: IFunctionParams, R: int = DEFAULT_TERMS, z=None, tol=None):
    """Residues at the poles of the ``upper`` numerator factors (descending powers)."""
    log_z = None if z is None else principal_log(z)
    return _simple_series(params, R, "outside", log_z, tol)


def _singular_neighbours(f, s0):
    """Distances from ``s0`` to the nearest singular points of ``f`` other than ``s0``."""
    x = (-f.arg(s0)).real
    ks = np.arange(max(0, math.floor(x) - 1), max(0, math.ceil(x) + 2))
    pts = f.singular_point(ks.astype(float))
    d = np.abs(pts - s0)
    d = d[d > 1e-9]
    return float(d.min()) if d.size else math.inf


def coincident_pole_series(params: IFunctionParams, R: int = 50, side: str = "inside"):
    """Residue series allowing higher-order poles and pole/zero cancellation.

    The pole-carrying factors (``lower`` numerators for ``side="inside"``,
    ``upper`` numerators for ``"outside"``) and any denominator factor whose
    singularities meet them must have positive integer exponents.  Residues
    of order ``k`` produce terms ``c_j z^s0 (log z)^j`` for ``j < k``; their
    Laurent coefficients come from the trapezoidal rule on a small circle
    around the pole.
    """
    _require_valid(params)
    group, orient = _side_groups(side)
    factors = gamma_factors(params)
    poles = [f for f in factors if f.group == group]
    if not poles:
        which = "lower" if side == "inside" else "upper"
        return SeriesExpansion([], side, {"terms_per_family": R}, [], [f"no {which} poles"])
    for f in poles:
        if not _is_int(f.exponent):
            raise PreconditionError(
                f"{f.group}[{f.index}] exponent {f.exponent} is not a positive integer; "
                "its singularities are branch points"
            )
    r = np.arange(R, dtype=float)
    cand = np.concatenate([f.singular_point(r) for f in poles])
    cand = cand[np.lexsort((cand.imag, cand.real))]
    uniq = []
    for s in cand:
        if not uniq or abs(s - uniq[-1]) > 1e-9 * max(1.0, abs(s)):
            uniq.append(complex(s))
    terms = []
    diags = []
    for s0 in uniq:
        order = 0.0
        hits = []
        for f in factors:
            if not _family_hits(f, s0)[()]:
                continue
            if f.sign > 0 and f.group != group:
                raise ValidationError([f"{f.group}[{f.index}] is singular at the pole s={s0}"])
            if not _is_int(f.exponent):
                raise PreconditionError(
                    f"non-integer power of {f.group}[{f.index}] is singular at s={s0}"
                )
            order += f.sign * round(f.exponent)
            hits.append(f)
        order = int(order)
        if order <= 0:
            diags.append(f"s={s0}: pole cancelled (order {order})")
            continue
        if order > MAX_ORDER:
            raise UnsupportedOrderError(f"pole of order {order} at s={s0} (max {MAX_ORDER})")
        label = tuple(f"{f.group}[{f.index}]" for f in hits)
        if order == 1 and len(hits) == 1 and hits[0].exponent == 1.0:
            f = hits[0]
            k = int(round((-f.arg(s0)).real))
            logc = _log_phi([g for g in factors if g is not f], s0, POLE_TOL)
            logc += -log_gamma(k + 1.0) - math.log(abs(f.slope))
            coef = (-1) ** k * complex(np.exp(logc))
            terms.append(SeriesTerm(s0, coef, 0, (f.group, f.index, k)))
            continue
        # circle radius: half the distance to the nearest other singular point
        dist = math.inf
        for f in factors:
            if f.sign > 0 or not _is_int(f.exponent):
                dist = min(dist, _singular_neighbours(f, s0))
        rho = min(0.5, 0.5 * dist)
        for f in factors:
            if _is_int(f.exponent):
                continue
            w0 = f.arg(s0)
            if w0.real < 0 and abs(w0.imag) < rho * abs(f.slope):
                raise PreconditionError(
                    f"branch cut of non-integer power {f.group}[{f.index}] passes the pole s={s0}"
                )
        theta = 2 * np.pi * np.arange(_CIRCLE_NODES) / _CIRCLE_NODES
        ds = rho * np.exp(1j * theta)
        vals = np.exp(_log_phi(factors, s0 + ds, POLE_TOL))
        fam = hits[0]
        k0 = int(round((-fam.arg(s0)).real))
        for j in range(order):
            a = complex(np.mean(vals * ds ** (1 + j)))
            terms.append(
                SeriesTerm(s0, orient * a / math.factorial(j), j, (fam.group, fam.index, k0, label))
            )
        diags.append(f"s={s0}: order {order} from {', '.join(label)}")
    terms.sort(key=lambda t: (orient * -t.exponent.real, t.log_power))
    return SeriesExpansion(
        terms, side, {"terms_per_family": R}, [(f.group, f.index) for f in poles], diags
    )


def series_eval(params: IFunctionParams, z, tol: float = 1e-10, R: int = DEFAULT_TERMS, side="inside"):
    """Evaluate through the simple-pole residue series on ``side``."""
    return _series_eval(params, principal_log(z), tol, R, side)


def _series_eval(params, log_z, tol=1e-10, R=DEFAULT_TERMS, side="inside"):
    try:
        # all R terms: cheap, and early cuts make the ratio tail estimate optimistic
        exp = _simple_series(params, R, side, log_z, None)
    except HigherOrderPoleError:
        exp = coincident_pole_series(params, min(R, 50), side)
    if not exp.terms:
        raise PreconditionError(exp.diagnostics[0] if exp.diagnostics else "empty expansion")
    value, err = exp.evaluate(log_z=log_z)
    if not math.isfinite(err):
        raise NonConvergentError(f"{side} residue series not converged after {R} terms per family")
    diag = {"side": side, "terms": len(exp.terms), "terms_per_family": R, "warnings": []}
    return EvalResult(value, float(err), "series", diag)


def small_z_order(params: IFunctionParams) -> complex:
    """Exponent ``b_j / beta_j`` (j <= m) of smallest real part."""
    if params.m < 1:
        raise PreconditionError("m = 0: no lower poles, no small-z power law")
    best = None
    for t in params.lower_num:
        c = t.a / t.alpha
        if best is None or c.real < best.real:
            best = c
    return complex(best)


def procedure1_constants(params: IFunctionParams, phase=None):
    """Constants ``(A, B)`` of the large-``s`` form ``phi(s) ~ A B^s s^-nabla``.

    ``phase`` stands for the ``(-1)^(-delta/2)`` factor in ``B``; by default
    ``exp(-i pi delta / 2)``.  Non-integer powers of ``-1`` in ``A`` use
    ``exp(i pi x)``.
    """
    sign_exp = sum(t.exponent * (t.a.real - 0.5) for t in params.lower_num) - sum(
        t.exponent * (t.a.real - 0.5) for t in params.upper_den
    )
    two_pi_exp = 0.5 * (
        sum(t.exponent for t in params.lower_num)
        - sum(t.exponent for t in params.lower_den)
        + sum(t.exponent for t in params.upper_num)
        - sum(t.exponent for t in params.upper_den)
    )
    log_prod = sum(t.exponent * (t.a.real - 0.5) * math.log(t.alpha) for t in params.lower) + sum(
        t.exponent * (0.5 - t.a.real) * math.log(t.alpha) for t in params.upper
    )
    A = cmath.exp(1j * math.pi * sign_exp) * math.exp(-two_pi_exp * math.log(2 * math.pi) + log_prod)
    delta = compute_delta(params)
    if phase is None:
        phase = cmath.exp(-1j * math.pi * delta / 2)
    B = complex(phase) / compute_nu(params)
    return complex(A), B


def procedure1_leading(params: IFunctionParams, z, phase=None) -> EvalResult:
    """Leading logarithmic term ``A [ln(Bz)]^(nabla-1) / (nabla-1)!``.

    Requires real shifts, ``mu = 0``, a positive integer ``nabla`` and
    ``B z > 0``.  Only the ``c_0`` term is produced, so the result is a
    leading-order asymptotic form without an error bound.
    """
    _require_valid(params)
    if not params.is_real():
        raise PreconditionError("all shifts a_j, b_j must be real")
    mu = compute_mu(params)
    if abs(mu) > ZERO_TOL:
        raise PreconditionError(f"mu = {mu} != 0")
    nabla = compute_nabla(params)
    if not (abs(nabla - round(nabla)) <= 1e-9 and round(nabla) >= 1):
        raise PreconditionError(f"nabla = {nabla} is not a positive integer")
    k = int(round(nabla))
    A, B = procedure1_constants(params, phase)
    bz = B * complex(z)
    if not (bz.real > 0 and abs(bz.imag) <= 1e-12 * abs(bz)):
        raise PreconditionError(f"B z = {bz} is not positive")
    value = A * math.log(bz.real) ** (k - 1) / math.factorial(k - 1)
    diag = {
        "order": "leading (c_0 only)",
        "A": A,
        "B": B,
        "nabla": k,
        "warnings": ["leading-order asymptotic form; no error bound"],
    }
    return EvalResult(complex(value), math.inf, "specialized", diag)
