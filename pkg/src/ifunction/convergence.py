"""Convergence parameters and contour admissibility.

All three contour tests are sufficient conditions only, so a negative verdict
means "not guaranteed" rather than "divergent".
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError
from .integrand import principal_log
from .params import IFunctionParams

__all__ = [
    "Verdict",
    "ConvergenceReport",
    "compute_delta",
    "compute_mu",
    "compute_nabla",
    "compute_nu",
    "sigma_strip",
    "analyze",
    "ZERO_TOL",
]

YES, NO, MARGINAL = "yes", "no", "marginal"
ZERO_TOL = 1e-12
ARG_TOL = 1e-10


@dataclass(frozen=True)
class Verdict:
    state: str
    reason: str

    def __bool__(self):
        return self.state == YES

    def to_dict(self):
        return {"state": self.state, "reason": self.reason}


@dataclass(frozen=True)
class ConvergenceReport:
    delta: float
    mu: float
    nabla: float
    nu: float
    contour_a_ok: Verdict
    contour_b_ok: Verdict
    contour_c_ok: Verdict
    abs_z: float
    arg_z: float
    sigma_strip: tuple
    sigma_half_line: tuple | None = None
    default_sigma: float | None = None
    notes: tuple = field(default_factory=tuple)

    def to_dict(self):
        def num(x):
            if x is None:
                return None
            return x if math.isfinite(x) else ("inf" if x > 0 else "-inf")

        return {
            "delta": self.delta,
            "mu": self.mu,
            "nabla": self.nabla,
            "nu": self.nu,
            "abs_z": self.abs_z,
            "arg_z": self.arg_z,
            "contour_a": self.contour_a_ok.to_dict(),
            "contour_b": self.contour_b_ok.to_dict(),
            "contour_c": self.contour_c_ok.to_dict(),
            "sigma_strip": [num(v) for v in self.sigma_strip],
            "sigma_half_line": None
            if self.sigma_half_line is None
            else [num(v) for v in self.sigma_half_line],
            "default_sigma": self.default_sigma,
            "notes": list(self.notes),
        }


def compute_delta(params: IFunctionParams) -> float:
    return (
        sum(t.exponent * t.alpha for t in params.lower_num)
        - sum(t.exponent * t.alpha for t in params.lower_den)
        + sum(t.exponent * t.alpha for t in params.upper_num)
        - sum(t.exponent * t.alpha for t in params.upper_den)
    )


def compute_mu(params: IFunctionParams) -> float:
    return sum(t.exponent * t.alpha for t in params.lower) - sum(
        t.exponent * t.alpha for t in params.upper
    )


def compute_nabla(params: IFunctionParams) -> float:
    return sum(t.exponent * (t.a.real - 0.5) for t in params.upper) - sum(
        t.exponent * (t.a.real - 0.5) for t in params.lower
    )


def compute_nu(params: IFunctionParams) -> float:
    log_nu = sum(t.exponent * t.alpha * math.log(t.alpha) for t in params.lower) - sum(
        t.exponent * t.alpha * math.log(t.alpha) for t in params.upper
    )
    return math.exp(log_nu)


def sigma_strip(params: IFunctionParams):
    """Open interval of abscissae separating the right and left singularities."""
    hi = min((t.a.real / t.alpha for t in params.lower_num), default=math.inf)
    lo = max(((t.a.real - 1.0) / t.alpha for t in params.upper_num), default=-math.inf)
    return lo, hi


def _pick(lo, hi, step=0.5):
    if math.isfinite(lo) and math.isfinite(hi):
        return 0.5 * (lo + hi)
    if math.isfinite(hi):
        return hi - step
    if math.isfinite(lo):
        return lo + step
    return 0.0


def analyze(params: IFunctionParams, z) -> ConvergenceReport:
    """Evaluate the sufficient convergence conditions for all three contours."""
    if complex(z) == 0:
        raise DomainError("z must be nonzero")
    return analyze_log(params, principal_log(z))


def analyze_log(params: IFunctionParams, log_z: complex) -> ConvergenceReport:
    """Same as :func:`analyze` with ``log z`` supplied (fixes the sheet of ``z``)."""
    delta = compute_delta(params)
    mu = compute_mu(params)
    nabla = compute_nabla(params)
    nu = compute_nu(params)
    abs_z = math.exp(log_z.real)
    arg_z = log_z.imag
    lo, hi = sigma_strip(params)
    notes = []
    half_line = None
    sigma = None
    mu_zero = abs(mu) <= ZERO_TOL
    boundary = abs(abs(arg_z) - delta * math.pi / 2) <= ARG_TOL

    if not lo < hi:
        a_ok = Verdict(NO, f"empty contour strip: left singularities reach {lo}, right start at {hi}")
    elif delta > ZERO_TOL and abs(arg_z) < delta * math.pi / 2 - ARG_TOL:
        a_ok = Verdict(YES, f"|arg z| = {abs(arg_z):.6g} < delta*pi/2 = {delta * math.pi / 2:.6g}")
        sigma = _pick(lo, hi)
    elif boundary and delta >= -ZERO_TOL:
        if mu_zero:
            if nabla > 1:
                a_ok = Verdict(YES, f"boundary |arg z| = delta*pi/2 with mu = 0, nabla = {nabla:.6g} > 1")
            else:
                a_ok = Verdict(
                    MARGINAL,
                    f"boundary |arg z| = delta*pi/2 with mu = 0 but nabla = {nabla:.6g} <= 1; "
                    "absolute convergence not guaranteed",
                )
            sigma = _pick(lo, hi)
        else:
            edge = (1.0 - nabla) / mu
            half_line = (edge, math.inf) if mu > 0 else (-math.inf, edge)
            hlo, hhi = max(lo, half_line[0]), min(hi, half_line[1])
            if hlo < hhi:
                sigma = _pick(hlo, hhi)
                a_ok = Verdict(
                    YES,
                    f"boundary |arg z| = delta*pi/2, mu != 0: sigma in ({hlo:.6g}, {hhi:.6g}) "
                    "gives nabla + sigma*mu > 1",
                )
            else:
                a_ok = Verdict(
                    MARGINAL,
                    "boundary |arg z| = delta*pi/2, mu != 0, but no sigma in the strip "
                    "satisfies nabla + sigma*mu > 1",
                )
    else:
        a_ok = Verdict(
            NO, f"|arg z| = {abs(arg_z):.6g} exceeds delta*pi/2 = {delta * math.pi / 2:.6g}"
        )

    if params.q < 1:
        b_ok = Verdict(NO, "q = 0")
    elif mu > ZERO_TOL:
        b_ok = Verdict(YES, f"mu = {mu:.6g} > 0")
    elif mu_zero and abs_z < nu:
        b_ok = Verdict(YES, f"mu = 0 and |z| = {abs_z:.6g} < nu = {nu:.6g}")
    elif mu_zero and abs_z == nu:
        b_ok = Verdict(MARGINAL, "mu = 0 and |z| = nu")
    else:
        b_ok = Verdict(NO, f"mu = {mu:.6g}, |z| = {abs_z:.6g}, nu = {nu:.6g}")

    if params.p < 1:
        c_ok = Verdict(NO, "p = 0")
    elif mu < -ZERO_TOL:
        c_ok = Verdict(YES, f"mu = {mu:.6g} < 0")
    elif mu_zero and abs_z > nu:
        c_ok = Verdict(YES, f"mu = 0 and |z| = {abs_z:.6g} > nu = {nu:.6g}")
    elif mu_zero and abs_z == nu:
        c_ok = Verdict(MARGINAL, "mu = 0 and |z| = nu")
    else:
        c_ok = Verdict(NO, f"mu = {mu:.6g}, |z| = {abs_z:.6g}, nu = {nu:.6g}")

    if sigma is None and lo < hi:
        sigma = _pick(lo, hi)
    if boundary and abs(delta) <= ZERO_TOL:
        notes.append("delta = 0 with arg z = 0 treated as the boundary case")

    return ConvergenceReport(
        delta=delta,
        mu=mu,
        nabla=nabla,
        nu=nu,
        contour_a_ok=a_ok,
        contour_b_ok=b_ok,
        contour_c_ok=c_ok,
        abs_z=abs_z,
        arg_z=arg_z,
        sigma_strip=(lo, hi),
        sigma_half_line=half_line,
        default_sigma=sigma,
        notes=tuple(notes),
    )
