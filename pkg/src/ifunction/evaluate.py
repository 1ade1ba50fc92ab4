"""Method dispatch: pick a convergent representation and evaluate it.

Order of preference for ``method="auto"``:

1. inside residue series when ``|z| < min(1, nu)`` and the series applies;
2. quadrature on the vertical contour when its convergence is guaranteed, or
   when the contour is marginal but the tails are oscillatory with a fixed
   frequency and decay (conditionally convergent, ``mu = 0``);
3. inside residue series wherever contour (b) converges, outside residue
   series wherever contour (c) converges;
4. the same list for the inverted parameters at ``1/z``.
"""

from __future__ import annotations

import math

from .convergence import MARGINAL, ZERO_TOL, analyze_log
from .errors import DomainError, IFunctionError, NoAdmissibleMethodError, ValidationError
from .integrand import principal_log
from .params import IFunctionParams, invert, validate
from .quadrature import EvalResult, _contour_a
from .series import DEFAULT_TERMS, _series_eval

__all__ = ["evaluate", "evaluate_log", "METHODS"]

METHODS = ("auto", "quadrature", "series")


def _oscillatory_marginal(rep, log_z):
    omega = log_z.real - math.log(rep.nu)
    return (
        rep.contour_a_ok.state == MARGINAL
        and abs(rep.mu) <= ZERO_TOL
        and abs(omega) > 1e-9
        and rep.nabla > 0
    )


def _attempts(params, log_z, method, tol, R):
    rep = analyze_log(params, log_z)
    small = rep.abs_z < min(1.0, rep.nu)
    plan = []
    if method in ("auto", "series") and rep.contour_b_ok and small:
        plan.append(("series-inside", lambda: _series_eval(params, log_z, tol, R, "inside")))
    if method in ("auto", "quadrature"):
        if rep.contour_a_ok:
            plan.append(("quadrature", lambda: _contour_a(params, log_z, "auto", tol)))
        elif _oscillatory_marginal(rep, log_z):
            plan.append(
                ("quadrature", lambda: _contour_a(params, log_z, "auto", tol, allow_marginal=True))
            )
        else:
            plan.append(("quadrature", _refuse(f"contour (a): {rep.contour_a_ok.reason}")))
    if method in ("auto", "series"):
        if rep.contour_b_ok:
            if not small:
                plan.append(("series-inside", lambda: _series_eval(params, log_z, tol, R, "inside")))
        else:
            plan.append(("series-inside", _refuse(f"contour (b): {rep.contour_b_ok.reason}")))
        if rep.contour_c_ok:
            plan.append(("series-outside", lambda: _series_eval(params, log_z, tol, R, "outside")))
        else:
            plan.append(("series-outside", _refuse(f"contour (c): {rep.contour_c_ok.reason}")))
    return plan


def _refuse(reason):
    def run():
        raise NoAdmissibleMethodError({"_": reason})

    return run


def evaluate_log(params: IFunctionParams, log_z: complex, tol: float = 1e-10, method: str = "auto",
                 R: int = DEFAULT_TERMS, allow_invert: bool = True) -> EvalResult:
    """Like :func:`evaluate` with ``log z`` given; inversion maps it to ``-log z``."""
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    problems = validate(params)
    if problems:
        raise ValidationError(problems)
    reasons = {}
    for name, run in _attempts(params, log_z, method, tol, R):
        try:
            res = run()
        except NoAdmissibleMethodError as exc:
            reasons[name] = next(iter(exc.reasons.values()))
            continue
        except IFunctionError as exc:
            reasons[name] = str(exc)
            continue
        res.diagnostics.setdefault("inverted", False)
        res.diagnostics["rejected"] = dict(reasons)
        return res
    if allow_invert:
        try:
            res = evaluate_log(invert(params), -log_z, tol, method, R, allow_invert=False)
        except NoAdmissibleMethodError as exc:
            reasons.update({f"inverted {k}": v for k, v in exc.reasons.items()})
        else:
            res.diagnostics["inverted"] = True
            res.diagnostics["rejected"] = {**reasons, **res.diagnostics.get("rejected", {})}
            return res
    raise NoAdmissibleMethodError(reasons)


def evaluate(params: IFunctionParams, z, tol: float = 1e-10, method: str = "auto",
             R: int = DEFAULT_TERMS) -> EvalResult:
    """Evaluate ``I(z)`` by the first admissible method; see the module docstring."""
    if complex(z) == 0:
        raise DomainError("z must be nonzero")
    return evaluate_log(params, principal_log(z), tol, method, R)
