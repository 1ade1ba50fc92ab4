"""Command-line front end.

Exit codes: 0 success, 2 invalid input (parameters, ``z = 0``, domain),
3 no admissible method, 4 numerical failure or a ``compare`` disagreement.
Results go to stdout as JSON (sorted keys, so identical requests give
identical bytes); reasons for failure go to stderr.
"""

from __future__ import annotations

import argparse
import cmath
import json
import math
import sys

from . import special_cases as sc
from .convergence import analyze_log
from .errors import (
    DomainError,
    HigherOrderPoleError,
    IFunctionError,
    NoAdmissibleMethodError,
    PreconditionError,
    ValidationError,
)
from .evaluate import METHODS, evaluate_log
from .params import IFunctionParams, reduce, validate
from .quadrature import _jsonable
from .series import _simple_series, coincident_pole_series

__all__ = ["main", "parse_z", "build_parser"]

EXIT_OK, EXIT_INVALID, EXIT_NO_METHOD, EXIT_NUMERIC = 0, 2, 3, 4


class CliFailure(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def parse_z(text: str):
    """Parse ``re[,im]`` or ``mag@argdeg`` into ``(z, log z)``.

    An angle of exactly +-180 degrees gives ``log z = ln mag +- i pi``, so the
    negative real axis can be addressed from either side.
    """
    text = text.strip()
    try:
        if "@" in text:
            mag_s, ang_s = text.split("@", 1)
            mag, deg = float(mag_s), float(ang_s)
            if mag < 0:
                raise ValueError("magnitude must be nonnegative")
            if mag == 0:
                return 0j, None
            if abs(deg) == 180.0:
                theta = math.copysign(math.pi, deg)
            else:
                theta = math.radians(deg)
            z = cmath.rect(mag, theta)
            if abs(deg) == 180.0:
                z = complex(-mag, 0.0)
            return z, complex(math.log(mag), theta)
        parts = text.split(",")
        if len(parts) > 2:
            raise ValueError("too many components")
        z = complex(float(parts[0]), float(parts[1]) if len(parts) == 2 else 0.0)
    except ValueError as exc:
        raise CliFailure(EXIT_INVALID, f"cannot parse z {text!r}: {exc}") from None
    if z == 0:
        return z, None
    return z, cmath.log(z)


def _load_params(path):
    try:
        with open(path, encoding="utf-8") as fh:
            params = IFunctionParams.from_json(fh.read())
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise CliFailure(EXIT_INVALID, f"cannot read parameters from {path}: {exc}") from None
    return params


def _require_z(args, needed=True):
    if args.z is None:
        if needed:
            raise CliFailure(EXIT_INVALID, "--z is required")
        return None, None
    z, log_z = parse_z(args.z)
    if log_z is None:
        raise CliFailure(EXIT_INVALID, "z must be nonzero")
    return z, log_z


def _checked(params):
    problems = validate(params)
    if problems:
        raise ValidationError(problems)
    return params


def cmd_analyze(args):
    params = _checked(_load_params(args.params))
    _, log_z = _require_z(args)
    return analyze_log(params, log_z).to_dict()


def cmd_eval(args):
    params = _load_params(args.params)
    _, log_z = _require_z(args)
    return evaluate_log(params, log_z, args.tol, args.method, args.terms).to_dict()


def cmd_series(args):
    params = _checked(_load_params(args.params))
    _, log_z = _require_z(args, needed=False)
    tol = args.tol if log_z is not None else None
    try:
        exp = _simple_series(params, args.terms, args.side, log_z, tol)
    except HigherOrderPoleError:
        exp = coincident_pole_series(params, min(args.terms, 50), args.side)
    out = exp.to_dict()
    if log_z is not None:
        value, err = exp.evaluate(log_z=log_z)
        out["value"] = [value.real, value.imag]
        out["abs_error_estimate"] = err
    return out


def cmd_reduce(args):
    return reduce(_checked(_load_params(args.params))).to_dict()


def cmd_compare(args):
    params = _checked(_load_params(args.params))
    _, log_z = _require_z(args)
    results, reasons = {}, {}
    for method in ("quadrature", "series"):
        try:
            results[method] = evaluate_log(params, log_z, args.tol, method, args.terms)
        except NoAdmissibleMethodError as exc:
            reasons[method] = exc.reasons
        except IFunctionError as exc:
            reasons[method] = str(exc)
    out = {m: r.to_dict() for m, r in results.items()}
    if reasons:
        out["unavailable"] = reasons
        out["agree"] = None
        return out, EXIT_NO_METHOD
    q, s = results["quadrature"], results["series"]
    diff = abs(q.value - s.value)
    bound = q.abs_error_estimate + s.abs_error_estimate
    out["difference"] = diff
    out["combined_estimate"] = bound
    out["agree"] = bool(diff <= bound)
    return out, EXIT_OK if out["agree"] else EXIT_NUMERIC


def _read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, ValueError) as exc:
        raise CliFailure(EXIT_INVALID, f"cannot read {path}: {exc}") from None


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join("--" + n.replace("_", "-") for n in missing)
        raise CliFailure(EXIT_INVALID, f"special {args.kind} requires {flags}")


def cmd_special(args):
    kind = args.kind or args.special
    if kind is None:
        raise CliFailure(EXIT_INVALID, "special needs a kind")
    if kind not in sc.KINDS:
        raise CliFailure(EXIT_INVALID, f"unknown kind {kind!r}; choose from {', '.join(sc.KINDS)}")
    args.kind = kind
    if kind in ("h_function", "g_function", "h_bar"):
        _need(args, "spec")
        doc = _read_json(args.spec)
        try:
            if kind == "h_function":
                params = sc.from_h_function(doc["upper"], doc["lower"], doc["m"], doc["n"])
            elif kind == "g_function":
                params = sc.from_g_function(doc["a"], doc["b"], doc["m"], doc["n"])
            else:
                params = sc.from_h_bar(
                    doc.get("upper_special", []),
                    doc.get("upper_plain", []),
                    doc.get("lower_plain", []),
                    doc.get("lower_special", []),
                )
        except (KeyError, TypeError) as exc:
            raise CliFailure(EXIT_INVALID, f"malformed {kind} spec: {exc}") from None
        out = {"kind": kind, "params": params.to_dict()}
        if args.z is not None:
            _, log_z = _require_z(args)
            out["result"] = evaluate_log(params, log_z, args.tol, args.method, args.terms).to_dict()
        return out
    if kind == "feynman_g":
        _need(args, "tau", "n", "mu", "m", "z")
        z, _ = _require_z(args)
        spec = sc.feynman_g_spec(args.tau, args.n, args.mu, args.m, args.K, z)
    elif kind == "gaussian_free_energy":
        _need(args, "d", "epsilon")
        spec = sc.gaussian_free_energy_spec(args.d, args.epsilon)
    else:
        _need(args, "v_plus_r", "lam")
        spec = sc.lrc_density_term_spec(args.v_plus_r, args.lam)
    res = spec.evaluate(args.tol, args.method, args.terms)
    return {"spec": spec.to_dict(), "result": res.to_dict()}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--z", help='argument as "re[,im]" or "mag@argdeg"')
    common.add_argument("--tol", type=float, default=1e-10)
    common.add_argument("--method", choices=METHODS, default="auto")
    common.add_argument("--output", choices=("json", "text"), default="json")
    common.add_argument("--terms", type=int, default=200, help="series terms per pole family")

    parser = argparse.ArgumentParser(prog="ifunction", description="Evaluate and analyse I-functions.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in [
        ("analyze", "convergence parameters and contour admissibility"),
        ("eval", "evaluate I(z)"),
        ("series", "residue series expansion"),
        ("reduce", "cancel matching gamma factors"),
        ("compare", "quadrature against residue series"),
    ]:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("params", help="parameter JSON file")
        if name == "series":
            p.add_argument("--side", choices=("inside", "outside"), default="inside")

    p = sub.add_parser("special", parents=[common], help="named special cases")
    p.add_argument("kind", nargs="?", help=", ".join(sc.KINDS))
    p.add_argument("--special", help="alternative way to give the kind")
    p.add_argument("--spec", help="JSON file for h_function, g_function, h_bar")
    for flag in ("tau", "n", "mu", "m", "d", "epsilon", "v-plus-r", "lam"):
        p.add_argument("--" + flag, type=float)
    p.add_argument("--K", type=float, default=1.0, help="constant K_{a-1} of the Feynman integral")
    return parser


def _merge_values(argv):
    # "--z -1" would read -1 as an option; glue such values to their flag
    out, i = [], 0
    while i < len(argv):
        a = argv[i]
        if a in ("--z", "--tol", "--mu", "--epsilon") and i + 1 < len(argv):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def _as_text(obj, prefix=""):
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            lines.extend(_as_text(obj[k], f"{prefix}{k}."))
    elif isinstance(obj, list) and obj and all(isinstance(v, (dict, list)) for v in obj):
        for i, v in enumerate(obj):
            lines.extend(_as_text(v, f"{prefix}{i}."))
    else:
        lines.append(f"{prefix[:-1]}: {json.dumps(obj)}")
    return lines


COMMANDS = {
    "analyze": cmd_analyze,
    "eval": cmd_eval,
    "series": cmd_series,
    "reduce": cmd_reduce,
    "compare": cmd_compare,
    "special": cmd_special,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(_merge_values(list(sys.argv[1:] if argv is None else argv)))
    code = EXIT_OK
    try:
        if not args.tol > 0:
            raise CliFailure(EXIT_INVALID, "--tol must be positive")
        out = COMMANDS[args.command](args)
        if isinstance(out, tuple):
            out, code = out
    except CliFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ValidationError as exc:
        print("error: invalid parameters:", file=sys.stderr)
        for v in exc.violations:
            print(f"  {v}", file=sys.stderr)
        return EXIT_INVALID
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except NoAdmissibleMethodError as exc:
        print("error: no admissible method:", file=sys.stderr)
        for k in sorted(exc.reasons):
            print(f"  {k}: {exc.reasons[k]}", file=sys.stderr)
        return EXIT_NO_METHOD
    except PreconditionError as exc:
        print(f"error: method not applicable: {exc}", file=sys.stderr)
        return EXIT_NO_METHOD
    except IFunctionError as exc:
        print(f"error: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    out = _jsonable(out)
    if args.output == "json":
        sys.stdout.write(json.dumps(out, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(_as_text(out)) + "\n")
    if code == EXIT_NUMERIC:
        print("error: methods disagree beyond the combined error estimate", file=sys.stderr)
    elif code == EXIT_NO_METHOD:
        print("error: a method was unavailable for comparison", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
