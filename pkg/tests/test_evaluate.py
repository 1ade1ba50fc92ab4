import cmath
import math

import pytest

from ifunction import (
    DomainError,
    IFunctionParams,
    NoAdmissibleMethodError,
    ValidationError,
    evaluate,
    invert,
)
from ifunction.evaluate import evaluate_log

from conftest import exp_params, log_power_closed, log_power_params


def test_small_z_prefers_series():
    r = evaluate(exp_params(), 0.5)
    assert r.method == "series" and not r.diagnostics["inverted"]


def test_large_z_uses_quadrature():
    r = evaluate(exp_params(), 3.0)
    assert r.method == "quadrature"
    assert abs(r.value - math.exp(-3)) <= r.abs_error_estimate


def test_forced_methods_agree():
    q = evaluate(exp_params(), 1.0, method="quadrature")
    s = evaluate(exp_params(), 1.0, method="series")
    assert (q.method, s.method) == ("quadrature", "series")
    assert abs(q.value - s.value) <= q.abs_error_estimate + s.abs_error_estimate


def test_negative_axis_via_series():
    r = evaluate(exp_params(), -2.0)
    assert r.method == "series" and abs(r.value - math.exp(2)) < 1e-11


def test_marginal_oscillatory_quadrature_override():
    r = evaluate(log_power_params(1), 0.4, method="quadrature")
    assert abs(r.value - 1) < 1e-8 and r.diagnostics["warnings"]


def test_log_power_auto():
    for k in (2.5, 3.7):
        r = evaluate(log_power_params(k), 0.3)
        assert abs(r.value / log_power_closed(k, 0.3) - 1) < 1e-8


def test_outside_only_instance():
    # exp(-1/z): only upper poles, reached through the outside series
    p = invert(exp_params())
    r = evaluate(p, 3.0, method="series")
    assert abs(r.value - math.exp(-1 / 3)) < 1e-12
    with pytest.raises(NoAdmissibleMethodError) as info:
        evaluate(p, cmath.rect(2.0, 2.5), method="quadrature")
    assert "quadrature" in info.value.reasons


def test_inverse_map_identity():
    p = exp_params()
    lz = complex(math.log(2.0), 0.7)
    a = evaluate_log(p, lz, method="quadrature")
    b = evaluate_log(invert(p), -lz, method="quadrature")
    assert abs(a.value - b.value) <= a.abs_error_estimate + b.abs_error_estimate


def test_no_admissible_method():
    # Gamma(-s)/Gamma(0.5 - s)^3: delta = mu = -2 and no upper poles
    p = IFunctionParams(1, 0, ((0.5, 1, 3),), ((0, 1, 1),))
    with pytest.raises(NoAdmissibleMethodError) as info:
        evaluate(p, 5.0)
    reasons = info.value.reasons
    assert {"quadrature", "series-inside", "series-outside"} <= set(reasons)
    assert any(k.startswith("inverted") for k in reasons)


def test_errors():
    with pytest.raises(DomainError):
        evaluate(exp_params(), 0)
    with pytest.raises(ValidationError):
        evaluate(IFunctionParams(1, 1, ((1, 1, 1),), ((0, 1, 1),)), 1.0)
    with pytest.raises(ValueError):
        evaluate(exp_params(), 1.0, method="magic")
