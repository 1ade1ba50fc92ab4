import cmath
import math

import numpy as np
import pytest

from ifunction import (
    HigherOrderPoleError,
    IFunctionParams,
    PreconditionError,
    UnsupportedOrderError,
    coincident_pole_series,
    eval_contour_a,
    invert,
    procedure1_leading,
    rescale,
    residue_series_inside,
    residue_series_outside,
    series_eval,
    small_z_order,
)
from scipy.special import kv

from ifunction.special_cases import (
    feynman_g_series,
    feynman_g_spec,
    gaussian_free_energy_spec,
    gaussian_free_energy_terms,
)

from conftest import exp_params, log_power_closed, log_power_params, suite_params

DOUBLE = IFunctionParams(1, 0, ((1, 1, 1),), ((0, 1, 2),))


def test_exponential_coefficients():
    exp = residue_series_inside(exp_params(), R=12)
    assert [t.exponent for t in exp.terms] == list(range(12))
    for r, t in enumerate(exp.terms):
        assert t.coefficient == pytest.approx((-1) ** r / math.factorial(r), rel=1e-14)
        assert t.coefficient.imag == 0


@pytest.mark.parametrize("z", [0.25, 0.5, 1, 2, 4, -1.5, 2j])
def test_exponential_value(z):
    r = series_eval(exp_params(), z)
    assert abs(r.value - cmath.exp(-z)) <= max(r.abs_error_estimate, 1e-14 * abs(cmath.exp(-z))) + 1e-15


def test_inside_exponents_sorted(suite_instance):
    p = IFunctionParams(2, 1, suite_instance.upper, ((0.3, 1, 1), (0.8, 0.5, 1), (0.2, 1, 0.7)))
    exps = [t.exponent.real for t in residue_series_inside(p, R=20).terms]
    assert exps == sorted(exps)


def test_outside_is_inverted_exponential():
    # I(z) = exp(-1/z)
    p = invert(exp_params())
    exp = residue_series_outside(p, R=10)
    assert [t.exponent for t in exp.terms] == [-r for r in range(10)]
    for z in (1.5, 3.0, 0.8):
        r = series_eval(p, z, side="outside")
        assert abs(r.value - math.exp(-1 / z)) <= r.abs_error_estimate + 1e-15


def test_outside_agrees_with_quadrature_on_ring():
    # Gamma(0.4 - s) Gamma(1 + s) Gamma(1.3 + s/2): mu = -0.5 < 0
    p = IFunctionParams(1, 2, ((0, 1, 1), (-0.3, 0.5, 1)), ((0.4, 1, 1),))
    for z in (1.2, 1.9):
        s = series_eval(p, z, side="outside")
        q = eval_contour_a(p, z)
        assert abs(s.value - q.value) <= s.abs_error_estimate + q.abs_error_estimate


def test_no_upper_poles():
    exp = residue_series_outside(exp_params())
    assert len(exp) == 0 and "no upper poles" in exp.diagnostics[0]


def test_non_simple_rejected():
    with pytest.raises(HigherOrderPoleError):
        residue_series_inside(DOUBLE)
    with pytest.raises(HigherOrderPoleError):
        residue_series_inside(IFunctionParams(2, 0, (), ((0, 1, 1), (1, 1, 1))))


def test_pole_meets_blocking_denominator():
    # Gamma(-s)/Gamma(-s): the upper denominator meets every pole
    p = IFunctionParams(1, 0, ((0.5, 0.5, 1),), ((0, 1, 1),))
    with pytest.raises(PreconditionError):
        residue_series_inside(p)


def test_double_pole_against_quadrature():
    exp = coincident_pole_series(DOUBLE, R=50)
    assert any(t.log_power == 1 for t in exp.terms)
    val, err = exp.evaluate(0.5)
    q = eval_contour_a(DOUBLE, 0.5)
    assert abs(val - q.value) <= err + q.abs_error_estimate


def test_coincident_k0():
    # Gamma(-s)^2 gives 2 K_0(2 sqrt z)
    p = IFunctionParams(2, 0, (), ((0, 1, 1), (0, 1, 1)))
    val, err = coincident_pole_series(p, R=40).evaluate(0.3)
    assert abs(val - 2 * kv(0, 2 * math.sqrt(0.3))) < 1e-13


def test_coincident_reduces_to_simple(suite_instance):
    p = IFunctionParams(1, 0, (), ((0, 1, 1),))
    a = coincident_pole_series(p, R=15)
    b = residue_series_inside(p, R=15)
    assert [t.coefficient for t in a.terms] == pytest.approx([t.coefficient for t in b.terms], rel=1e-14)


def test_coincident_preconditions():
    with pytest.raises(PreconditionError):
        coincident_pole_series(log_power_params(2.5))
    with pytest.raises(UnsupportedOrderError):
        coincident_pole_series(IFunctionParams(1, 0, (), ((0, 1, 7),)))


def test_small_z_order():
    assert small_z_order(exp_params()) == 0
    p = IFunctionParams(2, 0, (), ((0.5, 2, 1), (3, 1, 1)))
    assert small_z_order(p) == 0.25
    assert small_z_order(rescale(p, 2)) == pytest.approx(small_z_order(p) / 2)
    with pytest.raises(PreconditionError):
        small_z_order(invert(exp_params()))


def test_small_z_slope():
    p = IFunctionParams(2, 0, (), ((0.5, 2, 1), (3, 1, 1)))
    v2, v3 = (abs(eval_contour_a(p, z).value) for z in (1e-2, 1e-3))
    slope = (math.log(v2) - math.log(v3)) / (math.log(1e-2) - math.log(1e-3))
    assert abs(slope - 0.25) < 0.05


def test_free_energy_termwise():
    d, eps = 1.0, 0.5
    spec = gaussian_free_energy_spec(d, eps)
    exp = residue_series_inside(spec.params, R=21)
    terms = spec.prefactor * exp.term_values(log_z=spec.log_argument)
    ref = gaussian_free_energy_terms(d, eps, 21)
    assert np.max(np.abs(terms / ref - 1)) < 1e-12


def test_feynman_termwise():
    spec = feynman_g_spec(1.5, 2, 1, 0.5, 1.0, 0.5)
    exp = residue_series_inside(spec.params, R=21)
    terms = spec.prefactor * exp.term_values(log_z=spec.log_argument)
    ref = feynman_g_series(1.5, 2, 1, 0.5, 1.0, 0.5, R=21)
    assert np.max(np.abs(terms / ref - 1)) < 1e-12


def test_procedure1_log_power():
    p = log_power_params(3)
    ratios = [procedure1_leading(p, z).value / log_power_closed(3, z) for z in (0.2, 0.5)]
    assert abs(ratios[0] / ratios[1] - 1) < 1e-6
    assert ratios[0] == pytest.approx(-1)


def test_procedure1_preconditions():
    with pytest.raises(PreconditionError):
        procedure1_leading(exp_params(), 0.5)
    with pytest.raises(PreconditionError):
        procedure1_leading(log_power_params(2.5), 0.5)
    r = procedure1_leading(log_power_params(1), 0.3)
    assert r.abs_error_estimate == math.inf and r.method == "specialized"


def test_expansion_json():
    d = residue_series_inside(exp_params(), R=3).to_dict()
    assert d["region"] == "inside" and d["terms"][1]["coefficient"] == [-1.0, 0.0]
