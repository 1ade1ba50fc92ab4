"""
Residue series
==============

Closing the contour to the right sums residues at the lower numerator poles
(ascending powers); closing to the left uses the upper numerator poles.
Coinciding poles give log z terms.
"""

# %%
import math

from scipy.special import kv

from ifunction import (
    IFunctionParams,
    coincident_pole_series,
    eval_contour_a,
    invert,
    residue_series_inside,
    residue_series_outside,
)

exp_p = IFunctionParams(1, 0, (), ((0, 1, 1),))
series = residue_series_inside(exp_p, R=6)
for t in series.terms:
    print(t.exponent.real, t.coefficient.real)

# %%
# the inverted parameters describe exp(-1/z): descending powers
out = residue_series_outside(invert(exp_p), R=40)
print(out.evaluate(3.0)[0], math.exp(-1 / 3))

# %%
# Gamma(-s)^2 has double poles; the sum is 2 K_0(2 sqrt z)
k0 = IFunctionParams(2, 0, (), ((0, 1, 1), (0, 1, 1)))
exp = coincident_pole_series(k0, R=40)
print(exp.terms[:2])
z = 0.3
print(exp.evaluate(z)[0].real, 2 * kv(0, 2 * math.sqrt(z)), eval_contour_a(k0, z).value.real)
