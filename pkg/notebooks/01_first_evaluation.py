"""
A first I-function evaluation
=============================

Build the simplest instance, look at its convergence report and evaluate it
with both methods.  Gamma(-s) alone gives exp(-z).
"""

# %%
import math

from ifunction import GammaTriple, IFunctionParams, analyze, evaluate

p = IFunctionParams(m=1, n=0, upper=(), lower=(GammaTriple(0, 1, 1),))
print(p)
print(p.to_json())

# %%
# delta = 1, so the vertical contour works for |arg z| < pi/2
rep = analyze(p, 1.0)
for key in ("delta", "mu", "nabla", "nu", "sigma_strip", "default_sigma"):
    print(f"{key:>14}: {getattr(rep, key)}")
print("contour a:", rep.contour_a_ok.reason)
print("contour b:", rep.contour_b_ok.reason)

# %%
for z in (0.25, 1.0, 4.0):
    q = evaluate(p, z, method="quadrature")
    s = evaluate(p, z, method="series")
    print(f"z={z:5}  quad={q.value.real:.15f}  series={s.value.real:.15f}  exact={math.exp(-z):.15f}")

# %%
# the dispatcher picks on its own; on the negative axis only the series is admissible
r = evaluate(p, -2.0)
print(r.method, r.value, math.exp(2.0))
