"""
Small-z order and the leading log term
======================================

The smallest lower pole sets the small-z power law; for mu = 0 and integer
nabla the leading large-s form gives a power of ln z.
"""

# %%
import math

from ifunction import IFunctionParams, evaluate, procedure1_leading, small_z_order

p = IFunctionParams(2, 0, (), ((0.5, 2, 1), (3, 1, 1)))
c = small_z_order(p)
vals = {z: abs(evaluate(p, z).value) for z in (1e-2, 1e-3)}
slope = math.log(vals[1e-2] / vals[1e-3]) / math.log(10)
print("order", c, "measured slope", slope)

# %%
# (ln 1/z)^2 / 2 for k = 3; the constant comes out as -1 (contour orientation)
lp = IFunctionParams(1, 0, ((1, 1, 3),), ((0, 1, 3),))
for z in (0.2, 0.5):
    lead = procedure1_leading(lp, z)
    print(z, lead.value.real, math.log(1 / z) ** 2 / 2, lead.diagnostics["A"])
