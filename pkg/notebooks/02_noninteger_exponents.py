"""
Non-integer exponents
=====================

(Gamma(-s) / Gamma(1-s))**k = (-1/s)**k is the Mellin transform of
(ln 1/z)**(k-1) / Gamma(k) on (0, 1).  With k non-integer no H-function
represents it; here it is a two-factor I-function.
"""

# %%
import math

import numpy as np

from ifunction import IFunctionParams, analyze, evaluate


def log_power(k):
    return IFunctionParams(1, 0, ((1, 1, k),), ((0, 1, k),))


# delta = mu = 0: the integrand only decays like |t|^-k and oscillates
rep = analyze(log_power(2.5), 0.3)
print(rep.delta, rep.mu, rep.nabla, rep.contour_a_ok.reason)

# %%
# the tails are integrated as Fourier integrals with frequency ln|z|
for k in (1, 2, 2.5, 3.7, 5):
    row = []
    for z in (0.1, 0.3, 0.7):
        r = evaluate(log_power(k), z)
        exact = math.log(1 / z) ** (k - 1) / math.gamma(k)
        row.append(abs(r.value / exact - 1))
    print(f"k={k:4}: relative errors {np.array(row)}")

# %%
# past z = 1 the inverse transform is zero
print(evaluate(log_power(2.5), 2.0).value)
