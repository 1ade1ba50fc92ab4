"""
Transformation identities
=========================

Shift, rescale, inversion, permutation and factor cancellation, checked
numerically on a five-factor instance with non-integer exponents.
"""

# %%
import math

from ifunction import IFunctionParams, evaluate, invert, reduce, rescale, shift
from ifunction.evaluate import evaluate_log

p = IFunctionParams(2, 1, ((0.4, 1, 1.2), (0.9, 0.6, 0.8)), ((0.3, 1, 1.5), (0.8, 0.5, 1), (0.2, 1, 0.7)))
z = 0.7
base = evaluate(p, z)
print("I(z) =", base.value, "+-", base.abs_error_estimate)

# %%
lz = complex(math.log(z))
print("shift     ", evaluate(shift(p, 1.0), z).value, z * base.value)
print("rescale   ", 2 * evaluate_log(rescale(p, 2.0), 2 * lz).value, base.value)
print("inversion ", evaluate_log(invert(p), -lz).value, base.value)

# %%
# an upper numerator triple equal to a lower denominator triple cancels
aug = IFunctionParams(p.m, p.n + 1, ((0.1, 1, 1.3),) + p.upper, p.lower + ((0.1, 1, 1.3),))
print(reduce(aug) == p, evaluate(aug, z).value)
