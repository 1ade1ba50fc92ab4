"""
Named special cases
===================

The Gaussian-model free energy, the Feynman integral g and the density term
of the likelihood-ratio criterion, each against its own series or closed form.
"""

# %%
import math

from ifunction import special_cases as sc

for d in (0.5, 1, 2):
    for eps in (0.25, 0.5, 1):
        r = sc.gaussian_free_energy(d, eps)
        print(f"d={d} eps={eps}: {r.value.real:.12f}  series {sc.gaussian_free_energy_series(d, eps):.12f}")

# %%
# the argument -(1+eps)^-2 lies on the boundary |arg z| = delta*pi/2
spec = sc.gaussian_free_energy_spec(1, 0.5)
print(spec.log_argument, spec.notes)
print(sc.gaussian_free_energy(1, 0.5, method="quadrature").value)

# %%
g = sc.feynman_g(1.5, 2, 1, 0.5, 1.0, 0.5)
print(g.value.real, sc.feynman_g_series(1.5, 2, 1, 0.5, 1.0, 0.5, 200).sum())

# %%
# p = 2 gives v = 2.5, so the density kernel has a non-integer power
v = sc.lrc_v(2)
for lam in (0.1, 0.3, 0.7):
    print(lam, sc.lrc_density_term(v, lam).value.real, sc.lrc_density_term_closed_form(v, lam))
print(sc.lrc_density(2, 10, 1.0, [1.0, 0.3, 0.1], 0.3).value)
