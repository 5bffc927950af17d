# ---
# jupytext:
#   formats: py:percent
# ---

# %% [markdown]
# # Spectrum of the discriminant
#
# The discriminant of the uniform transposition chain is its transition matrix
# `D`.  On the isotypic block of `rho_mu` it acts as `chi_mu(transposition) /
# dim rho_mu`, with multiplicity `dim^2`.  We compare with a dense eigensolver.

# %%
import numpy as np

from szwalk import spectral, szegedy

for value, mult in spectral.spectrum_of_D(5):
    print(f"{str(value):>6}  x{mult}")

# %%
for n in (3, 4, 5, 6):
    numeric = np.sort(np.linalg.eigvalsh(szegedy.discriminant_matrix(n)))
    exact = np.sort(np.concatenate([np.full(m, float(v)) for v, m in spectral.spectrum_of_D(n)]))
    print(n, np.abs(numeric - exact).max())

# %% [markdown]
# Each eigenvalue strictly inside `(-1, 1)` gives `W` a pair of eigenphases
# `±2 theta` with `cos theta = |lambda|`.

# %%
for mu in [(4, 1), (3, 2), (3, 1, 1)]:
    comp = spectral.spectral_component(mu)
    print(mu, comp.lambda_tilde, comp.is_rotation, round(comp.theta, 6) if comp.is_rotation else None)
