# ---
# jupytext:
#   formats: py:percent
# ---

# %% [markdown]
# # Simulating the walk
#
# `WalkOperator` never builds a matrix.  It keeps the `(n!, C(n,2))` block of
# edge amplitudes `|x, x s>` and applies the two reflections with fancy
# indexing into a right-multiplication table.

# %%
import numpy as np

from szwalk import szegedy
from szwalk.symgroup import identity, unrank

w = szegedy.WalkOperator(5)
state = szegedy.phi_state(identity(5))
for t in range(5):
    dist = szegedy.instantaneous_distribution(state)
    print(t, f"norm={state.norm:.15f}", f"P(identity)={dist[0]:.4f}")
    state = w.step(state)

# %% [markdown]
# Unitarity over a thousand steps from a random start.

# %%
rng = np.random.default_rng(0)
edges = rng.normal(size=(w.size, w.d)) + 1j * rng.normal(size=(w.size, w.d))
edges /= np.linalg.norm(edges)
for _ in range(1000):
    edges = w.edge_step(edges)
print(abs(np.linalg.norm(edges) - 1))

# %% [markdown]
# ## Average mixing
#
# Rows of the average mixing matrix are class functions of `y^-1 x`: every
# permutation of a given cycle type gets the same weight.

# %%
row = szegedy.average_mixing_row(w, unrank(5, 0), 500)
labels = szegedy.cycle_type_labels(5)
by_class = {}
for p, c in zip(row, labels):
    by_class.setdefault(c, []).append(p)
for c, ps in by_class.items():
    print(c, len(ps), f"{np.mean(ps):.5f}", f"spread={np.ptp(ps):.1e}")
print("total", row.sum())
