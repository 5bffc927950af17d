# ---
# jupytext:
#   formats: py:percent
# ---

# %% [markdown]
# # Characters of S_n
#
# Character values come from the Murnaghan-Nakayama rule on beta-sets, with
# exact Python integers.  We print the table for S_5, check orthogonality and
# look at the partitions whose characters survive on two-cycle classes.

# %%
from math import factorial

from szwalk import characters as ch
from szwalk.symgroup import class_size

parts, classes, table = ch.character_table(5)
print("class".ljust(12), *(str(c).ljust(12) for c in classes))
for lam, row in zip(parts, table):
    print(str(lam).ljust(12), *(str(v).ljust(12) for v in row))

# %% [markdown]
# Row orthogonality, exactly.

# %%
sizes = [class_size(c) for c in classes]
gram = [[sum(s * a * b for s, a, b in zip(sizes, r1, r2)) for r2 in table] for r1 in table]
assert all(gram[i][j] == (factorial(5) if i == j else 0) for i in range(7) for j in range(7))

# %% [markdown]
# ## Characters on the two-cycle classes
#
# Only partitions of the shape `(mu1, mu2, 2, ..., 2, 1, ..., 1)` have a nonzero
# character on a class with exactly two cycles.  For hooks `(k, 1^(n-k))` the
# value is `(-1)^(n-k-1)` when `k <= l`, `(-1)^(n-k)` when `k > n - l`, and 0 in
# between.  On the balanced class `(n/2, n/2)` values of 2 in absolute value
# do occur.

# %%
n = 8
for mu in ch.enumerate_xi(n):
    print(mu, [ch.char_two_cycle_class(mu, l) for l in range(1, n // 2 + 1)])

# %% [markdown]
# ## Growth on the transposition class
#
# Characters of non-hook members of the family stay far below
# `10 n^6.5 (81/16)^n`.

# %%
for n, rep in ch.beta_bound_sweep(16).items():
    print(n, rep.mu, rep.character, f"{rep.ratio:.2e}")
