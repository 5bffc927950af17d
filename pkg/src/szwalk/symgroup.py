"""Permutations of {0, ..., n-1} and the transposition Cayley structure.

Permutations are stored in one-line notation with 0-based points.  The
canonical vertex index of a permutation is its lexicographic (Lehmer) rank,
so ``unrank(n, 0)`` is the identity and ``unrank(n, n! - 1)`` is the
reversal.  Products follow the convention ``compose(p, q)(i) = p(q(i))``;
the Cayley graph edges are ``g -> g s`` for transpositions ``s``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, prod

import numpy as np

__all__ = [
    "CycleType",
    "Permutation",
    "all_permutations",
    "class_size",
    "compose",
    "cycle_type",
    "identity",
    "inverse",
    "is_partition",
    "partitions",
    "rank",
    "rank_array",
    "right_multiplication_table",
    "transpositions",
    "unrank",
    "z_factor",
]

# A cycle type is a weakly decreasing tuple of positive ints; it shares its
# representation with Partition in the characters module.
CycleType = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {0, ..., n-1} in one-line notation."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __len__(self) -> int:
        return len(self.images)

    def __str__(self) -> str:
        return " ".join(str(i) for i in self.images)

    @classmethod
    def from_string(cls, text: str) -> "Permutation":
        return cls(tuple(int(tok) for tok in text.split()))

    @classmethod
    def from_cycles(cls, n: int, *cycles: tuple[int, ...]) -> "Permutation":
        """Build from disjoint cycles, e.g. ``from_cycles(3, (0, 1))``."""
        images = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
        return cls(tuple(images))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(n)))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p∘q``, i.e. ``i -> p(q(i))``."""
    if p.n != q.n:
        raise ValueError(f"cannot compose permutations of sizes {p.n} and {q.n}")
    return Permutation(tuple(p.images[j] for j in q.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for i, j in enumerate(p.images):
        inv[j] = i
    return Permutation(tuple(inv))


def cycle_type(p: Permutation) -> CycleType:
    """Cycle lengths of ``p`` sorted in decreasing order."""
    seen = [False] * p.n
    lengths = []
    for start in range(p.n):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = p.images[i]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def is_partition(parts, n: int | None = None) -> bool:
    parts = tuple(parts)
    if any(not isinstance(x, (int, np.integer)) or x < 1 for x in parts):
        return False
    if any(a < b for a, b in zip(parts, parts[1:])):
        return False
    return n is None or sum(parts) == n


def partitions(n: int) -> list[CycleType]:
    """All partitions of ``n`` in decreasing lexicographic order."""
    return list(_partitions(n))


@lru_cache(maxsize=None)
def _partitions(n: int) -> tuple[CycleType, ...]:
    out: list[CycleType] = []

    def rec(remaining: int, max_part: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(remaining, max_part), 0, -1):
            rec(remaining - part, part, prefix + (part,))

    rec(n, n, ())
    return tuple(out)


def z_factor(mu: CycleType) -> int:
    """Centralizer order ``z_mu = prod_i m_i! * i**m_i``."""
    return prod(factorial(m) * i**m for i, m in Counter(mu).items())


def class_size(mu: CycleType) -> int:
    """Number of permutations with cycle type ``mu`` (exact integer)."""
    mu = tuple(mu)
    if not is_partition(mu):
        raise ValueError(f"not a partition: {mu}")
    return factorial(sum(mu)) // z_factor(mu)


def rank(p: Permutation) -> int:
    """Lexicographic rank of ``p`` among the permutations of its size."""
    n = p.n
    r = 0
    images = p.images
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if images[j] < images[i])
        r += smaller * factorial(n - 1 - i)
    return r


def unrank(n: int, i: int) -> Permutation:
    """Inverse of :func:`rank`."""
    if not 0 <= i < factorial(n):
        raise ValueError(f"rank {i} out of range for S_{n}")
    pool = list(range(n))
    images = []
    for k in range(n - 1, -1, -1):
        q, i = divmod(i, factorial(k))
        images.append(pool.pop(q))
    return Permutation(tuple(images))


def transpositions(n: int) -> list[Permutation]:
    """All ``C(n, 2)`` transpositions ``(i j)``, ordered by ``i < j`` lexicographically."""
    if n < 2:
        raise ValueError("S_n has no transpositions for n < 2")
    return [Permutation.from_cycles(n, (i, j)) for i, j in itertools.combinations(range(n), 2)]


# -- vectorized helpers used by the walk engine ---------------------------------


@lru_cache(maxsize=16)
def all_permutations(n: int) -> np.ndarray:
    """``(n!, n)`` array of all permutations, row ``r`` is ``unrank(n, r)``."""
    arr = np.array(list(itertools.permutations(range(n))), dtype=np.int8).reshape(-1, n)
    arr.setflags(write=False)
    return arr


def rank_array(perms: np.ndarray) -> np.ndarray:
    """Vectorized :func:`rank` over the rows of an ``(m, n)`` array."""
    perms = np.asarray(perms)
    m, n = perms.shape
    weights = np.array([factorial(n - 1 - i) for i in range(n)], dtype=np.int64)
    out = np.zeros(m, dtype=np.int64)
    for i in range(n - 1):
        smaller = (perms[:, i + 1 :] < perms[:, i : i + 1]).sum(axis=1)
        out += smaller * weights[i]
    return out


@lru_cache(maxsize=16)
def right_multiplication_table(n: int) -> np.ndarray:
    """``table[r, j] = rank(unrank(n, r) ∘ s_j)`` for the transpositions ``s_j``.

    Right multiplication by ``(a b)`` swaps positions ``a`` and ``b`` of the
    one-line notation.
    """
    perms = all_permutations(n)
    pairs = list(itertools.combinations(range(n), 2))
    table = np.empty((perms.shape[0], comb(n, 2)), dtype=np.int64)
    for j, (a, b) in enumerate(pairs):
        swapped = perms.copy()
        swapped[:, [a, b]] = swapped[:, [b, a]]
        table[:, j] = rank_array(swapped)
    table.setflags(write=False)
    return table
