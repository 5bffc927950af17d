"""Matrix-free Szegedy walk on the transposition Cayley graph of S_n.

The walk lives on the pair space with basis ``|x, y>``; the dense layout of a
:class:`WalkState` puts the first register major, ``index(x, y) =
rank(x) * n! + rank(y)``.

Only the ``n! * d`` edge coordinates ``|x, x s>`` (``s`` a transposition,
``d = C(n, 2)``) are ever touched by ``A^†`` or ``B^†``.  Everything else sits
in ``ker A^† ∩ ker B^†`` where ``W = R_B R_A`` acts as the identity, so the
engine evolves the ``(n!, d)`` edge block and leaves the rest alone.  Edge
block entry ``[x, j]`` holds the amplitude of ``|x, x s_j>`` with ``s_j`` the
``j``-th element of :func:`symgroup.transpositions`.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from math import comb, factorial, sqrt
from typing import Iterator

import numpy as np

from .symgroup import (
    Permutation,
    all_permutations,
    cycle_type,
    rank,
    right_multiplication_table,
    transpositions,
    unrank,
)

__all__ = [
    "WalkOperator",
    "WalkState",
    "average_mixing_row",
    "averaged_distribution",
    "basis_probability_series",
    "basis_state_probability",
    "cycle_type_labels",
    "discriminant_matrix",
    "instantaneous_distribution",
    "max_simulation_n",
    "ncycle_mask",
    "ncycle_mass_series",
    "ncycle_state",
    "overlap_series",
    "phi_state",
]

DEFAULT_MAX_N = 7


def max_simulation_n() -> int:
    """Largest ``n`` for which a dense ``(n!)^2`` state may be allocated (env ``SZW_MAX_N``)."""
    return int(os.environ.get("SZW_MAX_N", DEFAULT_MAX_N))


def _guard(n: int) -> None:
    if n < 2:
        raise ValueError("the walk needs n >= 2")
    if n > max_simulation_n():
        raise MemoryError(
            f"a dense state for n={n} has {factorial(n) ** 2} amplitudes; "
            f"raise SZW_MAX_N (currently {max_simulation_n()}) to allow it"
        )


@dataclass
class WalkState:
    """Complex amplitudes over ordered pairs of permutations, first register major."""

    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        size = factorial(self.n)
        self.amplitudes = np.asarray(self.amplitudes, dtype=np.complex128).reshape(-1)
        if self.amplitudes.shape != (size * size,):
            raise ValueError(f"expected {size * size} amplitudes for n={self.n}")

    @classmethod
    def zeros(cls, n: int) -> "WalkState":
        _guard(n)
        return cls(n, np.zeros(factorial(n) ** 2, dtype=np.complex128))

    @classmethod
    def from_edges(cls, n: int, edges: np.ndarray) -> "WalkState":
        state = cls.zeros(n)
        state.amplitudes[_edge_index(n)] = edges
        return state

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def matrix(self) -> np.ndarray:
        """View as an ``(n!, n!)`` array indexed by ``[rank(x), rank(y)]``."""
        size = factorial(self.n)
        return self.amplitudes.reshape(size, size)

    def edges(self) -> np.ndarray:
        return self.amplitudes[_edge_index(self.n)]

    def inner(self, other: "WalkState") -> complex:
        """``<self|other>``."""
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def amplitude(self, x: Permutation, y: Permutation) -> complex:
        return complex(self.matrix()[rank(x), rank(y)])


def _edge_index(n: int) -> np.ndarray:
    size = factorial(n)
    return np.arange(size)[:, None] * size + right_multiplication_table(n)


class WalkOperator:
    """``W = R_B R_A`` for the uniform transposition chain on S_n.

    ``A = sum_x |phi_x><x|`` and ``B = sum_y |psi_y><y|`` with
    ``phi_x = d^-1/2 sum_s |x, x s>`` and ``psi_y = d^-1/2 sum_s |y s, y>``.
    """

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("the walk needs n >= 2")
        self.n = n
        self.d = comb(n, 2)
        self.size = factorial(n)
        self.generators = transpositions(n)
        self.weight = 1.0 / self.d
        self._right = right_multiplication_table(n)
        self._cols = np.arange(self.d)[None, :]
        self._scale = 1.0 / sqrt(self.d)

    def __repr__(self):
        return f"WalkOperator(n={self.n})"

    # -- edge-block kernels ---------------------------------------------------

    def edge_A_adjoint(self, edges: np.ndarray) -> np.ndarray:
        return edges.sum(axis=1) * self._scale

    def edge_B_adjoint(self, edges: np.ndarray) -> np.ndarray:
        return edges[self._right, self._cols].sum(axis=1) * self._scale

    def edge_A(self, v: np.ndarray) -> np.ndarray:
        return np.repeat((np.asarray(v) * self._scale)[:, None], self.d, axis=1)

    def edge_B(self, v: np.ndarray) -> np.ndarray:
        return np.asarray(v)[self._right] * self._scale

    def edge_step(self, edges: np.ndarray) -> np.ndarray:
        """One application of ``W`` to an ``(n!, d)`` edge block."""
        reflected = 2.0 * self._scale * self.edge_A_adjoint(edges)[:, None] - edges
        b = self.edge_B_adjoint(reflected)
        return 2.0 * self._scale * b[self._right] - reflected

    def edge_evolution(self, edges: np.ndarray, steps: int) -> Iterator[np.ndarray]:
        """Yield the edge block at times ``0, 1, ..., steps - 1``."""
        current = np.asarray(edges, dtype=np.complex128)
        for t in range(steps):
            yield current
            if t + 1 < steps:
                current = self.edge_step(current)

    # -- dense-state interface -------------------------------------------------

    def apply_A_adjoint(self, state: WalkState) -> np.ndarray:
        return self.edge_A_adjoint(state.edges())

    def apply_B_adjoint(self, state: WalkState) -> np.ndarray:
        return self.edge_B_adjoint(state.edges())

    def apply_A(self, v: np.ndarray) -> WalkState:
        return WalkState.from_edges(self.n, self.edge_A(v))

    def apply_B(self, v: np.ndarray) -> WalkState:
        return WalkState.from_edges(self.n, self.edge_B(v))

    def step(self, state: WalkState) -> WalkState:
        """``(2BB^† - I)(2AA^† - I)|state>``."""
        out = state.amplitudes.copy()
        idx = _edge_index(self.n)
        out[idx] = self.edge_step(state.amplitudes[idx])
        return WalkState(self.n, out)

    def power(self, state: WalkState, t: int) -> WalkState:
        idx = _edge_index(self.n)
        edges = state.amplitudes[idx]
        for _ in range(t):
            edges = self.edge_step(edges)
        out = state.amplitudes.copy()
        out[idx] = edges
        return WalkState(self.n, out)

    @cached_property
    def ncycle_mask(self) -> np.ndarray:
        return ncycle_mask(self.n)


def discriminant_matrix(n: int) -> np.ndarray:
    """Dense ``D = A^† B``: ``1/d`` where ``x^-1 y`` is a transposition."""
    size = factorial(n)
    d = comb(n, 2)
    D = np.zeros((size, size))
    D[np.arange(size)[:, None], right_multiplication_table(n)] = 1.0 / d
    return D


# -- states ---------------------------------------------------------------------


def phi_state(x: Permutation) -> WalkState:
    """``|phi_x> = d^-1/2 sum_s |x, x s>``."""
    n = x.n
    _guard(n)
    edges = np.zeros((factorial(n), comb(n, 2)), dtype=np.complex128)
    edges[rank(x)] = 1.0 / sqrt(comb(n, 2))
    return WalkState.from_edges(n, edges)


def ncycle_mask(n: int) -> np.ndarray:
    """Boolean mask over ranks selecting the ``(n-1)!`` n-cycles."""
    perms = all_permutations(n).astype(np.int64)
    length = np.ones(perms.shape[0], dtype=np.int64)
    pos = perms[:, 0].copy()
    rows = np.arange(perms.shape[0])
    while True:
        active = pos != 0
        if not active.any():
            break
        length[active] += 1
        pos[active] = perms[rows[active], pos[active]]
    return length == n


def cycle_type_labels(n: int) -> list[tuple[int, ...]]:
    """Cycle type of every permutation, indexed by rank."""
    return [cycle_type(unrank(n, r)) for r in range(factorial(n))]


def _ncycle_edges(n: int) -> np.ndarray:
    d = comb(n, 2)
    edges = np.zeros((factorial(n), d), dtype=np.complex128)
    edges[ncycle_mask(n)] = 1.0 / sqrt(factorial(n - 1) * d)
    return edges


def ncycle_state(n: int) -> WalkState:
    """Uniform superposition of all edges leaving an n-cycle."""
    _guard(n)
    return WalkState.from_edges(n, _ncycle_edges(n))


def _phi_edges(n: int, x: Permutation | None = None) -> np.ndarray:
    edges = np.zeros((factorial(n), comb(n, 2)), dtype=np.complex128)
    edges[0 if x is None else rank(x)] = 1.0 / sqrt(comb(n, 2))
    return edges


# -- measurement ----------------------------------------------------------------


def instantaneous_distribution(state: WalkState) -> np.ndarray:
    """Marginal of the first register, indexed by rank."""
    return (np.abs(state.matrix()) ** 2).sum(axis=1)


def averaged_distribution(w: WalkOperator, s0: WalkState, T: int) -> np.ndarray:
    """Cesàro mean of the first-register marginals at ``t = 0, ..., T - 1``."""
    if T < 1:
        raise ValueError("T must be >= 1")
    idx = _edge_index(w.n)
    edges = s0.amplitudes[idx]
    # off-edge amplitudes are frozen by W
    off_edge = instantaneous_distribution(s0) - (np.abs(edges) ** 2).sum(axis=1)
    acc = np.zeros(w.size)
    for block in w.edge_evolution(edges, T):
        acc += (np.abs(block) ** 2).sum(axis=1)
    return acc / T + off_edge


def average_mixing_row(w: WalkOperator, y: Permutation, T: int) -> np.ndarray:
    """Average probability of seeing ``x`` (over its edges ``|x, x s>``), starting from ``A|y>``."""
    if T < 1:
        raise ValueError("T must be >= 1")
    acc = np.zeros(w.size)
    for block in w.edge_evolution(_phi_edges(w.n, y), T):
        acc += (np.abs(block) ** 2).sum(axis=1)
    return acc / T


def basis_state_probability(w: WalkOperator, g: Permutation, t: int) -> float:
    """``sum_s |<g, g s| W^t |phi_e>|^2``."""
    return float(basis_probability_series(w, g, t)[-1])


def basis_probability_series(w: WalkOperator, g: Permutation, t_max: int) -> np.ndarray:
    """:func:`basis_state_probability` for every ``t = 0, ..., t_max``."""
    r = rank(g)
    return np.array(
        [(np.abs(block[r]) ** 2).sum() for block in w.edge_evolution(_phi_edges(w.n), t_max + 1)]
    )


def overlap_series(w: WalkOperator, t_max: int) -> np.ndarray:
    """Simulated ``<phi_[n]| W^t |phi_e>`` for ``t = 0, ..., t_max``."""
    target = _ncycle_edges(w.n)
    return np.array(
        [np.vdot(target, block) for block in w.edge_evolution(_phi_edges(w.n), t_max + 1)]
    )


def ncycle_mass_series(w: WalkOperator, T: int) -> np.ndarray:
    """First-register probability of the n-cycles at ``t = 0, ..., T - 1``, from ``phi_e``."""
    mask = w.ncycle_mask
    return np.array(
        [(np.abs(block[mask]) ** 2).sum() for block in w.edge_evolution(_phi_edges(w.n), T)]
    )
