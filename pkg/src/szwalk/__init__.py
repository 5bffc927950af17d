"""Szegedy walk on the transposition Cayley graph of S_n.

Exact character theory (:mod:`characters`), a matrix-free walk simulator
(:mod:`szegedy`) and the closed-form n-cycle overlap built from characters
alone (:mod:`spectral`).
"""

from . import characters, formats, spectral, symgroup, szegedy, verify
from .characters import character, character_table, dimension, enumerate_xi, xi_classify
from .spectral import analytic_overlap, lambda_tilde, overlap_terms, spectrum_of_D, theorem_bound
from .symgroup import Permutation, cycle_type, partitions, rank, unrank
from .szegedy import WalkOperator, WalkState, overlap_series, phi_state

__version__ = "0.1.0"

__all__ = [
    "Permutation",
    "WalkOperator",
    "WalkState",
    "analytic_overlap",
    "character",
    "character_table",
    "characters",
    "cycle_type",
    "dimension",
    "enumerate_xi",
    "formats",
    "lambda_tilde",
    "overlap_series",
    "overlap_terms",
    "partitions",
    "phi_state",
    "rank",
    "spectral",
    "spectrum_of_D",
    "symgroup",
    "szegedy",
    "theorem_bound",
    "unrank",
    "verify",
    "xi_classify",
]
