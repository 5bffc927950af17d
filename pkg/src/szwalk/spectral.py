"""Character-theoretic spectrum of the walk and the closed-form n-cycle overlap.

Every ``D``-eigenspace (``D`` the discriminant) is a sum of isotypic blocks
``rho_mu``, with eigenvalue ``chi_mu(transposition) / dim rho_mu``.  The
overlap ``<phi_[n]| W^t |phi_e>`` splits into one term per ``mu``:

* ``0 < |lambda_mu| < 1``: ``W`` rotates ``span{A u, B u}`` by ``e^(±2i theta)``
  and the term is ``(a1 cos 2θt - s a2 cos 2θ(t-1/2) - s a3 cos 2θ(t+1/2)) / sin²θ``;
* ``|lambda_mu| = 1`` (trivial and sign irreps): ``W`` fixes ``A u``;
* ``lambda_mu = 0``: ``A u`` lies in ``col(A) ∩ ker(B)`` and ``W`` negates it.

The last two kinds form the ``±1`` eigenspace part.  Quantities carrying a
factor ``sqrt((n-1)!)`` keep it symbolic until the final float conversion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .characters import (
    ClassFunction,
    General,
    Hook,
    Partition,
    char_ncycle,
    char_transposition_class,
    dimension,
    enumerate_xi,
    fourier_class_function,
    xi_classify,
)
from .symgroup import partitions

__all__ = [
    "AlphaTriple",
    "OverlapTerms",
    "Projections",
    "SpectralComponent",
    "Surd",
    "alpha_triple",
    "analytic_overlap",
    "gamma_tilde",
    "iota",
    "lambda_tilde",
    "overlap_terms",
    "projections",
    "spectral_component",
    "spectrum_of_D",
    "theorem_bound",
    "upsilon",
]


@dataclass(frozen=True)
class Surd:
    """``coeff * sqrt(radicand)`` with a rational coefficient."""

    coeff: Fraction
    radicand: int

    def __float__(self) -> float:
        return float(self.coeff) * math.sqrt(self.radicand)

    def __eq__(self, other):
        if isinstance(other, Surd):
            if self.radicand == other.radicand:
                return self.coeff == other.coeff
            return self.coeff**2 * self.radicand == other.coeff**2 * other.radicand and (
                (self.coeff >= 0) == (other.coeff >= 0)
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.coeff, self.radicand))


def lambda_tilde(mu: Partition) -> Fraction:
    """Eigenvalue of ``D`` on the ``rho_mu`` block."""
    return Fraction(char_transposition_class(mu), dimension(mu))


@dataclass(frozen=True)
class SpectralComponent:
    mu: Partition
    lambda_tilde: Fraction
    dim: int

    @property
    def lam(self) -> Fraction:
        return abs(self.lambda_tilde)

    @property
    def s_mu(self) -> int:
        # a zero eigenvalue gets +1; its sign never enters a formula
        return -1 if self.lambda_tilde < 0 else 1

    @property
    def theta(self) -> float:
        return math.acos(float(self.lam))

    @property
    def multiplicity(self) -> int:
        return self.dim**2

    @property
    def is_rotation(self) -> bool:
        return 0 < self.lam < 1


def spectral_component(mu: Partition) -> SpectralComponent:
    mu = tuple(mu)
    return SpectralComponent(mu, lambda_tilde(mu), dimension(mu))


def spectrum_of_D(n: int) -> list[tuple[Fraction, int]]:
    """Distinct eigenvalues of ``D`` with multiplicities, decreasing."""
    if n < 2:
        raise ValueError("n must be >= 2")
    merged: dict[Fraction, int] = {}
    for mu in partitions(n):
        comp = spectral_component(mu)
        merged[comp.lambda_tilde] = merged.get(comp.lambda_tilde, 0) + comp.multiplicity
    return sorted(merged.items(), reverse=True)


# -- the n-cycle side -------------------------------------------------------------


def upsilon(cls: tuple[int, ...]) -> int:
    """Number of transpositions ``s`` with ``g s`` an n-cycle, for ``g`` of cycle type ``cls``.

    Nonzero only on the two-cycle classes ``(n-l, l)``, where a transposition
    has to join the two cycles: ``l (n - l)`` ways.
    """
    if len(cls) != 2:
        return 0
    return cls[0] * cls[1]


def upsilon_class_function(n: int) -> ClassFunction:
    return ClassFunction(n, {c: upsilon(c) for c in partitions(n) if upsilon(c)})


def gamma_tilde(mu: Partition) -> int:
    """``sum over classes |c| * upsilon(c) * chi_mu(c)``."""
    mu = tuple(mu)
    value = fourier_class_function(upsilon_class_function(sum(mu)), mu) * dimension(mu)
    assert value.denominator == 1
    return int(value)


def iota(mu: Partition) -> Fraction:
    """``gamma_tilde / n!``; a sum of two-cycle characters, halved on ``(n/2, n/2)``."""
    return Fraction(gamma_tilde(mu), factorial(sum(mu)))


@dataclass(frozen=True)
class Projections:
    """Coefficients of ``delta_ij`` in the four matrix elements against ``|rho_mu,i,j>``."""

    a_dagger_phi_e: Fraction  # <rho|A^†|phi_e>
    b_dagger_phi_e: Fraction  # <rho|B^†|phi_e>
    phi_n_a: Surd  # <phi_[n]|A|rho>
    phi_n_b: Surd  # <phi_[n]|B|rho>

    def as_floats(self) -> tuple[float, float, float, float]:
        return (
            float(self.a_dagger_phi_e),
            float(self.b_dagger_phi_e),
            float(self.phi_n_a),
            float(self.phi_n_b),
        )


def projections(mu: Partition) -> Projections:
    mu = tuple(mu)
    n = sum(mu)
    d = comb(n, 2)
    dim = dimension(mu)
    root = factorial(n - 1)
    return Projections(
        Fraction(1),
        lambda_tilde(mu),
        Surd(Fraction(char_ncycle(mu), dim), root),
        Surd(Fraction(gamma_tilde(mu), d * dim * root), root),
    )


@dataclass(frozen=True)
class AlphaTriple:
    """``alpha_i = coeff_i / sqrt((n-1)!)``.

    ``alpha1 = <phi_[n]|(A Π A^† + B Π B^†)|phi_e>``,
    ``alpha2 = <phi_[n]|A Π B^†|phi_e>``, ``alpha3 = <phi_[n]|B Π A^†|phi_e>``
    with ``Π`` the projector onto the ``rho_mu`` block.
    """

    mu: Partition
    alpha1: Fraction
    alpha2: Fraction
    alpha3: Fraction

    @property
    def scale(self) -> float:
        return 1.0 / math.sqrt(factorial(sum(self.mu) - 1))

    def values(self) -> tuple[float, float, float]:
        s = self.scale
        return float(self.alpha1) * s, float(self.alpha2) * s, float(self.alpha3) * s


def _a_coeff(mu: Partition) -> Fraction:
    """``<phi_[n]| A Π_mu |e>`` times ``sqrt((n-1)!)``."""
    return Fraction(dimension(mu) * char_ncycle(mu), sum(mu))


def _b_coeff(mu: Partition) -> Fraction:
    """``<phi_[n]| B Π_mu |e>`` times ``sqrt((n-1)!)``."""
    n = sum(mu)
    return Fraction(dimension(mu) * gamma_tilde(mu), factorial(n) * comb(n, 2))


def alpha_triple(mu: Partition) -> AlphaTriple:
    mu = tuple(mu)
    if not isinstance(xi_classify(mu), (Hook, General)):
        raise ValueError(f"{mu} is not in Xi_{sum(mu)}; all its terms vanish")
    lt = lambda_tilde(mu)
    xa, xb = _a_coeff(mu), _b_coeff(mu)
    return AlphaTriple(mu, xa + lt * xb, lt * xa, xb)


# -- the overlap -----------------------------------------------------------------


@dataclass(frozen=True)
class OverlapTerms:
    rotation: float  # blocks with 0 < lambda < 1
    fixed: float  # lambda = ±1 (trivial and sign): W acts as +1
    flipped: float  # lambda = 0: W acts as -1

    @property
    def extremal(self) -> float:
        return self.fixed + self.flipped

    @property
    def total(self) -> float:
        return self.rotation + self.fixed + self.flipped


def overlap_terms(n: int, t: int) -> OverlapTerms:
    """Per-eigenspace pieces of ``<phi_[n]| W^t |phi_e>``, summed over Xi_n in a fixed order."""
    if n < 3:
        raise ValueError("the n-cycle overlap needs n >= 3")
    if t < 0:
        raise ValueError("t must be >= 0")
    scale = 1.0 / math.sqrt(factorial(n - 1))
    rotation = fixed = flipped = 0.0
    for mu in enumerate_xi(n):
        comp = spectral_component(mu)
        if comp.lam == 1:
            fixed += float(_a_coeff(mu)) * scale
        elif comp.lam == 0:
            flipped += (-1) ** t * float(_a_coeff(mu)) * scale
        else:
            a1, a2, a3 = alpha_triple(mu).values()
            th = comp.theta
            s = comp.s_mu
            c1 = math.cos(2 * th * t)
            c2 = math.cos(2 * th * (t - 0.5))
            c3 = math.cos(2 * th * (t + 0.5))
            rotation += (a1 * c1 - s * a2 * c2 - s * a3 * c3) / (1.0 - float(comp.lam) ** 2)
    return OverlapTerms(rotation, fixed, flipped)


def analytic_overlap(n: int, t: int) -> float:
    """``<phi_[n]| W^t |phi_e>`` from characters alone."""
    return overlap_terms(n, t).total


def theorem_bound(n: int, beta=Fraction(85, 16), t_max: int = 100) -> dict:
    """Compare ``max_t |overlap|^2`` with ``n^20 beta^(2n) / n!`` and the classical ``1/n``."""
    beta = Fraction(beta)
    if beta <= Fraction(81, 16):
        raise ValueError("beta must exceed 81/16")
    series = [analytic_overlap(n, t) for t in range(t_max + 1)]
    sq = [x * x for x in series]
    t_star = max(range(len(sq)), key=sq.__getitem__)
    peak = sq[t_star]
    rhs = float(Fraction(n**20) * beta ** (2 * n) / factorial(n))
    return {
        "n": n,
        "t_max": t_max,
        "beta": f"{beta.numerator}/{beta.denominator}",
        "argmax_t": t_star,
        "max_overlap_sq": peak,
        "bound_rhs": rhs,
        "classical_uniform": 1.0 / n,
        "ratio_to_shape": peak * factorial(n) / float(beta ** (2 * n)),
        "below_classical": peak < 1.0 / n,
        "series": series,
    }
