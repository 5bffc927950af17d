"""Exact character theory of the symmetric group.

Character values and dimensions are Python ints (arbitrary precision);
rationals only appear where a division is unavoidable.  The
Murnaghan-Nakayama recursion works on beta-sets (abacus positions): removing
a rim hook of length ``r`` is sliding one bead from ``b`` to ``b - r`` onto a
free position, with sign ``(-1)**(beads jumped over)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from .symgroup import CycleType, class_size, is_partition, partitions

__all__ = [
    "BetaBoundReport",
    "ClassFunction",
    "General",
    "Hook",
    "NotInXi",
    "Partition",
    "beta_bound_check",
    "beta_bound_sweep",
    "char_ncycle",
    "char_transposition_class",
    "char_two_cycle_class",
    "character",
    "character_table",
    "conjugate",
    "content_sum",
    "dimension",
    "dimension_closed_form",
    "enumerate_xi",
    "fourier_class_function",
    "hook_lengths",
    "hook_transposition_character",
    "partitions",
    "two_cycle_class",
    "xi_classify",
]

Partition = tuple[int, ...]


def _check(parts, n: int | None = None) -> Partition:
    parts = tuple(int(x) for x in parts)
    if not is_partition(parts, n):
        what = "a partition" if n is None else f"a partition of {n}"
        raise ValueError(f"{parts} is not {what}")
    return parts


# -- Murnaghan-Nakayama ---------------------------------------------------------


def character(lam: Partition, mu: CycleType) -> int:
    """``chi_lam`` evaluated on the class of cycle type ``mu``."""
    lam = _check(lam)
    mu = _check(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: {lam} has size {sum(lam)}, {mu} has size {sum(mu)}")
    return _mn(lam, mu)


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: CycleType) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    length = len(lam)
    beads = [part + length - 1 - i for i, part in enumerate(lam)]
    occupied = set(beads)
    total = 0
    for b in beads:
        target = b - r
        if target < 0 or target in occupied:
            continue
        jumped = sum(1 for c in beads if target < c < b)
        moved = sorted((target if c == b else c for c in beads), reverse=True)
        shape = tuple(x for x in (c - (length - 1 - i) for i, c in enumerate(moved)) if x > 0)
        total += (-1) ** jumped * _mn(shape, rest)
    return total


def conjugate(lam: Partition) -> Partition:
    lam = tuple(lam)
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def hook_lengths(lam: Partition) -> list[list[int]]:
    cols = conjugate(lam)
    return [[lam[i] - j + cols[j] - i - 1 for j in range(lam[i])] for i in range(len(lam))]


def dimension(lam: Partition) -> int:
    """Hook-length formula: ``n! / prod(hooks)``."""
    lam = _check(lam)
    hooks = prod(h for row in hook_lengths(lam) for h in row)
    return factorial(sum(lam)) // hooks


def character_table(n: int) -> tuple[list[Partition], list[CycleType], list[list[int]]]:
    """Rows indexed by irreps, columns by classes, both in decreasing lexicographic order."""
    parts = partitions(n)
    return parts, list(parts), [[_mn(lam, mu) for mu in parts] for lam in parts]


# -- the Xi_n family -----------------------------------------------------------


@dataclass(frozen=True)
class Hook:
    """``(k, 1^(n-k))``."""

    k: int


@dataclass(frozen=True)
class General:
    """``(mu1, mu2, 2^(r-2), 1^(l-r))`` with ``mu1 >= mu2 >= 2``; ``l`` is the number of rows."""

    mu1: int
    mu2: int
    r: int
    l: int


@dataclass(frozen=True)
class NotInXi:
    pass


XiMembership = Hook | General | NotInXi


def xi_classify(mu: Partition) -> XiMembership:
    mu = _check(mu)
    if len(mu) == 1 or mu[1] == 1:
        return Hook(mu[0])
    tail = mu[2:]
    twos = sum(1 for x in tail if x == 2)
    if all(x <= 2 for x in tail):
        return General(mu[0], mu[1], twos + 2, len(mu))
    return NotInXi()


def _from_xi(n: int, kind: XiMembership) -> Partition:
    if isinstance(kind, Hook):
        return (kind.k,) + (1,) * (n - kind.k)
    return (kind.mu1, kind.mu2) + (2,) * (kind.r - 2) + (1,) * (kind.l - kind.r)


def enumerate_xi(n: int) -> list[Partition]:
    """Every partition of ``n`` in Xi_n, decreasing lexicographic order."""
    if n < 2:
        raise ValueError("Xi_n is defined for n >= 2")
    out = [_from_xi(n, Hook(k)) for k in range(1, n + 1)]
    for mu1 in range(2, n - 1):
        for mu2 in range(2, min(mu1, n - mu1) + 1):
            rest = n - mu1 - mu2
            for twos in range(rest // 2 + 1):
                ones = rest - 2 * twos
                out.append((mu1, mu2) + (2,) * twos + (1,) * ones)
    return sorted(out, reverse=True)


# -- closed forms ---------------------------------------------------------------


def content_sum(mu: Partition) -> int:
    """Sum of ``j - i`` over the cells ``(i, j)`` of the diagram."""
    return sum(j - i for i, part in enumerate(mu) for j in range(part))


def char_transposition_class(mu: Partition) -> int:
    """``chi_mu`` on the transposition class via the row-sum formula.

    ``chi = dim / (n (n-1)) * sum_j [(mu_j - j + 1)(mu_j - j) - j (j - 1)]``
    with 1-based ``j`` over the rows of ``mu``; rows past the last part would
    contribute zero.
    """
    mu = _check(mu)
    n = sum(mu)
    if n < 2:
        raise ValueError("the transposition class needs n >= 2")
    s = sum((m - j + 1) * (m - j) - j * (j - 1) for j, m in enumerate(mu, start=1))
    value = Fraction(dimension(mu) * s, n * (n - 1))
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral character value {value} for {mu}")
    return int(value)


def hook_transposition_character(n: int, k: int) -> Fraction:
    """``chi_(k,1^(n-k))`` on transpositions: ``-(n - 2k + 1)/(n - 1) * C(n-1, k-1)``."""
    return -Fraction(n - 2 * k + 1, n - 1) * comb(n - 1, k - 1)


def char_ncycle(mu: Partition) -> int:
    """``chi_mu`` on the n-cycles: ``(-1)^(n-k)`` on the hook ``(k, 1^(n-k))``, else 0."""
    mu = _check(mu)
    kind = xi_classify(mu)
    if isinstance(kind, Hook):
        return (-1) ** (sum(mu) - kind.k)
    return 0


def two_cycle_class(n: int, l: int) -> CycleType:
    """Cycle type with one ``l``-cycle and one ``(n-l)``-cycle."""
    return tuple(sorted((n - l, l), reverse=True))


def char_two_cycle_class(mu: Partition, l: int) -> int:
    """``chi_mu`` on the class of cycle type ``(n-l, l)``, ``1 <= l <= n // 2``.

    For a hook ``(k, 1^(n-k))`` the two rim-hook tableaux give
    ``(-1)^(n-k-1)`` when ``k <= l``, ``(-1)^(n-k)`` when ``k > n - l`` and 0
    in between.  Other shapes go through Murnaghan-Nakayama.
    """
    mu = _check(mu)
    n = sum(mu)
    if not 1 <= l <= n // 2:
        raise ValueError(f"l={l} outside 1..{n // 2}")
    kind = xi_classify(mu)
    if isinstance(kind, Hook):
        k = kind.k
        if k <= l:
            return (-1) ** (n - k - 1)
        if k > n - l:
            return (-1) ** (n - k)
        return 0
    return _mn(mu, two_cycle_class(n, l))


def dimension_closed_form(mu: Partition) -> int:
    """Dimension of ``rho_mu`` for ``mu`` in Xi_n from the explicit hook products."""
    mu = _check(mu)
    n = sum(mu)
    kind = xi_classify(mu)
    if isinstance(kind, Hook):
        return comb(n - 1, kind.k - 1)
    if isinstance(kind, NotInXi):
        raise ValueError(f"{mu} is not in Xi_{n}")
    m1, m2, r, l = kind.mu1, kind.mu2, kind.r, kind.l
    num = factorial(n) * (m1 - m2 + 1) * (l - r + 1)
    den = (
        (m1 + l - 1) * (m1 + r - 2) * (m2 + l - 2) * (m2 + r - 3)
        * factorial(m1 - 1) * factorial(m2 - 2) * factorial(l - 1) * factorial(r - 2)
    )
    value = Fraction(num, den)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral dimension {value} for {mu}")
    return int(value)


# -- class functions -----------------------------------------------------------


@dataclass
class ClassFunction:
    """A function on the conjugacy classes of S_n; missing classes read as 0."""

    n: int
    table: dict[CycleType, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        self.table = {_check(c, self.n): Fraction(v) for c, v in self.table.items()}

    def __getitem__(self, cls: CycleType) -> Fraction:
        return self.table.get(tuple(cls), Fraction(0))

    @classmethod
    def indicator(cls, n: int, mu: CycleType, scale=1) -> "ClassFunction":
        return cls(n, {tuple(mu): Fraction(scale)})

    @classmethod
    def constant(cls, n: int, value=1) -> "ClassFunction":
        return cls(n, {c: Fraction(value) for c in partitions(n)})


def fourier_class_function(f: ClassFunction, mu: Partition) -> Fraction:
    """Scalar ``c`` with ``hat f(rho_mu) = c * I``: ``sum_c f(c) chi_mu(c) |c| / dim rho_mu``."""
    mu = _check(mu, f.n)
    total = sum(
        (v * _mn(mu, cls) * class_size(cls) for cls, v in f.table.items() if v),
        Fraction(0),
    )
    return total / dimension(mu)


# -- growth bound on non-hook Xi_n characters ----------------------------------


@dataclass(frozen=True)
class BetaBoundReport:
    mu: Partition
    n: int
    beta: Fraction
    constant: Fraction
    character: int
    ratio: float  # |chi| / (n^6.5 * beta^n), compare against ``constant``
    passed: bool


def beta_bound_check(mu: Partition, beta=Fraction(81, 16), constant=10) -> BetaBoundReport:
    """Check ``|chi_mu(transposition)| <= C n^6.5 beta^n`` for a non-hook ``mu`` in Xi_n.

    The comparison is exact: both sides are squared so that ``n^0.5`` becomes ``n``.
    """
    mu = _check(mu)
    kind = xi_classify(mu)
    if not isinstance(kind, General):
        raise ValueError(f"{mu} must be a non-hook member of Xi_n, got {kind}")
    n = sum(mu)
    beta = Fraction(beta)
    constant = Fraction(constant)
    chi = char_transposition_class(mu)
    scaled = Fraction(abs(chi)) / (n**6 * beta**n)
    passed = scaled**2 <= constant**2 * n
    return BetaBoundReport(mu, n, beta, constant, chi, float(scaled) / n**0.5, passed)


def beta_bound_sweep(n_max: int, beta=Fraction(81, 16), constant=10) -> dict[int, BetaBoundReport]:
    """Worst-ratio report per ``n`` (``n`` without non-hook Xi_n members is skipped)."""
    worst: dict[int, BetaBoundReport] = {}
    for n in range(4, n_max + 1):
        for mu in enumerate_xi(n):
            if not isinstance(xi_classify(mu), General):
                continue
            rep = beta_bound_check(mu, beta, constant)
            if n not in worst or rep.ratio > worst[n].ratio:
                worst[n] = rep
    return worst
