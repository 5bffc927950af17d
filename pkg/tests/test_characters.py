from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from szwalk import characters as ch
from szwalk.symgroup import class_size, partitions


def partitions_st(max_n=10):
    return st.integers(2, max_n).flatmap(lambda n: st.sampled_from(partitions(n)))


@pytest.mark.parametrize("n", range(1, 9))
def test_mn_matches_rim_hook_oracle(n):
    for lam in partitions(n):
        for mu in partitions(n):
            assert ch.character(lam, mu) == oracles.rim_hook_character(lam, mu)


@given(partitions_st())
def test_dimension_counts_standard_tableaux(lam):
    assert ch.dimension(lam) == oracles.count_syt(lam)
    assert ch.character(lam, (1,) * sum(lam)) == ch.dimension(lam)


@given(partitions_st())
def test_transposition_class_and_content(lam):
    n = sum(lam)
    chi = ch.char_transposition_class(lam)
    assert chi == ch.character(lam, (2,) + (1,) * (n - 2))
    assert Fraction(chi, ch.dimension(lam)) == Fraction(2 * ch.content_sum(lam), n * (n - 1))


@given(partitions_st())
def test_conjugate_flips_sign_on_transpositions(lam):
    assert ch.conjugate(ch.conjugate(lam)) == lam
    assert ch.char_transposition_class(ch.conjugate(lam)) == -ch.char_transposition_class(lam)


@pytest.mark.parametrize("n", range(2, 11))
def test_ncycle_closed_form(n):
    for mu in partitions(n):
        assert ch.char_ncycle(mu) == ch.character(mu, (n,))


@pytest.mark.parametrize("n", range(2, 13))
def test_two_cycle_class_closed_form(n):
    for mu in partitions(n):
        for l in range(1, n // 2 + 1):
            assert ch.char_two_cycle_class(mu, l) == ch.character(mu, ch.two_cycle_class(n, l))


@pytest.mark.parametrize("n", range(2, 13))
def test_two_cycle_support_is_xi(n):
    xi = set(ch.enumerate_xi(n))
    for mu in partitions(n):
        nonzero = any(ch.character(mu, ch.two_cycle_class(n, l)) for l in range(1, n // 2 + 1))
        if nonzero:
            assert mu in xi


@pytest.mark.parametrize("n", range(2, 13))
def test_two_cycle_values_off_the_balanced_class(n):
    # values are in {-1, 0, 1} unless the two cycles have equal length
    for mu in ch.enumerate_xi(n):
        for l in range(1, (n - 1) // 2 + 1):
            assert ch.char_two_cycle_class(mu, l) in (-1, 0, 1)


def test_balanced_two_cycle_class_can_reach_two():
    assert ch.char_two_cycle_class((2, 2), 2) == 2
    assert ch.character((2, 2), (2, 2)) == 2


def test_two_cycle_class_range():
    assert ch.char_two_cycle_class((3, 1, 1), 2) == 0
    with pytest.raises(ValueError):
        ch.char_two_cycle_class((3, 1, 1), 3)
    with pytest.raises(ValueError):
        ch.char_two_cycle_class((3, 1, 1), 0)


@pytest.mark.parametrize("n", range(2, 15))
def test_enumerate_xi_matches_classification(n):
    expected = [mu for mu in partitions(n) if not isinstance(ch.xi_classify(mu), ch.NotInXi)]
    assert ch.enumerate_xi(n) == expected
    assert len(set(expected)) == len(expected)


def test_xi_classify_examples():
    assert ch.xi_classify((5,)) == ch.Hook(5)
    assert ch.xi_classify((3, 1, 1)) == ch.Hook(3)
    assert ch.xi_classify((3, 2, 2, 1)) == ch.General(3, 2, 3, 4)
    assert ch.xi_classify((3, 3, 3)) == ch.NotInXi()


@pytest.mark.parametrize("n", range(2, 11))
def test_dimension_closed_form(n):
    for mu in ch.enumerate_xi(n):
        assert ch.dimension_closed_form(mu) == ch.dimension(mu)
    for k in range(1, n + 1):
        assert ch.dimension((k,) + (1,) * (n - k)) == comb(n - 1, k - 1)


@pytest.mark.parametrize("n", range(2, 11))
def test_hook_transposition_character(n):
    for k in range(1, n + 1):
        mu = (k,) + (1,) * (n - k)
        assert ch.hook_transposition_character(n, k) == ch.char_transposition_class(mu)


def test_spec_values():
    assert ch.dimension((3, 1, 1)) == 6
    assert ch.hook_transposition_character(5, 4) == 2
    assert ch.char_ncycle((1, 1, 1, 1)) == -1
    assert ch.char_ncycle((2, 2)) == 0
    assert ch.char_ncycle((4,)) == 1


@pytest.mark.parametrize("n", range(1, 8))
def test_orthogonality(n):
    parts, classes, table = ch.character_table(n)
    sizes = [class_size(c) for c in classes]
    for a in range(len(parts)):
        for b in range(len(parts)):
            inner = sum(s * table[a][k] * table[b][k] for k, s in enumerate(sizes))
            assert inner == (factorial(n) if a == b else 0)


def test_size_mismatch_and_bad_partition():
    with pytest.raises(ValueError):
        ch.character((2, 1), (2, 2))
    with pytest.raises(ValueError):
        ch.character((1, 2), (2, 1))


@given(partitions_st(8))
@settings(max_examples=30)
def test_fourier_of_indicators(mu):
    n = sum(mu)
    assert ch.fourier_class_function(ch.ClassFunction.indicator(n, (1,) * n), mu) == 1
    total = ch.fourier_class_function(ch.ClassFunction.constant(n), mu)
    assert total == (factorial(n) if mu == (n,) else 0)
    sigma = ch.ClassFunction.indicator(n, (2,) + (1,) * (n - 2), Fraction(1, comb(n, 2)))
    assert ch.fourier_class_function(sigma, mu) == Fraction(ch.char_transposition_class(mu), ch.dimension(mu))


def test_beta_bound():
    rep = ch.beta_bound_check((2, 2))
    assert rep.character == 0 and rep.passed
    with pytest.raises(ValueError):
        ch.beta_bound_check((3, 1))
    sweep = ch.beta_bound_sweep(12)
    assert all(r.passed for r in sweep.values())
