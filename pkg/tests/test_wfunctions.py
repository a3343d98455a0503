"""Limiting Macdonald functions: closed forms vs recursion, duality, limits."""

from itertools import permutations

import pytest

from qtstirling.algebra import (
    ONE,
    Q,
    T,
    X,
    ZERO,
    canonical_str,
    monomial_rf,
    q_pow,
    subs_rational,
    t_pow,
)
from qtstirling.partitions import Partition, partitions_in_box, rectangle, weight, zeros
from qtstirling.pochhammer import poch, poch_partition_flipped
from qtstirling.wfunctions import (
    ExponentPair,
    GenericX,
    NotAStripError,
    clear_cache,
    duality_check,
    generic_staircase_args,
    h_factor,
    staircase_args,
    w_bar,
    w_hat_multi,
    w_hat_skew_single,
    w_multi,
    w_skew_single,
    w_staircase,
    w_vanishing_check,
    _w_hat_multi_literal,
)

P = Partition


def rect_oracle(k, xs):
    """Independent closed form for rectangular indices."""
    out = q_pow(-len(xs) * k)
    for x in xs:
        out = out * poch(q_pow(1 - k) * x, k)
    return out


def test_argument_entries():
    assert ExponentPair(2, 1).as_rational() == Q**2 * T
    assert GenericX(3).as_rational() == X * T**3
    assert staircase_args((2, 1)) == (Q**2 * T, Q)
    assert generic_staircase_args(2) == (X * T, X)


def test_h_factor_diagonal_and_single_row():
    assert h_factor(P((2, 1)), P((2, 1))) == ONE
    assert h_factor(P((5,)), P((3,))) == ONE
    with pytest.raises(NotAStripError):
        h_factor(P((1, 1)), P((0, 0)))


def test_h_factor_four_ratio_oracle():
    # (2,0)/(1,0): the index m = mu_1 - lam_2 = 1; expand the four symbols directly
    lam, mu = P((2, 0)), P((1, 0))
    oracle = ((ONE - T) * (ONE - Q**2)) / ((ONE - Q) * (ONE - Q * T))
    assert h_factor(lam, mu) == oracle


def test_skew_single_values():
    assert w_skew_single(P((1,)), P((0,)), X) == (ONE - X) / Q
    assert w_skew_single(P((2, 1)), P((2, 1)), X) == ONE
    # (2)/(1): (-x/q) q^{-n(lam')} (1 - q x^{-1}) expanded by hand
    expected = (q_pow(-2)) * (Q - X) * -ONE  # (-x/q) q^{-1} (1 - q/x) = (x... )
    got = w_skew_single(P((2,)), P((1,)), X)
    assert got == (X - Q) * q_pow(-2) * -ONE
    assert got == (Q - X) / Q**2


def test_skew_single_triangularity():
    assert w_skew_single(P((1, 1)), P((0, 0)), X) == ZERO
    assert w_hat_skew_single(P((2, 2)), P((1, 0)), X) == ZERO


def test_hat_skew_single_values():
    assert w_hat_skew_single(P((0, 0)), P((0, 0)), X) == ONE
    assert w_hat_skew_single(P((1,)), P((0,)), X) == ONE - X.inverse()
    # diagonal carries t^{|lam|}
    assert w_hat_skew_single(P((2, 1)), P((2, 1)), X) == T**3


def test_w_multi_rectangular():
    xs2 = (monomial_rf(e_q=2, e_t=1), monomial_rf(e_q=5))
    for n, xs in ((1, (X,)), (2, xs2)):
        for k in range(0, 4):
            mu = rectangle(k, n)
            assert w_multi(mu, xs) == rect_oracle(k, xs)
    xs3 = generic_staircase_args(3)
    for k in range(0, 4):
        assert w_multi(rectangle(k, 3), xs3) == rect_oracle(k, xs3)


def test_w_multi_zero_partition():
    assert w_multi(zeros(3), generic_staircase_args(3)) == ONE


def test_w_multi_argument_count():
    with pytest.raises(ValueError):
        w_multi(P((1, 1)), (X,))


def test_w_multi_staircase_closed_form():
    # mu=(1,1), n=2 at (Xt, X) against the independent staircase product
    mu = P((1, 1))
    closed = q_pow(-2) * poch_partition_flipped(X, mu)
    assert w_multi(mu, (X * T, X)) == closed
    assert w_staircase(mu, GenericX(0)) == closed

    for parts in [(1,), (2, 1), (3, 1), (2, 2, 1)]:
        mu = P(parts)
        assert w_staircase(mu, GenericX(0)) == w_multi(mu, generic_staircase_args(mu.n))


def test_w_staircase_closed_form_value():
    assert w_staircase(P((1,)), GenericX(0)) == (ONE - X) / Q
    assert w_staircase(zeros(2), GenericX(0)) == ONE


def test_vanishing():
    assert w_vanishing_check(P((2,)), P((1,))).passed
    assert w_vanishing_check(P((1, 1)), P((2, 0))).passed
    assert w_vanishing_check(P((2, 1)), P((1, 1))).passed
    with pytest.raises(ValueError):
        w_vanishing_check(P((1, 0)), P((2, 1)))


def test_symmetry_exhaustive_small():
    xs = (monomial_rf(e_q=2, e_t=1), monomial_rf(e_q=5, e_t=2), monomial_rf(e_q=9))
    for mu in [P((1, 1, 0)), P((2, 1, 1)), P((2, 2, 0))]:
        base = w_multi(mu, xs)
        for perm in permutations(xs):
            assert w_multi(mu, perm) == base


def test_duality():
    assert duality_check(P((1,)), (X,)).passed
    assert duality_check(zeros(2), generic_staircase_args(2)).passed
    assert duality_check(P((2, 1)), generic_staircase_args(2)).passed
    assert duality_check(P((2, 1)), (monomial_rf(e_q=2, e_t=1), monomial_rf(e_q=5))).passed


def test_duality_rejected_exponent_reading():
    # with the t-exponent -2n(mu)-(n-1)|mu| the relation fails for n > 1
    mu = P((1, 0))
    xs = generic_staircase_args(2)
    from qtstirling.partitions import n_stat

    lhs = w_hat_multi(mu, xs)
    flipped = subs_rational(w_multi(mu, xs), q=q_pow(-1), t=t_pow(-1), X=monomial_rf(e_X=-1))
    rejected = monomial_rf(e_q=-1, e_t=-2 * n_stat(mu) - 1) * flipped
    assert lhs != rejected
    accepted = monomial_rf(e_q=-1, e_t=-2 * n_stat(mu) + 1) * flipped
    assert lhs == accepted


def test_dual_recursion_literal_reading_rejected():
    # repeating the full skew pair in the summand breaks duality
    mu = P((1, 1))
    xs = generic_staircase_args(2)
    assert _w_hat_multi_literal(mu, xs) != w_hat_multi(mu, xs)
    assert duality_check(mu, xs).passed


def test_w_bar_values():
    assert w_bar(zeros(2), zeros(2)) == ONE
    assert w_bar(P((1,)), P((1,))) == ONE
    assert w_bar(P((2,)), P((2,))) == 2
    assert w_bar(P((2,)), P((2,)), invert=True) == 2
    v = w_bar(P((1, 1)), P((1, 1)))
    assert v == ONE - T
    assert canonical_str(w_bar(P((2, 1)), P((2, 1)), invert=True)) == "(t - 1)/(t^2)"


def test_w_bar_requires_matching_ambient():
    with pytest.raises(ValueError):
        w_bar(P((1,)), P((1, 0)))


def test_cache_transparency():
    mu = P((2, 1))
    xs = generic_staircase_args(2)
    value = w_multi(mu, xs)
    clear_cache()
    assert w_multi(mu, xs) == value


def test_cache_cap_env(monkeypatch):
    monkeypatch.setenv("QTSTIRLING_CACHE_SIZE", "4")
    clear_cache()
    mu = P((2, 2))
    expected = rect_oracle(2, generic_staircase_args(2))
    assert w_multi(mu, generic_staircase_args(2)) == expected
    clear_cache()


def test_concurrent_reads_consistent():
    from concurrent.futures import ThreadPoolExecutor

    clear_cache()
    mus = [mu for mu in partitions_in_box(2, 3)]
    serial = [w_multi(mu, generic_staircase_args(2)) for mu in mus]
    clear_cache()
    with ThreadPoolExecutor(max_workers=4) as pool:
        parallel = list(pool.map(lambda m: w_multi(m, generic_staircase_args(2)), mus))
    assert serial == parallel
