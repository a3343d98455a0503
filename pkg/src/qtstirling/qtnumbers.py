"""qt-binomial coefficients and the qt-bracket family.

The qt-binomial generalizes the Gaussian polynomial to partition indices,
via the w function evaluated at staircase points q^z t^delta(n).  The
exponent vector z may be any integer vector (no sorting is applied), or the
generic single variable x-bar, realized through X = q^x.  Brackets combine
a multiplicative shift s with the exponential vector z.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Union

from .algebra import ONE, RationalFn, X, ZERO, monomial_rf, q_pow, t_pow, x_pow
from .partitions import (
    Partition,
    contains,
    n_stat,
    n_stat_conj,
    subpartitions,
    weight,
)
from .pochhammer import poch, poch_partition, poch_partition_flipped
from .reports import IdentityReport, equality_report
from .wfunctions import generic_staircase_args, staircase_args, w_multi

__all__ = [
    "XBAR",
    "BinomialIndex",
    "ZVector",
    "h_product",
    "g_product",
    "qt_binomial",
    "qt_binomial_rect",
    "gaussian_binomial",
    "binomial_theorem_check",
    "qt_bracket",
    "qt_number",
    "bracket_rect",
    "bracket_binomial_relation_check",
]


class _XBar:
    """Marker for the generic diagonal vector (x, ..., x), realized via X."""

    def __repr__(self):
        return "XBAR"


XBAR = _XBar()

ZVector = Union[Partition, Sequence[int], _XBar]


@dataclass(frozen=True)
class BinomialIndex:
    """Index pair of a qt-binomial: exponent source z over partition mu."""

    z: tuple
    mu: Partition


def _z_entries(z: ZVector, n: int) -> tuple:
    if isinstance(z, _XBar):
        return generic_staircase_args(n)
    if isinstance(z, Partition):
        z = z.parts
    z = tuple(int(v) for v in z)
    if len(z) != n:
        raise ValueError(f"exponent vector {z} does not match ambient length {n}")
    return staircase_args(z)


@lru_cache(maxsize=None)
def h_product(mu: Partition) -> RationalFn:
    """prod_{i<j} (q t^{j-i})_{mu_i - mu_j} / (q t^{j-i-1})_{mu_i - mu_j}."""
    out = ONE
    for i in range(1, mu.n + 1):
        for j in range(i + 1, mu.n + 1):
            d = mu[i - 1] - mu[j - 1]
            if d:
                out = out * poch(monomial_rf(e_q=1, e_t=j - i), d)
                out = out / poch(monomial_rf(e_q=1, e_t=j - i - 1), d)
    return out


@lru_cache(maxsize=None)
def g_product(mu: Partition) -> RationalFn:
    """(q t^{n-1}; q, t)_mu = prod_i (q t^{n-i}; q)_{mu_i}."""
    return poch_partition(monomial_rf(e_q=1, e_t=mu.n - 1), mu)


@lru_cache(maxsize=None)
def _t_ratio_bracket(mu: Partition) -> RationalFn:
    # prod_{i<j} (t^{j-i})_{mu_i-mu_j} / (t^{j-i+1})_{mu_i-mu_j}
    out = ONE
    for i in range(1, mu.n + 1):
        for j in range(i + 1, mu.n + 1):
            d = mu[i - 1] - mu[j - 1]
            if d:
                out = out * poch(t_pow(j - i), d) / poch(t_pow(j - i + 1), d)
    return out


def qt_binomial(z: ZVector, mu: Partition) -> RationalFn:
    """The qt-binomial coefficient of z over mu."""
    n = mu.n
    if isinstance(z, Partition) and not contains(z, mu):
        return ZERO
    args = _z_entries(z, n)
    pref = monomial_rf(e_q=weight(mu), e_t=2 * n_stat(mu) + (1 - n) * weight(mu))
    return pref / g_product(mu) * h_product(mu) * w_multi(mu, args)


def qt_binomial_rect(mu: Partition) -> RationalFn:
    """Closed form of the qt-binomial at z = x-bar, as a rational function of X."""
    n = mu.n
    out = t_pow(2 * n_stat(mu) + (1 - n) * weight(mu)) / g_product(mu)
    out = out * poch_partition_flipped(X, mu)
    out = out * h_product(mu) / _t_ratio_bracket(mu)
    return out


_Q = monomial_rf(e_q=1)


def gaussian_binomial(m: int, k: int) -> RationalFn:
    """(q)_m / ((q)_{m-k} (q)_k), the one-variable q-binomial coefficient."""
    if k < 0 or k > m:
        return ZERO
    return poch(_Q, m) / (poch(_Q, m - k) * poch(_Q, k))


def binomial_theorem_check(lam: Partition) -> IdentityReport:
    """Terminating binomial theorem: (X)_lam expanded over sub-binomials."""
    lhs = poch_partition(X, lam)
    rhs = ZERO
    for mu in subpartitions(lam):
        wt = weight(mu)
        sign = -1 if wt % 2 else 1
        coeff = sign * monomial_rf(e_q=n_stat_conj(mu), e_t=-n_stat(mu))
        rhs = rhs + coeff * qt_binomial(lam, mu) * x_pow(wt)
    return equality_report("binomial-theorem", {"lam": list(lam.parts)}, lhs, rhs)


def qt_bracket(z: ZVector, mu: Partition, s: RationalFn = ONE) -> RationalFn:
    """The mu-shifted qt-number [z, s]_mu with multiplicative shift s."""
    n = mu.n
    args = tuple(s * entry for entry in _z_entries(z, n))
    out = q_pow(weight(mu))
    for i in range(1, n + 1):
        out = out * (ONE - monomial_rf(e_q=1, e_t=n - i)) ** (-mu[i - 1])
    return out * _t_ratio_bracket(mu) * w_multi(mu, args)


def qt_number(z: Sequence[int]) -> RationalFn:
    """[z] = prod_i (1 - q^{z_i} t^{n-i}) / (1 - q t^{n-i})."""
    if isinstance(z, Partition):
        z = z.parts
    n = len(z)
    out = ONE
    for i in range(1, n + 1):
        out = out * (ONE - monomial_rf(e_q=int(z[i - 1]), e_t=n - i))
        out = out / (ONE - monomial_rf(e_q=1, e_t=n - i))
    return out


def bracket_rect(mu: Partition) -> RationalFn:
    """The bracket at the generic diagonal point, prod_i (X t^{i-1}; 1/q)_{mu_i} / (1-q t^{n-i})^{mu_i}."""
    n = mu.n
    out = poch_partition_flipped(X, mu)
    for i in range(1, n + 1):
        out = out * (ONE - monomial_rf(e_q=1, e_t=n - i)) ** (-mu[i - 1])
    return out


def bracket_binomial_relation_check(z: ZVector, mu: Partition) -> IdentityReport:
    """[z]_mu against the prefactored qt-binomial form."""
    n = mu.n
    lhs = qt_bracket(z, mu)
    pref = t_pow(-2 * n_stat(mu) + (n - 1) * weight(mu)) * g_product(mu)
    for i in range(1, n + 1):
        pref = pref * (ONE - monomial_rf(e_q=1, e_t=n - i)) ** (-mu[i - 1])
    rhs = pref * _t_ratio_bracket(mu) / h_product(mu) * qt_binomial(z, mu)
    if isinstance(z, _XBar):
        z_data = "xbar"
    elif isinstance(z, Partition):
        z_data = list(z.parts)
    else:
        z_data = list(z)
    return equality_report(
        "bracket-binomial-relation", {"z": z_data, "mu": list(mu.parts)}, lhs, rhs
    )
