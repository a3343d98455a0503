"""Multiple qt-Stirling numbers of the first and second kind.

The explicit formulas combine the change-of-basis matrices u and v, their
q -> 1 limits (computed two independent ways: a closed form through w-bar
and the f-factor, and directly by flipping parameters and cancelling), and
monomial prefactors.  Partition-indexed lower-triangular matrices under the
inclusion ordering form an algebra whose product realizes the inversion
identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, NamedTuple

from .algebra import (
    ONE,
    RationalFn,
    T,
    ZERO,
    const,
    flip_qt,
    limit_q_to_1,
    monomial_rf,
    substitute_t_eq_q_pow,
    t_pow,
)
from .partitions import (
    Partition,
    contains,
    n_stat,
    n_stat_conj,
    partitions_between,
    subpartitions,
    weight,
)
from .qtnumbers import g_product, h_product, qt_binomial
from .reports import IdentityReport, equality_report
from .wfunctions import staircase_args, w_bar, w_hat_multi, w_multi

__all__ = [
    "StirlingValue",
    "PartitionMatrix",
    "f_factor",
    "u_matrix",
    "v_matrix",
    "u_limit",
    "v_limit",
    "u_limit_direct",
    "v_limit_direct",
    "s1",
    "s2",
    "uv_inversion_check",
    "valgebra_multiply",
    "identity_matrix",
    "matrix_from_function",
    "stirling_matrix",
    "stirling_inversion_check",
    "hg_flip_check",
    "ordinary_alpha_stirling",
]


class StirlingValue(NamedTuple):
    """One table entry: s_kind(nu, mu) = value."""

    kind: str
    nu: Partition
    mu: Partition
    value: RationalFn


def _one_minus_qt_powers(nu: Partition, mu: Partition) -> RationalFn:
    # prod_i (1 - q t^{n-i})^{mu_i - nu_i}
    n = nu.n
    out = ONE
    for i in range(1, n + 1):
        e = mu[i - 1] - nu[i - 1]
        if e:
            out = out * (ONE - monomial_rf(e_q=1, e_t=n - i)) ** e
    return out


@lru_cache(maxsize=None)
def f_factor(mu: Partition) -> RationalFn:
    """The t-rational factor entering both Stirling limit formulas.

    Every symbol here is the q -> 1 degeneration of the corresponding
    Pochhammer, so (a)_m means (1 - a)^m, and the factorials divide.
    """
    n = mu.n
    out = ONE
    for i in range(1, n):
        d = mu[i - 1] - mu[i]
        out = out * (ONE - T) ** d / (ONE - t_pow(n - i)) ** mu[i - 1]
    for i in range(1, n + 1):
        for j in range(i + 2, n + 1):
            d = mu[i - 1] - mu[j - 1]
            if d:
                out = out * ((ONE - t_pow(j - i)) / (ONE - t_pow(j - i - 1))) ** d
    denom = factorial(mu[n - 1])
    for i in range(1, n):
        denom *= factorial(mu[i - 1] - mu[i])
    return out / const(Fraction(denom))


@lru_cache(maxsize=None)
def u_matrix(lam: Partition, mu: Partition) -> RationalFn:
    """u(lam, mu) = q^|mu| t^{2n(mu)} / (q t^{n-1})_mu * h(mu) * w-hat_mu(q^lam t^delta)."""
    if not contains(lam, mu):
        return ZERO
    pref = monomial_rf(e_q=weight(mu), e_t=2 * n_stat(mu))
    return pref / g_product(mu) * h_product(mu) * w_hat_multi(mu, staircase_args(lam.parts))


@lru_cache(maxsize=None)
def v_matrix(lam: Partition, mu: Partition) -> RationalFn:
    """v(lam, mu) = (-1)^|mu| q^{n(mu')} t^{-n(mu)} * qt_binomial(lam, mu)."""
    if not contains(lam, mu):
        return ZERO
    sign = -1 if weight(mu) % 2 else 1
    return sign * monomial_rf(e_q=n_stat_conj(mu), e_t=-n_stat(mu)) * qt_binomial(lam, mu)


@lru_cache(maxsize=None)
def u_limit(lam: Partition, mu: Partition) -> RationalFn:
    """lim_{q->1} u(lam, mu, 1/q, 1/t) via the w-bar closed form."""
    if not contains(lam, mu):
        return ZERO
    n, wt = mu.n, weight(mu)
    sign = -1 if wt % 2 else 1
    return sign * t_pow(n_stat(mu) - (n - 1) * wt) * w_bar(mu, lam, invert=False) * f_factor(mu)


@lru_cache(maxsize=None)
def v_limit(lam: Partition, mu: Partition) -> RationalFn:
    """lim_{q->1} v(lam, mu, 1/q, 1/t) via the w-bar closed form."""
    if not contains(lam, mu):
        return ZERO
    n, wt = mu.n, weight(mu)
    return t_pow((n - 1) * wt) * w_bar(mu, lam, invert=True) * f_factor(mu)


def u_limit_direct(lam: Partition, mu: Partition) -> RationalFn:
    """The same limit computed by flipping parameters and cancelling at q = 1."""
    return limit_q_to_1(flip_qt(u_matrix(lam, mu)), 0)


def v_limit_direct(lam: Partition, mu: Partition) -> RationalFn:
    """Direct flip-then-cancel route for the v limit."""
    return limit_q_to_1(flip_qt(v_matrix(lam, mu)), 0)


@lru_cache(maxsize=None)
def s1(nu: Partition, mu: Partition) -> RationalFn:
    """qt-Stirling number of the first kind."""
    if not contains(nu, mu):
        return ZERO
    n = nu.n
    pref = monomial_rf(e_q=n_stat_conj(nu), e_t=-2 * n_stat(mu) + (n - 1) * weight(mu))
    pref = pref * _one_minus_qt_powers(nu, mu)
    total = ZERO
    for lam in partitions_between(mu, nu):
        total = total + u_matrix(nu, lam) * t_pow(-(n - 1) * weight(lam)) * v_limit(lam, mu)
    return pref * total


@lru_cache(maxsize=None)
def s2(nu: Partition, mu: Partition) -> RationalFn:
    """qt-Stirling number of the second kind."""
    if not contains(nu, mu):
        return ZERO
    n = nu.n
    pref = monomial_rf(e_q=-n_stat_conj(mu), e_t=2 * n_stat(nu) - (n - 1) * weight(nu))
    pref = pref * _one_minus_qt_powers(nu, mu)
    total = ZERO
    for lam in partitions_between(mu, nu):
        total = total + u_limit(nu, lam) * t_pow((n - 1) * weight(lam)) * v_matrix(lam, mu)
    return pref * total


def uv_inversion_check(nu: Partition) -> IdentityReport:
    """sum_{mu <= lam <= nu} u(nu, lam) v(lam, mu) = delta_{nu, mu} for every mu <= nu."""
    for mu in subpartitions(nu):
        total = ZERO
        for lam in partitions_between(mu, nu):
            total = total + u_matrix(nu, lam) * v_matrix(lam, mu)
        expected = ONE if mu == nu else ZERO
        if total != expected:
            return equality_report(
                "uv-inversion", {"nu": list(nu.parts), "mu": list(mu.parts)}, total, expected
            )
    return IdentityReport("uv-inversion", {"nu": list(nu.parts)}, passed=True)


# ---------------------------------------------------------------------------
# the V-algebra of inclusion-triangular partition matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PartitionMatrix:
    """Lower-triangular (w.r.t. inclusion) matrix over pairs mu <= lam <= bound."""

    bound: Partition
    entries: dict

    @property
    def n(self) -> int:
        return self.bound.n

    def entry(self, lam: Partition, mu: Partition) -> RationalFn:
        return self.entries.get((lam.parts, mu.parts), ZERO)

    def __eq__(self, other):
        if not isinstance(other, PartitionMatrix):
            return NotImplemented
        if self.bound != other.bound:
            return False
        keys = set(self.entries) | set(other.entries)
        return all(
            self.entries.get(k, ZERO) == other.entries.get(k, ZERO) for k in keys
        )


def matrix_from_function(bound: Partition, fn: Callable[[Partition, Partition], RationalFn]) -> PartitionMatrix:
    """Fill all entries fn(lam, mu) for mu <= lam <= bound, dropping zeros."""
    entries = {}
    for lam in subpartitions(bound):
        for mu in subpartitions(lam):
            value = fn(lam, mu)
            if not value.is_zero:
                entries[(lam.parts, mu.parts)] = value
    return PartitionMatrix(bound, entries)


def identity_matrix(bound: Partition) -> PartitionMatrix:
    return matrix_from_function(bound, lambda lam, mu: ONE if lam == mu else ZERO)


def valgebra_multiply(a: PartitionMatrix, b: PartitionMatrix) -> PartitionMatrix:
    """(ab)_{lam, mu} = sum_{mu <= nu <= lam} a_{lam, nu} b_{nu, mu}."""
    if a.bound != b.bound:
        raise ValueError("matrix bounds do not match")
    entries = {}
    for lam in subpartitions(a.bound):
        for mu in subpartitions(lam):
            total = ZERO
            for nu in partitions_between(mu, lam):
                left = a.entries.get((lam.parts, nu.parts))
                if left is None:
                    continue
                right = b.entries.get((nu.parts, mu.parts))
                if right is None:
                    continue
                total = total + left * right
            if not total.is_zero:
                entries[(lam.parts, mu.parts)] = total
    return PartitionMatrix(a.bound, entries)


def stirling_matrix(kind: str, bound: Partition) -> PartitionMatrix:
    """The matrix of s1 or s2 values on all pairs within the bound."""
    fn = {"s1": s1, "s2": s2, "u": u_matrix, "v": v_matrix}[kind]
    return matrix_from_function(bound, fn)


def stirling_inversion_check(bound: Partition) -> IdentityReport:
    """S1 * S2 = S2 * S1 = identity in the V-algebra on the given bound."""
    m1 = stirling_matrix("s1", bound)
    m2 = stirling_matrix("s2", bound)
    ident = identity_matrix(bound)
    ok = valgebra_multiply(m1, m2) == ident and valgebra_multiply(m2, m1) == ident
    return IdentityReport(
        "stirling-inversion", {"bound": list(bound.parts)}, passed=ok,
        witness=None if ok else "matrix product differs from identity",
    )


def hg_flip_check(mu: Partition) -> IdentityReport:
    """Flip covariance of the pair products h and g."""
    n, wt = mu.n, weight(mu)
    h = h_product(mu)
    ok_h = flip_qt(h) == t_pow(2 * n_stat(mu) - (n - 1) * wt) * h
    g = g_product(mu)
    sign = -1 if wt % 2 else 1
    ok_g = flip_qt(g) == sign * monomial_rf(
        e_q=-wt - n_stat_conj(mu), e_t=n_stat(mu) - (n - 1) * wt
    ) * g
    return IdentityReport(
        "h-g-flip", {"mu": list(mu.parts)}, passed=ok_h and ok_g,
        witness=None if (ok_h and ok_g) else f"h ok: {ok_h}, g ok: {ok_g}",
    )


def ordinary_alpha_stirling(kind: str, nu: Partition, mu: Partition, alpha: int) -> RationalFn:
    """Ordinary alpha-Stirling value: substitute t = q^alpha, then send q -> 1."""
    value = {"s1": s1, "s2": s2}[kind](nu, mu)
    return limit_q_to_1(substitute_t_eq_q_pow(value, alpha), 0)
