"""Limiting well-poised Macdonald functions.

Single-variable skew closed forms w and w-hat, the multivariable recursion
(peeling one argument at a time over horizontal-strip predecessors), the
staircase closed form, vanishing, duality between w and w-hat, and the
q -> 1 limits w-bar that feed the Stirling formulas.

The skew closed form keeps the Pochhammer ratio (1/x)_lam / (1/x)_mu as a
single cancelled product over the strip cells, so no spurious poles appear
when arguments specialize to staircase points.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Union

from .algebra import (
    ONE,
    RationalFn,
    ZERO,
    flip_qt,
    limit_q_to_1,
    monomial_rf,
    q_pow,
    subs_rational,
    t_pow,
)
from .partitions import (
    Partition,
    contains,
    horizontal_strip_predecessors,
    is_horizontal_strip,
    n_stat,
    n_stat_conj,
    weight,
)
from .pochhammer import poch, poch_partition_flipped
from .reports import IdentityReport, equality_report, zero_report

__all__ = [
    "ExponentPair",
    "GenericX",
    "ArgEntry",
    "NotAStripError",
    "h_factor",
    "w_skew_single",
    "w_hat_skew_single",
    "w_multi",
    "w_hat_multi",
    "w_staircase",
    "w_vanishing_check",
    "duality_check",
    "w_bar",
    "staircase_args",
    "generic_staircase_args",
    "clear_cache",
]


class NotAStripError(ValueError):
    """The skew pair is not a horizontal strip."""


@dataclass(frozen=True)
class ExponentPair:
    """Argument entry q^k_q * t^k_t."""

    k_q: int
    k_t: int

    def as_rational(self) -> RationalFn:
        return monomial_rf(e_q=self.k_q, e_t=self.k_t)


@dataclass(frozen=True)
class GenericX:
    """Argument entry X * t^k_t, X standing for a generic q^x."""

    k_t: int

    def as_rational(self) -> RationalFn:
        return monomial_rf(e_t=self.k_t, e_X=1)


ArgEntry = Union[ExponentPair, GenericX, RationalFn]


def _as_rational(entry: ArgEntry) -> RationalFn:
    if isinstance(entry, RationalFn):
        return entry
    return entry.as_rational()


def staircase_args(z: Sequence[int], scale: RationalFn = ONE) -> tuple[RationalFn, ...]:
    """Arguments scale * q^{z_i} * t^{n-i} for an integer vector z."""
    n = len(z)
    return tuple(scale * monomial_rf(e_q=int(z[i]), e_t=n - 1 - i) for i in range(n))


def generic_staircase_args(n: int) -> tuple[RationalFn, ...]:
    """Arguments X * t^{n-i}, the generic staircase specialization."""
    return tuple(monomial_rf(e_t=n - 1 - i, e_X=1) for i in range(n))


@lru_cache(maxsize=None)
def h_factor(lam: Partition, mu: Partition) -> RationalFn:
    """The interlacing factor of the skew closed forms (equals 1 for lam = mu)."""
    if not is_horizontal_strip(lam, mu):
        raise NotAStripError(f"{lam}/{mu} is not a horizontal strip")
    n = lam.n
    num = ONE
    den = ONE
    for j in range(2, n + 1):
        m = mu[j - 2] - lam[j - 1]
        if m == 0:
            continue
        for i in range(1, j):
            num = num * poch(monomial_rf(e_q=mu[i - 1] - mu[j - 2], e_t=j - i), m)
            num = num * poch(monomial_rf(e_q=lam[i - 1] - mu[j - 2] + 1, e_t=j - i - 1), m)
            den = den * poch(monomial_rf(e_q=mu[i - 1] - mu[j - 2] + 1, e_t=j - i - 1), m)
            den = den * poch(monomial_rf(e_q=lam[i - 1] - mu[j - 2], e_t=j - i), m)
    return num / den


def _strip_poch_ratio(lam: Partition, mu: Partition, x: RationalFn) -> RationalFn:
    """(1/x; q, t)_lam / (1/x; q, t)_mu as one cancelled product over strip cells."""
    xinv = x.inverse()
    out = ONE
    for i in range(1, lam.n + 1):
        base = xinv * t_pow(1 - i)
        for k in range(mu[i - 1], lam[i - 1]):
            out = out * (ONE - base * q_pow(k))
    return out


@lru_cache(maxsize=None)
def w_skew_single(lam: Partition, mu: Partition, x: ArgEntry) -> RationalFn:
    """Single-variable skew w; zero when lam/mu is not a horizontal strip."""
    if not is_horizontal_strip(lam, mu):
        return ZERO
    x = _as_rational(x)
    d = weight(lam) - weight(mu)
    sign = -1 if d % 2 else 1
    pref = sign * x ** d * q_pow(n_stat_conj(mu) - n_stat_conj(lam) - d)
    return pref * h_factor(lam, mu) * _strip_poch_ratio(lam, mu, x)


@lru_cache(maxsize=None)
def w_hat_skew_single(lam: Partition, mu: Partition, x: ArgEntry) -> RationalFn:
    """Single-variable skew dual w-hat; zero off horizontal strips."""
    if not is_horizontal_strip(lam, mu):
        return ZERO
    x = _as_rational(x)
    pref = t_pow(-n_stat(lam) + weight(mu) + n_stat(mu))
    return pref * h_factor(lam, mu) * _strip_poch_ratio(lam, mu, x)


_CACHE: dict = {}


def _cache_cap() -> int:
    try:
        return int(os.environ.get("QTSTIRLING_CACHE_SIZE", "200000"))
    except ValueError:
        return 200000


def clear_cache():
    """Drop all memoized w values (observationally transparent)."""
    _CACHE.clear()
    h_factor.cache_clear()
    w_skew_single.cache_clear()
    w_hat_skew_single.cache_clear()


def _w_rec(lam: Partition, xs: tuple[RationalFn, ...], dual: bool) -> RationalFn:
    if not xs:
        return ONE if weight(lam) == 0 else ZERO
    key = (dual, lam.parts, xs)
    hit = _CACHE.get(key)
    if hit is not None:
        return hit
    y = xs[0]
    rest = xs[1:]
    ell = len(rest)
    y_shift = y * t_pow(-ell) if ell else y
    total = ZERO
    for nu in horizontal_strip_predecessors(lam):
        inner = _w_rec(nu, rest, dual)
        if inner.is_zero:
            continue
        skew = (w_hat_skew_single if dual else w_skew_single)(lam, nu, y_shift)
        if skew.is_zero:
            continue
        term = skew * inner
        if not dual:
            term = t_pow(ell * (weight(lam) - weight(nu))) * term
        total = total + term
    if len(_CACHE) >= _cache_cap():
        _CACHE.clear()
    _CACHE[key] = total
    return total


def _argument_tuple(mu: Partition, xs: Sequence[ArgEntry]) -> tuple[RationalFn, ...]:
    xs = tuple(_as_rational(e) for e in xs)
    if len(xs) != mu.n:
        raise ValueError(f"need {mu.n} arguments for {mu}, got {len(xs)}")
    return xs


def w_multi(mu: Partition, xs: Sequence[ArgEntry]) -> RationalFn:
    """w_mu(x_1, ..., x_n; q, t) via the horizontal-strip recursion."""
    return _w_rec(mu, _argument_tuple(mu, xs), dual=False)


def w_hat_multi(mu: Partition, xs: Sequence[ArgEntry]) -> RationalFn:
    """Dual w-hat_mu(x_1, ..., x_n; q, t) via the strip recursion without t-weights."""
    return _w_rec(mu, _argument_tuple(mu, xs), dual=True)


def _w_hat_multi_literal(mu: Partition, xs: Sequence[ArgEntry]) -> RationalFn:
    """The other (rejected) reading of the dual recursion, kept for comparison.

    It repeats the full skew pair lam/mu in the summand instead of passing to
    the intermediate partition, and fails the duality relation; see tests.
    """
    xs = _argument_tuple(mu, xs)

    def rec(lam: Partition, args: tuple[RationalFn, ...]) -> RationalFn:
        if len(args) == 1:
            return w_hat_skew_single(lam, Partition((0,) * lam.n), args[0])
        y, rest = args[0], args[1:]
        ell = len(rest)
        s = ZERO
        for nu in horizontal_strip_predecessors(lam):
            s = s + w_hat_skew_single(lam, nu, y * t_pow(-ell))
        return s * rec(lam, rest)

    return rec(mu, xs)


def w_staircase(mu: Partition, x: ArgEntry) -> RationalFn:
    """Closed form of w_mu at the staircase specialization (x t^{n-1}, ..., x t, x)."""
    x = _as_rational(x)
    out = q_pow(-weight(mu)) * poch_partition_flipped(x, mu)
    for i in range(1, mu.n + 1):
        for j in range(i + 1, mu.n + 1):
            d = mu[i - 1] - mu[j - 1]
            if d:
                out = out * poch(t_pow(j - i + 1), d) / poch(t_pow(j - i), d)
    return out


def w_vanishing_check(mu: Partition, lam: Partition) -> IdentityReport:
    """Check w_mu(q^lam t^delta) = 0 when mu is not contained in lam."""
    if contains(lam, mu):
        raise ValueError("vanishing check requires mu not contained in lam")
    value = w_multi(mu, staircase_args(lam.parts))
    return zero_report("w-vanishing", {"mu": list(mu.parts), "lam": list(lam.parts)}, value)


def duality_check(mu: Partition, xs: Sequence[ArgEntry]) -> IdentityReport:
    """Check w-hat_mu(x; q, t) = q^-|mu| t^{-2n(mu)+(n-1)|mu|} w_mu(1/x; 1/q, 1/t).

    The t-exponent is the one consistent with the recursion-built dual
    function (the normalization the u change-of-basis needs); the variant
    with -(n-1)|mu| belongs to a dual rescaled by t^{2(n-1)|mu|} and fails
    here for every nonempty mu when n > 1.  Both are exercised in tests.
    """
    xs = _argument_tuple(mu, xs)
    n, wt = mu.n, weight(mu)
    lhs = w_hat_multi(mu, xs)
    flipped = subs_rational(w_multi(mu, xs), q=q_pow(-1), t=t_pow(-1), X=monomial_rf(e_X=-1))
    rhs = monomial_rf(e_q=-wt, e_t=-2 * n_stat(mu) + (n - 1) * wt) * flipped
    return equality_report(
        "w-duality", {"mu": list(mu.parts), "args": [str(x) for x in xs]}, lhs, rhs
    )


def w_bar(mu: Partition, lam: Partition, invert: bool = False) -> RationalFn:
    """The q -> 1 limit of (1-q)^{-mu_1} w_mu at the staircase point of lam.

    With invert=True the limit is taken of the parameter-flipped value, i.e.
    of w_mu(q^-lam t^-delta; 1/q, 1/t), which is the form entering the
    first-kind Stirling sum.  A PoleError means the limit genuinely diverges.
    """
    if mu.n != lam.n:
        raise ValueError("mu and lam must share the ambient length")
    value = w_multi(mu, staircase_args(lam.parts))
    if invert:
        value = flip_qt(value)
    return limit_q_to_1(value, mu[0])
