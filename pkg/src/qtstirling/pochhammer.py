"""Finite q-Pochhammer symbols and their partition-indexed extensions.

poch(a, m) is the finite product prod_{k=0}^{m-1} (1 - a q^k), extended to
negative m by poch(a, m) = 1 / poch(a q^m, -m).  The partition symbol is
(a; q, t)_lam = prod_i (a t^(1-i); q)_{lam_i}.  Arguments may be arbitrary
rational functions of q, t, X, and flipped-base symbols (base 1/q, 1/t) are
built from explicit reciprocals so that X is never flipped by accident.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .algebra import ONE, PoleError, Q, RationalFn, monomial_rf, q_pow, t_pow
from .partitions import Partition, n_stat, n_stat_conj, weight
from .reports import IdentityReport, equality_report

__all__ = [
    "PochArgument",
    "poch",
    "poch_partition",
    "poch_partition_flipped",
    "poch_multi",
    "flip_poch_identity_check",
]

#: Pochhammer arguments are plain rational functions.
PochArgument = RationalFn


def poch(a: RationalFn, m: int, base: Optional[RationalFn] = None) -> RationalFn:
    """(a; base)_m with base defaulting to q; negative m inverts the product."""
    if base is None:
        base = Q
    if m >= 0:
        out = ONE
        power = ONE
        for _ in range(m):
            out = out * (ONE - a * power)
            power = power * base
        return out
    inv = poch(a * base ** m, -m, base)
    if inv.is_zero:
        raise PoleError("negative-index Pochhammer hits a vanishing factor")
    return inv.inverse()


def poch_partition(a: RationalFn, lam: Partition) -> RationalFn:
    """(a; q, t)_lam = prod_i (a t^(1-i); q)_{lam_i}."""
    out = ONE
    for i, part in enumerate(lam, start=1):
        out = out * poch(a * t_pow(1 - i), part)
    return out


def poch_partition_flipped(a: RationalFn, lam: Partition) -> RationalFn:
    """(a; 1/q, 1/t)_lam, built with explicit reciprocal bases."""
    out = ONE
    qinv = q_pow(-1)
    for i, part in enumerate(lam, start=1):
        out = out * poch(a * t_pow(i - 1), part, base=qinv)
    return out


def poch_multi(args: Sequence[RationalFn], lam: Partition) -> RationalFn:
    """(a_1, ..., a_k; q, t)_lam, the product over all arguments."""
    out = ONE
    for a in args:
        out = out * poch_partition(a, lam)
    return out


def flip_poch_identity_check(x: RationalFn, mu: Partition) -> IdentityReport:
    """Check x^|mu| (1/x; q, t)_mu = (-1)^|mu| q^{n(mu')} t^{-n(mu)} (x; 1/q, 1/t)_mu."""
    w = weight(mu)
    lhs = x ** w * poch_partition(x.inverse(), mu)
    sign = -1 if w % 2 else 1
    rhs = sign * monomial_rf(e_q=n_stat_conj(mu), e_t=-n_stat(mu)) * poch_partition_flipped(x, mu)
    return equality_report("flip-formula", {"mu": list(mu.parts), "x": str(x)}, lhs, rhs)
