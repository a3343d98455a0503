"""Integer partitions with an explicit ambient length n.

The ambient length is part of a partition's identity: (2, 1) with n = 2 and
(2, 1, 0) with n = 3 index different quantities, because every formula here
depends on n.  Enumeration order is lexicographic ascending throughout, so
reports and tables are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

__all__ = [
    "Partition",
    "staircase",
    "zeros",
    "rectangle",
    "weight",
    "n_stat",
    "n_stat_conj",
    "conjugate",
    "contains",
    "is_horizontal_strip",
    "subpartitions",
    "horizontal_strip_predecessors",
    "partitions_between",
    "partitions_in_box",
]


@dataclass(frozen=True, init=False)
class Partition:
    """Weakly decreasing nonnegative integers; trailing zeros are significant."""

    parts: tuple[int, ...]

    def __init__(self, parts: Sequence[int]):
        parts = tuple(int(p) for p in parts)
        if not parts:
            raise ValueError("ambient length must be at least 1")
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def zeros(n: int) -> Partition:
    """The empty partition with ambient length n."""
    return Partition((0,) * n)


def rectangle(k: int, n: int) -> Partition:
    """The rectangular partition (k, ..., k) with n parts."""
    return Partition((k,) * n)


def staircase(n: int) -> tuple[int, ...]:
    """The staircase delta(n) = (n-1, n-2, ..., 1, 0)."""
    return tuple(range(n - 1, -1, -1))


def weight(mu: Partition) -> int:
    """|mu|, the sum of the parts."""
    return sum(mu.parts)


def n_stat(mu: Partition) -> int:
    """n(mu) = sum (i-1) * mu_i."""
    return sum(i * p for i, p in enumerate(mu.parts))


def n_stat_conj(mu: Partition) -> int:
    """n(mu') = sum binomial(mu_i, 2)."""
    return sum(comb(p, 2) for p in mu.parts)


def conjugate(mu: Partition) -> Partition:
    """The transpose of the Young diagram; ambient length max(mu_1, 1)."""
    m = max(mu.parts[0], 1)
    return Partition(tuple(sum(1 for p in mu.parts if p > i) for i in range(m)))


def _check_ambient(lam: Partition, mu: Partition):
    if lam.n != mu.n:
        raise ValueError(f"ambient mismatch: {lam} has n={lam.n}, {mu} has n={mu.n}")


def contains(lam: Partition, mu: Partition) -> bool:
    """The inclusion ordering: mu_i <= lam_i for all i."""
    _check_ambient(lam, mu)
    return all(m <= l for l, m in zip(lam.parts, mu.parts))


def is_horizontal_strip(lam: Partition, nu: Partition) -> bool:
    """Interlacing lam_1 >= nu_1 >= lam_2 >= nu_2 >= ... >= lam_n >= nu_n."""
    _check_ambient(lam, nu)
    for i in range(lam.n):
        if not lam.parts[i] >= nu.parts[i]:
            return False
        if i + 1 < lam.n and not nu.parts[i] >= lam.parts[i + 1]:
            return False
    return True


def _bounded_descending(bounds: Sequence[tuple[int, int]]) -> Iterator[tuple[int, ...]]:
    # all tuples with lo_i <= v_i <= hi_i, lexicographically ascending
    if not bounds:
        yield ()
        return
    lo, hi = bounds[0]
    for v in range(lo, hi + 1):
        for rest in _bounded_descending([(l, min(h, v)) for l, h in bounds[1:]]):
            yield (v,) + rest


def subpartitions(lam: Partition) -> Iterator[Partition]:
    """All mu with mu contained in lam, lexicographically ascending."""
    for parts in _bounded_descending([(0, p) for p in lam.parts]):
        yield Partition(parts)


def horizontal_strip_predecessors(lam: Partition) -> Iterator[Partition]:
    """All nu such that lam/nu is a horizontal strip, lexicographically ascending."""
    n = lam.n
    bounds = [(lam.parts[i + 1] if i + 1 < n else 0, lam.parts[i]) for i in range(n)]
    # interlacing forces weak decrease, so the plain product of ranges suffices
    ranges = [range(lo, hi + 1) for lo, hi in bounds]

    def rec(i: int, prefix: tuple[int, ...]):
        if i == n:
            yield Partition(prefix)
            return
        for v in ranges[i]:
            yield from rec(i + 1, prefix + (v,))

    yield from rec(0, ())


def partitions_between(mu: Partition, lam: Partition) -> Iterator[Partition]:
    """All nu with mu contained in nu contained in lam, lexicographically ascending."""
    _check_ambient(lam, mu)
    for parts in _bounded_descending(list(zip(mu.parts, lam.parts))):
        yield Partition(parts)


def partitions_in_box(n: int, part_max: int) -> Iterator[Partition]:
    """All partitions with ambient length n and parts at most part_max."""
    yield from subpartitions(rectangle(part_max, n))
